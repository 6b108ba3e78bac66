#pragma once

#include <array>
#include <string>
#include <vector>

#include "cpt/blade.hpp"
#include "cpt/exact_arith.hpp"

namespace cpt {

/// Five 4x4 spinor matrices for Cl(1,4) together with their metric.
struct GammaBasis {
  std::array<ExactMatrix, 5> gamma;
  std::array<int, 5> metric{1, -1, -1, -1, -1};

  AlgebraSignature signature() const { return {1, 4}; }
};

/// Per-generator sign s with f(gamma_i) = s gamma_i for an involution f.
using SymmetryPattern = std::array<int, 5>;

enum class Involution { identity, transpose, conjugation };

struct RelationFailure {
  int alpha;
  int beta;
  ExactMatrix residual;  // anticommutator minus 2 eta I
};

struct CliffordReport {
  int checked = 0;
  std::vector<RelationFailure> failures;

  bool passed() const { return failures.empty(); }
  int holding() const { return checked - static_cast<int>(failures.size()); }
};

/// Pauli matrices sigma_1..sigma_3 (index 1..3; index 0 is the 2x2 unit).
ExactMatrix pauli(int k);

GammaBasis build_gamma_basis();
CliffordReport verify_clifford_relations(const GammaBasis& basis);

ExactMatrix blade_to_matrix(const GammaBasis& basis, const SignedBlade& b);

/// 8x8 image under gamma_i -> diag(gamma_i, -gamma_i). The 4x4 basis sends the
/// pseudoscalar to a multiple of the identity; this sum separates B from B w.
ExactMatrix blade_to_faithful_matrix(const GammaBasis& basis, const SignedBlade& b);

SymmetryPattern involution_pattern(const GammaBasis& basis, Involution inv);

struct SymmetryPatterns {
  SymmetryPattern transpose;
  SymmetryPattern conjugation;
};
SymmetryPatterns symmetry_patterns(const GammaBasis& basis);

std::string pattern_string(const SymmetryPattern& pattern);

}  // namespace cpt
