#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpt/automorphism.hpp"
#include "cpt/blade.hpp"
#include "cpt/group.hpp"
#include "cpt/matrix_rep.hpp"

namespace cpt {

using BladeGroup = Closure<SignedBlade>;

/// G(p,q): closure of the signed generators +-gamma_i under blade_mul.
BladeGroup clifford_group(const AlgebraSignature& sig);

/// phase * gamma_mask.
struct PhasedBlade {
  Phase phase = Phase::one;
  std::uint32_t mask = 0;

  bool is_real() const { return phase == Phase::one || phase == Phase::minus_one; }
  SignedBlade to_signed() const;
  SignedBlade representative() const { return {mask, 1}; }

  friend bool operator==(const PhasedBlade&, const PhasedBlade&) = default;
};

PhasedBlade phased_mul(const AlgebraSignature& sig, const PhasedBlade& a, const PhasedBlade& b);

struct CptPhases {
  Phase p = Phase::one;
  Phase t = Phase::one;
  Phase c = Phase::one;
};

/// Elements in the order 1, P, T, PT, C, CP, CT, CPT. Composites are the
/// literal products PT = P T, CP = C P, CT = C T, CPT = C P T.
struct CptElementSet {
  static constexpr std::array<const char*, 8> kSlots{"1", "P", "T", "PT", "C", "CP", "CT", "CPT"};

  std::array<std::string, 8> names;
  std::array<PhasedBlade, 8> elements;
  CptPhases phases;

  /// Positive blades used as table row/column labels.
  std::array<SignedBlade, 8> representatives() const;
};

CptElementSet make_cpt_set(const std::array<std::string, 8>& names, const SignedBlade& p, const SignedBlade& t,
                           const SignedBlade& c, const CptPhases& phases = {});

/// P = eta_p g0 g4, T = eta_t g0, C = eta_c g2.
CptElementSet build_dt_set(const CptPhases& phases = {});
/// W, E, Pi in the P, T, C slots; validated against the solver's C, K, S, F.
CptElementSet build_ext_set(const AutomorphismSet& derived);

struct SignedCayleyTable {
  std::vector<SignedBlade> reps;
  std::vector<std::vector<SignedBlade>> cells;  // cells[r][c] = reps[r] * reps[c]

  friend bool operator==(const SignedCayleyTable&, const SignedCayleyTable&) = default;
};

SignedCayleyTable cayley_table_signed(const CptElementSet& set);
/// Same table computed from matrices (blade_to_faithful_matrix) and phase decomposition.
SignedCayleyTable cayley_table_matrix(const CptElementSet& set, const GammaBasis& basis);

/// Squares of P, T, PT, C, CP, CT, CPT.
struct CptSignature {
  std::array<int, 7> signs{};

  std::string to_string() const;  // "+ - - - - + +"
  int plus_count() const;
  int minus_count() const;
  friend bool operator==(const CptSignature&, const CptSignature&) = default;
};

CptSignature compute_signature(const CptElementSet& set);

/// Order-16 closure of the set's real elements; StructureError otherwise.
BladeGroup signed_closure(const CptElementSet& set);

struct SubgroupEmbedding {
  bool contained = false;
  std::vector<int> embedding;  // sub index -> ambient index
};

/// Both groups must carry blade labels; abstract labels are a UsageError.
SubgroupEmbedding subgroup_check(const FiniteGroup& sub, const FiniteGroup& amb, const AlgebraSignature& sig);

struct SalingarosReport {
  FiniteGroup construct;  // Q4 o D4 o (Z2 x Z2)
  FiniteGroup g14;
  GroupInvariants construct_invariants;
  GroupInvariants g14_invariants;
  std::optional<GroupHom> isomorphism;

  bool passed() const;
};

SalingarosReport salingaros_check();

}  // namespace cpt
