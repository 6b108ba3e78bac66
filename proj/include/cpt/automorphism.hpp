#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "cpt/blade.hpp"
#include "cpt/matrix_rep.hpp"

namespace cpt {

/// Required sign per generator: B gamma_i B^{-1} = pattern[i] gamma_i.
using CommutationPattern = std::vector<int>;

/// Parses "++-+-" (ASCII '-' or U+2212).
CommutationPattern parse_pattern(std::string_view text);
std::string pattern_string(const CommutationPattern& pattern);

/// Every positive blade whose conjugation action matches the pattern, in
/// canonical (grade, mask) order. An empty result is a valid answer.
std::vector<SignedBlade> solve_commutation_pattern(const AlgebraSignature& sig, const CommutationPattern& pattern);

/// The eight matrices I, W, E, C, Pi, K, S, F of the automorphism group.
struct AutomorphismSet {
  static constexpr std::array<const char*, 8> kNames{"I", "W", "E", "C", "Pi", "K", "S", "F"};
  enum Slot { I = 0, W, E, C, Pi, K, S, F };

  std::array<SignedBlade, 8> literal;         // as composed (E W, Pi W, Pi E, Pi C)
  std::array<SignedBlade, 8> representative;  // positive-sign blades

  const SignedBlade& operator[](Slot s) const { return representative[s]; }
};

AutomorphismSet derive_automorphism_set(const GammaBasis& basis);

struct IntertwiningCheck {
  std::string relation;  // e.g. "E g^T E^-1 = g"
  int generator = -1;    // -1 for checks not tied to one generator
  bool ok = false;
};

struct IntertwiningReport {
  std::vector<IntertwiningCheck> checks;

  bool passed() const;
  std::vector<IntertwiningCheck> failures() const;
};

/// Exact matrix checks: E g_i^T E^-1 = g_i, Pi g_i^* Pi^-1 = g_i, W central, W^2 = 1.
IntertwiningReport verify_intertwining(const GammaBasis& basis, const AutomorphismSet& set);

}  // namespace cpt
