#include "cpt/automorphism.hpp"

#include <algorithm>
#include <iterator>

namespace cpt {

CommutationPattern parse_pattern(std::string_view text) {
  static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  CommutationPattern pattern;
  const std::string original(text);
  while (!text.empty()) {
    if (text.front() == '+') {
      pattern.push_back(1);
      text.remove_prefix(1);
    } else if (text.front() == '-') {
      pattern.push_back(-1);
      text.remove_prefix(1);
    } else if (text.substr(0, kUnicodeMinus.size()) == kUnicodeMinus) {
      pattern.push_back(-1);
      text.remove_prefix(kUnicodeMinus.size());
    } else {
      throw UsageError("pattern must consist of '+' and '-' only: '" + original + "'");
    }
  }
  if (pattern.size() != 5) throw UsageError("pattern must have exactly 5 signs: '" + original + "'");
  return pattern;
}

std::string pattern_string(const CommutationPattern& pattern) {
  std::string s;
  for (int v : pattern) s += v > 0 ? '+' : '-';
  return s;
}

std::vector<SignedBlade> solve_commutation_pattern(const AlgebraSignature& sig, const CommutationPattern& pattern) {
  if (static_cast<int>(pattern.size()) != sig.dim()) throw UsageError("pattern length must equal p + q");
  std::vector<SignedBlade> solutions;
  for (std::uint32_t mask = 0; mask <= sig.full_mask(); ++mask) {
    const SignedBlade b{mask, 1};
    bool match = true;
    for (int i = 0; i < sig.dim() && match; ++i) match = conjugation_sign(sig, b, i) == pattern[i];
    if (match) solutions.push_back(b);
  }
  std::sort(solutions.begin(), solutions.end(), BladeOrder{});
  return solutions;
}

namespace {

SignedBlade even_solution(const AlgebraSignature& sig, const SymmetryPattern& sym, const char* what) {
  const CommutationPattern pattern(sym.begin(), sym.end());
  for (const SignedBlade& b : solve_commutation_pattern(sig, pattern))
    if (b.grade() % 2 == 0) return b;
  throw StructureError(std::string("derivation failure: no even-grade solution for ") + what + " pattern " +
                       pattern_string(pattern));
}

}  // namespace

AutomorphismSet derive_automorphism_set(const GammaBasis& basis) {
  if (!verify_clifford_relations(basis).passed())
    throw StructureError("derivation failure: basis violates the Clifford relations");
  const AlgebraSignature sig = basis.signature();
  const SymmetryPatterns patterns = symmetry_patterns(basis);

  using A = AutomorphismSet;
  A set;
  auto& lit = set.literal;
  lit[A::I] = SignedBlade::one();
  lit[A::W] = SignedBlade{sig.full_mask(), 1};
  lit[A::E] = even_solution(sig, patterns.transpose, "transpose");
  lit[A::Pi] = even_solution(sig, patterns.conjugation, "conjugation");
  lit[A::C] = blade_mul(sig, lit[A::E], lit[A::W]);
  lit[A::K] = blade_mul(sig, lit[A::Pi], lit[A::W]);
  lit[A::S] = blade_mul(sig, lit[A::Pi], lit[A::E]);
  lit[A::F] = blade_mul(sig, lit[A::Pi], lit[A::C]);
  for (std::size_t k = 0; k < lit.size(); ++k) set.representative[k] = lit[k].unsigned_blade();

  static const std::array<const char*, 8> kExpected{"1", "g01234", "g24", "g013", "g13", "g024", "g1234", "g0"};
  std::vector<std::uint32_t> got, want;
  for (std::size_t k = 0; k < 8; ++k) {
    got.push_back(set.representative[k].mask);
    want.push_back(parse_blade(kExpected[k]).mask);
  }
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) throw StructureError("derivation failure: representative set does not match the expected blades");
  return set;
}

bool IntertwiningReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IntertwiningCheck& c) { return c.ok; });
}

std::vector<IntertwiningCheck> IntertwiningReport::failures() const {
  std::vector<IntertwiningCheck> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const IntertwiningCheck& c) { return !c.ok; });
  return out;
}

IntertwiningReport verify_intertwining(const GammaBasis& basis, const AutomorphismSet& set) {
  using A = AutomorphismSet;
  const AlgebraSignature sig = basis.signature();
  const ExactMatrix id = ExactMatrix::identity(4);
  IntertwiningReport report;

  auto matrix_pair = [&](const SignedBlade& b) {
    ExactMatrix m = blade_to_matrix(basis, b);
    ExactMatrix inv = blade_to_matrix(basis, blade_inverse(sig, b));
    report.checks.push_back({std::string(blade_label(b)) + " invertible", -1, m * inv == id});
    return std::pair{std::move(m), std::move(inv)};
  };

  const auto [e, e_inv] = matrix_pair(set.literal[A::E]);
  const auto [pi, pi_inv] = matrix_pair(set.literal[A::Pi]);
  const ExactMatrix w = blade_to_matrix(basis, set.literal[A::W]);

  for (int i = 0; i < 5; ++i) {
    const ExactMatrix& g = basis.gamma[i];
    report.checks.push_back({"E g^T E^-1 = g", i, e * mat_transpose(g) * e_inv == g});
    report.checks.push_back({"Pi g^* Pi^-1 = g", i, pi * mat_conjugate(g) * pi_inv == g});
    report.checks.push_back({"W g = g W", i, w * g == g * w});
  }
  report.checks.push_back({"W^2 = 1", -1, w * w == id});
  return report;
}

}  // namespace cpt
