#include "cpt/matrix_rep.hpp"

namespace cpt {

ExactMatrix pauli(int k) {
  using G = GaussianInteger;
  switch (k) {
    case 0:
      return ExactMatrix(2, {G(1), G(0), G(0), G(1)});
    case 1:
      return ExactMatrix(2, {G(0), G(1), G(1), G(0)});
    case 2:
      return ExactMatrix(2, {G(0), G(0, -1), G(0, 1), G(0)});
    case 3:
      return ExactMatrix(2, {G(1), G(0), G(0), G(-1)});
    default:
      throw UsageError("Pauli index must be 0..3");
  }
}

GammaBasis build_gamma_basis() {
  const GaussianInteger i = GaussianInteger::i();
  const ExactMatrix one = pauli(0);
  const ExactMatrix zero = ExactMatrix::zero(2);

  const ExactMatrix is1 = pauli(1).scaled(i);
  const ExactMatrix mis2 = pauli(2).scaled(-i);
  const ExactMatrix is3 = pauli(3).scaled(i);

  return GammaBasis{{
      ExactMatrix::from_blocks(one, zero, zero, -one),
      ExactMatrix::from_blocks(zero, is1, is1, zero),
      ExactMatrix::from_blocks(zero, mis2, mis2, zero),
      ExactMatrix::from_blocks(zero, is3, is3, zero),
      ExactMatrix::from_blocks(zero, one, -one, zero),
  }};
}

CliffordReport verify_clifford_relations(const GammaBasis& basis) {
  CliffordReport report;
  const ExactMatrix id = ExactMatrix::identity(4);
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      const ExactMatrix anti = basis.gamma[a] * basis.gamma[b] + basis.gamma[b] * basis.gamma[a];
      const int target = a == b ? 2 * basis.metric[a] : 0;
      ExactMatrix residual = anti - id.scaled(GaussianInteger(target));
      ++report.checked;
      if (!residual.is_zero()) report.failures.push_back({a, b, std::move(residual)});
    }
  }
  return report;
}

ExactMatrix blade_to_matrix(const GammaBasis& basis, const SignedBlade& b) {
  if ((b.mask & ~0x1Fu) != 0) throw UsageError("blade index out of range for the 5-generator basis");
  ExactMatrix m = ExactMatrix::identity(4);
  for (int k = 0; k < 5; ++k)
    if (b.mask & (1u << k)) m = m * basis.gamma[k];
  return b.sign < 0 ? -m : m;
}

ExactMatrix blade_to_faithful_matrix(const GammaBasis& basis, const SignedBlade& b) {
  const ExactMatrix m = blade_to_matrix(basis, b);
  const ExactMatrix zero = ExactMatrix::zero(4);
  return ExactMatrix::from_blocks(m, zero, zero, b.grade() % 2 ? -m : m);
}

SymmetryPattern involution_pattern(const GammaBasis& basis, Involution inv) {
  SymmetryPattern pattern{};
  for (int k = 0; k < 5; ++k) {
    const ExactMatrix& g = basis.gamma[k];
    ExactMatrix image = g;
    if (inv == Involution::transpose) image = mat_transpose(g);
    if (inv == Involution::conjugation) image = mat_conjugate(g);
    if (image == g)
      pattern[k] = 1;
    else if (image == -g)
      pattern[k] = -1;
    else
      throw UsageError("gamma_" + std::to_string(k) + " is not an eigenvector of the involution");
  }
  return pattern;
}

SymmetryPatterns symmetry_patterns(const GammaBasis& basis) {
  return {involution_pattern(basis, Involution::transpose), involution_pattern(basis, Involution::conjugation)};
}

std::string pattern_string(const SymmetryPattern& pattern) {
  std::string s;
  for (int v : pattern) s += v > 0 ? '+' : '-';
  return s;
}

}  // namespace cpt
