#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "cpt/exact_arith.hpp"

namespace cpt {

/// Cl(p,q): generators 0..p-1 square to +1, p..p+q-1 square to -1.
struct AlgebraSignature {
  int p = 1;
  int q = 4;

  AlgebraSignature() = default;
  AlgebraSignature(int p_, int q_);

  int dim() const { return p + q; }
  /// Square of generator i, following sigma(p - i) with sigma(n) = +1 iff n > 0.
  int generator_square(int i) const { return (p - i) > 0 ? 1 : -1; }
  std::uint32_t full_mask() const { return (std::uint32_t{1} << dim()) - 1; }

  friend bool operator==(const AlgebraSignature&, const AlgebraSignature&) = default;
};

inline constexpr int kMaxGenerators = 16;

/// Residue of p - q in 0..7.
int type_mod8(const AlgebraSignature& sig);

/// sign * gamma_{i1} ... gamma_{ik} with i1 < ... < ik given by the bits of mask.
struct SignedBlade {
  std::uint32_t mask = 0;
  int sign = 1;

  static SignedBlade one() { return {0, 1}; }
  static SignedBlade minus_one() { return {0, -1}; }
  static SignedBlade generator(int i) { return {std::uint32_t{1} << i, 1}; }

  int grade() const;
  SignedBlade negated() const { return {mask, -sign}; }
  SignedBlade unsigned_blade() const { return {mask, 1}; }

  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

/// Canonical ordering: grade, then mask, then + before -.
struct BladeOrder {
  bool operator()(const SignedBlade& a, const SignedBlade& b) const;
};

/// Label grammar: ['-'] ('1' | 'g' digit+) with strictly ascending digits.
std::string blade_label(const SignedBlade& b);
/// Same labels with a unicode gamma, for markdown output.
std::string blade_label_unicode(const SignedBlade& b);
SignedBlade parse_blade(std::string_view text);
/// Like parse_blade but also checks indices against sig.
SignedBlade parse_blade(std::string_view text, const AlgebraSignature& sig);

SignedBlade blade_mul(const AlgebraSignature& sig, const SignedBlade& a, const SignedBlade& b);
int blade_square_sign(const AlgebraSignature& sig, const SignedBlade& a);
SignedBlade blade_inverse(const AlgebraSignature& sig, const SignedBlade& a);
/// epsilon with b gamma_i b^{-1} = epsilon gamma_i.
int conjugation_sign(const AlgebraSignature& sig, const SignedBlade& b, int i);

}  // namespace cpt
