#include "cpt/blade.hpp"

#include <bit>

namespace cpt {

namespace {

void check_mask(const AlgebraSignature& sig, const SignedBlade& b) {
  if ((b.mask & ~sig.full_mask()) != 0)
    throw UsageError("blade index out of range for Cl(" + std::to_string(sig.p) + "," +
                     std::to_string(sig.q) + ")");
  if (b.sign != 1 && b.sign != -1) throw UsageError("blade sign must be +1 or -1");
}

// Number of transpositions needed to sort the word a.b into ascending order.
int reorder_parity(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  for (std::uint32_t rest = a >> 1; rest != 0; rest >>= 1) swaps += std::popcount(rest & b);
  return swaps & 1;
}

}  // namespace

AlgebraSignature::AlgebraSignature(int p_, int q_) : p(p_), q(q_) {
  if (p < 0 || q < 0 || p + q < 1) throw UsageError("signature needs p, q >= 0 and p + q >= 1");
  if (p + q > kMaxGenerators) throw UsageError("at most 16 generators are supported");
}

int type_mod8(const AlgebraSignature& sig) { return (((sig.p - sig.q) % 8) + 8) % 8; }

int SignedBlade::grade() const { return std::popcount(mask); }

bool BladeOrder::operator()(const SignedBlade& a, const SignedBlade& b) const {
  const int ga = a.grade();
  const int gb = b.grade();
  if (ga != gb) return ga < gb;
  if (a.mask != b.mask) return a.mask < b.mask;
  return a.sign > b.sign;
}

std::string blade_label(const SignedBlade& b) {
  std::string out = b.sign < 0 ? "-" : "";
  if (b.mask == 0) return out + "1";
  out += 'g';
  for (int i = 0; i < kMaxGenerators; ++i) {
    if (b.mask & (std::uint32_t{1} << i)) {
      // indices above 9 are not expressible as single digits
      if (i > 9) throw UsageError("blade labels support generator indices 0..9 only");
      out += static_cast<char>('0' + i);
    }
  }
  return out;
}

std::string blade_label_unicode(const SignedBlade& b) {
  std::string ascii = blade_label(b);
  auto pos = ascii.find('g');
  if (pos == std::string::npos) return ascii;
  return ascii.substr(0, pos) + "γ" + ascii.substr(pos + 1);
}

SignedBlade parse_blade(std::string_view text) {
  const std::string original(text);
  SignedBlade b;
  if (!text.empty() && text.front() == '-') {
    b.sign = -1;
    text.remove_prefix(1);
  }
  if (text == "1") return b;
  if (text.size() < 2 || text.front() != 'g') throw UsageError("malformed blade label '" + original + "'");
  int last = -1;
  for (char ch : text.substr(1)) {
    if (ch < '0' || ch > '9') throw UsageError("malformed blade label '" + original + "'");
    const int idx = ch - '0';
    if (idx <= last) throw UsageError("blade label digits must be strictly ascending: '" + original + "'");
    last = idx;
    b.mask |= std::uint32_t{1} << idx;
  }
  return b;
}

SignedBlade parse_blade(std::string_view text, const AlgebraSignature& sig) {
  SignedBlade b = parse_blade(text);
  check_mask(sig, b);
  return b;
}

SignedBlade blade_mul(const AlgebraSignature& sig, const SignedBlade& a, const SignedBlade& b) {
  check_mask(sig, a);
  check_mask(sig, b);
  int sign = a.sign * b.sign;
  if (reorder_parity(a.mask, b.mask)) sign = -sign;
  for (std::uint32_t common = a.mask & b.mask; common != 0; common &= common - 1)
    sign *= sig.generator_square(std::countr_zero(common));
  return {a.mask ^ b.mask, sign};
}

int blade_square_sign(const AlgebraSignature& sig, const SignedBlade& a) {
  check_mask(sig, a);
  const int k = a.grade();
  int sign = ((k * (k - 1) / 2) % 2) ? -1 : 1;
  for (std::uint32_t m = a.mask; m != 0; m &= m - 1) sign *= sig.generator_square(std::countr_zero(m));
  return sign;
}

SignedBlade blade_inverse(const AlgebraSignature& sig, const SignedBlade& a) {
  // a a = s 1 with s = +-1, so a^{-1} = s a
  return {a.mask, a.sign * blade_square_sign(sig, a)};
}

int conjugation_sign(const AlgebraSignature& sig, const SignedBlade& b, int i) {
  check_mask(sig, b);
  if (i < 0 || i >= sig.dim()) throw UsageError("generator index out of range");
  const int k = b.grade();
  const bool contains = (b.mask >> i) & 1u;
  const int exponent = contains ? k - 1 : k;
  return (exponent % 2) ? -1 : 1;
}

}  // namespace cpt
