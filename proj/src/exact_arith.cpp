#include "cpt/exact_arith.hpp"

#include <array>
#include <sstream>

namespace cpt {

std::string GaussianInteger::to_string() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = im_.str() + "i";
  if (re_.is_zero()) return imag;
  if (im_ > 0) return re_.str() + "+" + imag;
  return re_.str() + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianInteger& z) { return os << z.to_string(); }

GaussianInteger phase_value(Phase p) {
  switch (p) {
    case Phase::one:
      return {1, 0};
    case Phase::i:
      return {0, 1};
    case Phase::minus_one:
      return {-1, 0};
    case Phase::minus_i:
      return {0, -1};
  }
  return {1, 0};
}

Phase phase_mul(Phase a, Phase b) {
  return static_cast<Phase>((static_cast<int>(a) + static_cast<int>(b)) % 4);
}

std::string phase_label(Phase p) {
  static const std::array<const char*, 4> names{"+1", "+i", "-1", "-i"};
  return names[static_cast<int>(p)];
}

ExactMatrix::ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw UsageError("matrix dimension must be positive");
}

ExactMatrix::ExactMatrix(std::size_t dim, std::vector<GaussianInteger> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw UsageError("matrix dimension must be positive");
  if (entries_.size() != dim * dim) throw UsageError("entry count does not match dimension");
}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
  ExactMatrix m(dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_blocks(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c,
                                     const ExactMatrix& d) {
  const std::size_t h = a.dim();
  if (b.dim() != h || c.dim() != h || d.dim() != h) throw UsageError("block dimensions differ");
  ExactMatrix m(2 * h);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t s = 0; s < h; ++s) {
      m(r, s) = a(r, s);
      m(r, s + h) = b(r, s);
      m(r + h, s) = c(r, s);
      m(r + h, s + h) = d(r, s);
    }
  }
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& z : entries_)
    if (!z.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::scaled(const GaussianInteger& s) const {
  ExactMatrix m = *this;
  for (auto& z : m.entries_) z *= s;
  return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim_ != b.dim_) throw UsageError("matrix dimension mismatch");
  ExactMatrix m = a;
  for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] += b.entries_[k];
  return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim_ != b.dim_) throw UsageError("matrix dimension mismatch");
  ExactMatrix m = a;
  for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] -= b.entries_[k];
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return mat_mul(a, b); }

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < dim_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < dim_; ++c) os << (c ? " " : "") << (*this)(r, c);
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) { return os << m.to_string(); }

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim()) throw UsageError("mat_mul: dimension mismatch");
  const std::size_t n = a.dim();
  ExactMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& lhs = a(r, k);
      if (lhs.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) m(r, c) += lhs * b(k, c);
    }
  }
  return m;
}

ExactMatrix mat_transpose(const ExactMatrix& a) {
  ExactMatrix m(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) m(c, r) = a(r, c);
  return m;
}

ExactMatrix mat_conjugate(const ExactMatrix& a) {
  ExactMatrix m(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) m(r, c) = a(r, c).conj();
  return m;
}

std::optional<Phase> mat_phase_decompose(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim()) throw UsageError("mat_phase_decompose: dimension mismatch");
  for (Phase p : {Phase::one, Phase::i, Phase::minus_one, Phase::minus_i}) {
    if (a == b.scaled(phase_value(p))) return p;
  }
  return std::nullopt;
}

}  // namespace cpt
