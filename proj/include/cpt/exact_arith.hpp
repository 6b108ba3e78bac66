#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cpt/errors.hpp"

namespace cpt {

using BigInt = boost::multiprecision::cpp_int;

/// a + b i with unbounded integer parts.
class GaussianInteger {
 public:
  GaussianInteger() = default;
  GaussianInteger(BigInt re, BigInt im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianInteger(int re, int im = 0) : re_(re), im_(im) {}

  static GaussianInteger i() { return {0, 1}; }

  const BigInt& re() const { return re_; }
  const BigInt& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  GaussianInteger conj() const { return {re_, -im_}; }

  GaussianInteger operator-() const { return {-re_, -im_}; }
  GaussianInteger& operator+=(const GaussianInteger& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianInteger& operator-=(const GaussianInteger& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianInteger& operator*=(const GaussianInteger& o) {
    BigInt r = re_ * o.re_ - im_ * o.im_;
    BigInt m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }

  friend GaussianInteger operator+(GaussianInteger a, const GaussianInteger& b) { return a += b; }
  friend GaussianInteger operator-(GaussianInteger a, const GaussianInteger& b) { return a -= b; }
  friend GaussianInteger operator*(GaussianInteger a, const GaussianInteger& b) { return a *= b; }
  friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;

  std::string to_string() const;

 private:
  BigInt re_ = 0;
  BigInt im_ = 0;
};

std::ostream& operator<<(std::ostream& os, const GaussianInteger& z);

/// The four units of Z[i], written as powers of i.
enum class Phase { one = 0, i = 1, minus_one = 2, minus_i = 3 };

GaussianInteger phase_value(Phase p);
Phase phase_mul(Phase a, Phase b);
std::string phase_label(Phase p);

/// Square dim x dim matrix over Z[i], row-major.
class ExactMatrix {
 public:
  explicit ExactMatrix(std::size_t dim);
  ExactMatrix(std::size_t dim, std::vector<GaussianInteger> entries);

  static ExactMatrix identity(std::size_t dim);
  static ExactMatrix zero(std::size_t dim) { return ExactMatrix(dim); }
  /// [[a, b], [c, d]] from four equally sized blocks.
  static ExactMatrix from_blocks(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c,
                                 const ExactMatrix& d);

  std::size_t dim() const { return dim_; }
  const GaussianInteger& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  GaussianInteger& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }

  bool is_zero() const;
  ExactMatrix scaled(const GaussianInteger& s) const;
  ExactMatrix operator-() const { return scaled(GaussianInteger(-1)); }

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t dim_;
  std::vector<GaussianInteger> entries_;
};

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_transpose(const ExactMatrix& a);
ExactMatrix mat_conjugate(const ExactMatrix& a);

/// The unit phi with a == phi * b, if one exists.
std::optional<Phase> mat_phase_decompose(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace cpt
