#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qcl {

// Exact coefficient: a Gaussian rational re + im*i. In rational-ring contexts
// the imaginary part simply stays zero; arithmetic short-circuits on that.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class re) : re_(std::move(re)) {}
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

  // Parses an optionally signed integer or "p/q". No whitespace, no decimals.
  // Throws ParseError with the offending offset.
  static mpq_class parse_rational(std::string_view text);

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return is_real() && re_ == 1; }

  Scalar conj() const { return is_real() ? *this : Scalar(re_, -im_); }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // "p/q" for reals; otherwise "(p/q+r/s*i)", "r/s*i" or "-i". The multivector
  // text parser reads all of these back.
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

std::string rational_to_string(const mpq_class& q);

}  // namespace qcl
