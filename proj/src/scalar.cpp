#include "qclifford/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "qclifford/errors.hpp"

namespace qcl {

Scalar::Scalar(long num, long den) : re_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  re_.canonicalize();
}

mpq_class Scalar::parse_rational(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  const std::size_t num_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_begin) throw ParseError("expected digits in rational '" + std::string(text) + "'", pos);
  std::string num(text.substr(0, pos));
  if (num.front() == '+') num.erase(0, 1);
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin) throw ParseError("expected denominator in rational '" + std::string(text) + "'", pos);
    den = std::string(text.substr(den_begin, pos - den_begin));
  }
  if (pos != text.size()) throw ParseError("trailing characters in rational '" + std::string(text) + "'", pos);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator in rational '" + std::string(text) + "'", pos);
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (!o.is_real()) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (!o.is_real()) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (o.is_real()) {
    re_ /= o.re_;
    if (!is_real()) im_ /= o.re_;
    return *this;
  }
  const mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
  *this *= o.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

std::string rational_to_string(const mpq_class& q) {
  return q.get_str(10);
}

std::string Scalar::to_string() const {
  if (is_real()) return rational_to_string(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = rational_to_string(im_) + "*i";
  }
  if (sgn(re_) == 0) return imag;
  std::string out = "(" + rational_to_string(re_);
  if (imag.front() != '-') out += "+";
  out += imag;
  out += ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace qcl
