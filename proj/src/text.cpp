#include "qclifford/text.hpp"

#include <cctype>

#include "qclifford/errors.hpp"
#include "qclifford/exterior.hpp"

namespace qcl {

namespace {

class Parser {
 public:
  Parser(const ContextPtr& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  Multivector parse() {
    Multivector out = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("multivector syntax: " + what + " in '" + std::string(text_) + "'", pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  Multivector expr() {
    Multivector out(ctx_);
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    Multivector t = term();
    out += negative ? -t : t;
    while (true) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        break;
      }
    }
    return out;
  }

  Multivector term() {
    Multivector out = factor();
    while (accept('*')) {
      Multivector rhs = factor();
      const bool lhs_scalar = out.max_grade() <= 0;
      const bool rhs_scalar = rhs.max_grade() <= 0;
      if (!lhs_scalar && !rhs_scalar) fail("product of two non-scalar factors (use the mul command)");
      out = lhs_scalar ? out.scalar_part() * rhs : out * rhs.scalar_part();
    }
    return out;
  }

  Multivector factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Multivector inner = expr();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Multivector::scalar(ctx_, Scalar(number()));
    if (text_.substr(pos_, 2) == "Id") {
      pos_ += 2;
      return Multivector::scalar(ctx_, Scalar(1));
    }
    if (c == 'i' && !ident_continues(pos_ + 1)) {
      if (ctx_->ring() != Ring::Gaussian) fail("imaginary unit outside the ring Q(i)");
      ++pos_;
      return Multivector::scalar(ctx_, Scalar::imaginary_unit());
    }
    if (c == 'e') return blade();
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  bool ident_continues(std::size_t at) const {
    return at < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[at])) || text_[at] == '_');
  }

  mpq_class number() {
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == den) fail("expected denominator");
    }
    try {
      return Scalar::parse_rational(text_.substr(begin, pos_ - begin));
    } catch (const ParseError&) {
      pos_ = begin;
      fail("malformed rational");
    }
  }

  int generator_index() {
    if (pos_ >= text_.size() || text_[pos_] != 'e') fail("expected generator 'e<k>'");
    ++pos_;
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == begin || pos_ - begin > 3) fail("expected generator index");
    const int k = std::stoi(std::string(text_.substr(begin, pos_ - begin)));
    if (k < 1 || k > ctx_->dim()) {
      pos_ = begin;
      fail("generator index " + std::to_string(k) + " outside 1.." + std::to_string(ctx_->dim()));
    }
    return k;
  }

  Multivector blade() {
    Blade acc = Blade::of(generator_index());
    int sign = 1;
    while (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const int k = generator_index();
      const int s = wedge_sign(acc, Blade::of(k));
      if (s == 0) sign = 0;
      else {
        sign *= s;
        acc = acc.with(k);
      }
    }
    if (ident_continues(pos_)) fail("malformed blade");
    return Multivector::blade(ctx_, acc, Scalar(sign));
  }

  const ContextPtr& ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Multivector parse_multivector(const ContextPtr& ctx, std::string_view text) {
  return Parser(ctx, text).parse();
}

std::string blade_to_text(Blade b) {
  if (b.bits == 0) return "Id";
  std::string out;
  for (int i : b.indices()) {
    if (!out.empty()) out += '^';
    out += 'e' + std::to_string(i);
  }
  return out;
}

std::string to_text(const Multivector& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [b, c] : u.terms()) {
    std::string term;
    if (b.bits == 0) {
      term = c.to_string();
    } else if (c.is_one()) {
      term = blade_to_text(b);
    } else if (c == Scalar(-1)) {
      term = "-" + blade_to_text(b);
    } else {
      term = c.to_string() + "*" + blade_to_text(b);
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace qcl
