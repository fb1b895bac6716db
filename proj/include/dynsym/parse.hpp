#ifndef DYNSYM_PARSE_HPP
#define DYNSYM_PARSE_HPP

#include <cctype>
#include <string>

#include "dynsym/expr.hpp"

namespace dynsym {

// Recursive-descent parser for the printed operator syntax.  Accepts sums and
// differences of products of: rationals p/q, i, lam, r, s, xK, pK, and
// parenthesized subexpressions, with integer exponents (negative exponents and
// '/' require the operand to be a pure radial scalar).
class ExprParser {
 public:
  ExprParser(std::string text, int dim) : text_(std::move(text)), dim_(dim) {}

  OperatorExpr parse() {
    pos_ = 0;
    OperatorExpr e = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  OperatorExpr parse_sum() {
    OperatorExpr e = parse_product();
    while (true) {
      if (eat('+')) e += parse_product();
      else if (eat('-')) e -= parse_product();
      else return e;
    }
  }

  OperatorExpr parse_product() {
    OperatorExpr e = parse_factor();
    while (true) {
      if (eat('*')) e = e * parse_factor();
      else if (eat('/')) e = e * scalar_inverse(parse_factor());
      else return e;
    }
  }

  OperatorExpr parse_factor() {
    if (eat('-')) return -parse_factor();
    OperatorExpr base = parse_primary();
    if (eat('^')) {
      long n = parse_int();
      base = power(base, n);
    }
    return base;
  }

  long parse_int() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_])) fail("expected integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
      v = v * 10 + (text_[pos_++] - '0');
    return neg ? -v : v;
  }

  OperatorExpr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      OperatorExpr e = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit((unsigned char)c)) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
        digits += text_[pos_++];
      return OperatorExpr::constant(GaussRat(Rational(BigInt(digits))), dim_);
    }
    if (text_.compare(pos_, 3, "lam") == 0) {
      pos_ += 3;
      return OperatorExpr::constant(RadialCoeff(Coeff::lam()), dim_);
    }
    if (c == 'i' && !ident_continues(pos_ + 1)) {
      ++pos_;
      return OperatorExpr::constant(GaussRat::i(), dim_);
    }
    if (c == 'r' && !ident_continues(pos_ + 1)) {
      ++pos_;
      return OperatorExpr::r_pow(1, dim_);
    }
    if (c == 's' && !ident_continues(pos_ + 1)) {
      ++pos_;
      return OperatorExpr::s_pow(1, dim_);
    }
    if ((c == 'x' || c == 'p') && pos_ + 1 < text_.size() &&
        std::isdigit((unsigned char)text_[pos_ + 1])) {
      ++pos_;
      long idx = parse_int();
      return c == 'x' ? OperatorExpr::x((int)idx, dim_) : OperatorExpr::p((int)idx, dim_);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  bool ident_continues(size_t at) const {
    return at < text_.size() && (std::isalnum((unsigned char)text_[at]));
  }

  // exponent by repeated multiplication; negative exponents invert a scalar
  OperatorExpr power(const OperatorExpr& base, long n) {
    if (n == 0) return OperatorExpr::constant(GaussRat(1), dim_);
    OperatorExpr b = n > 0 ? base : scalar_inverse(base);
    OperatorExpr acc = b;
    for (long k = 1; k < std::abs(n); ++k) acc = acc * b;
    return acc;
  }

  OperatorExpr scalar_inverse(const OperatorExpr& e) {
    if (e.term_count() != 1) fail("cannot invert a non-scalar expression");
    const auto& [key, rc] = *e.terms().begin();
    for (int v : key.x)
      if (v != 0) fail("cannot invert an expression containing x");
    for (int v : key.p)
      if (v != 0) fail("cannot invert an expression containing p");
    return OperatorExpr::constant(rc.inverse(), dim_);
  }

  std::string text_;
  int dim_;
  size_t pos_ = 0;
};

inline OperatorExpr parse_expr(const std::string& text, int dim) {
  return ExprParser(text, dim).parse();
}

}  // namespace dynsym

#endif
