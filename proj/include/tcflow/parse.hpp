#pragma once

#include <cctype>
#include <string>

#include "tcflow/errors.hpp"
#include "tcflow/poly.hpp"

namespace tcflow {

// Recursive-descent parser for the polynomial expression grammar:
//
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*      — '/' only by a nonzero constant
//   unary  := '-' unary | power
//   power  := atom ('^' nat)?
//   atom   := integer | 'x' | 'y' | '(' expr ')'
//
// Precedence: ^ > unary minus > * and / > + and -. Rational literals "p/q"
// are the constant-by-constant case of '/'.
namespace detail {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : s_(text) {}

  Poly2 run() {
    Poly2 p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("'+', '-', '*', '/' or end of input");
    return p;
  }

 private:
  Poly2 expr() {
    Poly2 acc = term();
    while (true) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        acc = acc + term();
      } else if (peek() == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly2 term() {
    Poly2 acc = unary();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (peek() == '/') {
        std::size_t at = pos_;
        ++pos_;
        Poly2 d = unary();
        if (!d.is_constant())
          throw NonPolynomial("division by a non-constant at position " + std::to_string(at));
        if (d.is_zero()) throw NonPolynomial("division by zero at position " + std::to_string(at));
        acc = (Rational(1) / d.coeff(0, 0)) * acc;
      } else {
        return acc;
      }
    }
  }

  Poly2 unary() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    return power();
  }

  Poly2 power() {
    Poly2 base = atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    if (peek() == '-') throw NonPolynomial("negative exponent at position " + std::to_string(pos_));
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("nonnegative integer exponent");
    long e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + (peek() - '0');
      if (e > 4096) throw NonPolynomial("exponent too large at position " + std::to_string(pos_));
      ++pos_;
    }
    return base.pow(static_cast<unsigned>(e));
  }

  Poly2 atom() {
    skip_ws();
    char c = peek();
    if (c == 'x') {
      ++pos_;
      return Poly2::var_x();
    }
    if (c == 'y') {
      ++pos_;
      return Poly2::var_y();
    }
    if (c == '(') {
      ++pos_;
      Poly2 p = expr();
      skip_ws();
      if (peek() != ')') fail("')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
      return Poly2::constant(Rational(mpz_class(digits)));
    }
    fail("number, 'x', 'y', '-' or '('");
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& expected) const {
    std::string got = pos_ < s_.size() ? std::string(1, s_[pos_]) : std::string("end of input");
    throw SyntaxError(pos_, expected,
                      "syntax error at position " + std::to_string(pos_) + ": expected " + expected +
                          ", got '" + got + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the polynomial grammar above; total over the grammar, rejects
/// everything else with SyntaxError/NonPolynomial.
inline Poly2 parse_poly(const std::string& text) { return detail::PolyParser(text).run(); }

}  // namespace tcflow
