#pragma once

// Text form of tower elements and a small expression parser.
//
// Grammar (whitespace ignored):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary | primary-started juxtaposition)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' ['-'] integer)?
//   primary := integer | symbol | '(' expr ')'
// The printer emits only explicit '*' so printed text re-parses to the
// identical canonical value.

#include <cctype>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "liecomp/errors.hpp"
#include "liecomp/exact/tower.hpp"

namespace liecomp::exact {

namespace detail {

inline bool needs_parens(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    char c = s[i];
    if (c == '+' || c == '-' || c == '/' || c == ' ' || c == '*') return true;
  }
  return false;
}

inline std::string wrap(const std::string& s) { return needs_parens(s) ? "(" + s + ")" : s; }

}  // namespace detail

inline std::string to_expression(const Rational& r, std::span<const std::string_view> = {}) {
  return r.to_string();
}

template <class K>
std::string to_expression(const RationalFunction<K>& r, std::span<const std::string_view> vars);

template <class K>
std::string to_expression(const Polynomial<K>& p, std::span<const std::string_view> vars) {
  if (p.is_zero()) return "0";
  const std::string_view var = vars.empty() ? std::string_view("x") : vars.front();
  auto inner = vars.empty() ? vars : vars.subspan(1);
  std::string out;
  const auto& c = p.coefficients();
  for (int k = p.degree(); k >= 0; --k) {
    const K& a = c[static_cast<std::size_t>(k)];
    if (a.is_zero()) continue;
    std::string coeff = to_expression(a, inner);
    bool negative = false;
    if (!detail::needs_parens(coeff.substr(coeff[0] == '-' ? 1 : 0)) && coeff[0] == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    std::string power;
    if (k >= 1) power = std::string(var) + (k > 1 ? "^" + std::to_string(k) : "");
    std::string term;
    if (k == 0) {
      term = coeff;
    } else if (coeff == "1") {
      term = power;
    } else {
      term = detail::wrap(coeff) + "*" + power;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

template <class K>
std::string to_expression(const RationalFunction<K>& r, std::span<const std::string_view> vars) {
  std::string n = to_expression(r.numerator(), vars);
  if (r.denominator().is_one()) return n;
  return detail::wrap(n) + "/" + detail::wrap(to_expression(r.denominator(), vars));
}

inline constexpr std::string_view kTowerVars[] = {"n", "h"};

inline std::string to_string(const Qhn& r) { return to_expression(r, kTowerVars); }
inline std::string to_string(const Qh& r) { return to_expression(r, std::span(kTowerVars).subspan(1)); }
/// A univariate function over Q in the named variable.
inline std::string to_string(const RationalFunction<Rational>& r, std::string_view var) {
  std::string_view v[] = {var};
  return to_expression(r, std::span<const std::string_view>(v));
}

/// Recursive-descent parser producing values of the field T.
template <class T>
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const std::map<std::string, T, std::less<>>& symbols)
      : s_(text), symbols_(symbols) {}

  T parse() {
    T v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw MalformedInput("expression '" + std::string(s_) + "': " + why + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  T expr() {
    T v = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        v = v + term();
      } else if (peek('-')) {
        ++pos_;
        v = v - term();
      } else {
        return v;
      }
    }
  }

  T term() {
    T v = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        v = v * unary();
      } else if (peek('/')) {
        ++pos_;
        T d = unary();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else if (starts_primary()) {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  T unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  T power() {
    T base = primary();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    long e = integer_literal();
    if (e > 4096) fail("exponent too large");
    T r(1);
    for (long i = 0; i < e; ++i) r = r * base;
    if (neg) {
      if (r.is_zero()) fail("division by zero");
      r = T(1) / r;
    }
    return r;
  }

  long integer_literal() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 9) fail("integer too long for an exponent");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  T primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return T(Rational::parse(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      auto name = s_.substr(start, pos_ - start);
      auto it = symbols_.find(name);
      if (it == symbols_.end()) {
        pos_ = start;
        fail("unknown symbol '" + std::string(name) + "'");
      }
      return it->second;
    }
    fail("unexpected character");
  }

  std::string_view s_;
  const std::map<std::string, T, std::less<>>& symbols_;
  std::size_t pos_ = 0;
};

/// Parses an element of Q(h)(n) over the symbols n and h.
inline Qhn parse_qhn(std::string_view text) {
  static const std::map<std::string, Qhn, std::less<>> symbols{{"n", symbol_n()}, {"h", symbol_h()}};
  return ExpressionParser<Qhn>(text, symbols).parse();
}

/// Parses an element of Q(h) over the symbol h.
inline Qh parse_qh(std::string_view text) {
  static const std::map<std::string, Qh, std::less<>> symbols{{"h", Qh::variable()}};
  return ExpressionParser<Qh>(text, symbols).parse();
}

/// Parses a univariate rational function over Q in the variable `var`.
inline RationalFunction<Rational> parse_univariate(std::string_view text, std::string_view var) {
  std::map<std::string, RationalFunction<Rational>, std::less<>> symbols{
      {std::string(var), RationalFunction<Rational>::variable()}};
  return ExpressionParser<RationalFunction<Rational>>(text, symbols).parse();
}

}  // namespace liecomp::exact
