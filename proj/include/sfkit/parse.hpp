#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sfkit/polynomial.hpp"

namespace sfkit {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Recursive-descent parser for expressions over + - * / ^ and parentheses.
// Division is only allowed by nonzero constants.
template <class Field>
class ExprParser {
 public:
  ExprParser(std::string_view text, RingPtr<Field> ring) : s_(text), ring_(std::move(ring)) {}

  Polynomial<Field> parse() {
    Polynomial<Field> p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  Polynomial<Field> expr() {
    Polynomial<Field> acc = term();
    for (;;) {
      skip_ws();
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  Polynomial<Field> term() {
    skip_ws();
    bool neg = false;
    while (true) {
      if (accept('-')) neg = !neg;
      else if (accept('+')) continue;
      else break;
      skip_ws();
    }
    Polynomial<Field> acc = power();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        Polynomial<Field> d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scale(ring_->field().inv(d.leading_coefficient()));
      } else {
        break;
      }
    }
    return neg ? -acc : acc;
  }

  Polynomial<Field> power() {
    Polynomial<Field> base = atom();
    skip_ws();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 10000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial<Field> atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial<Field> p = expr();
      skip_ws();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class v(std::string(s_.substr(start, pos_ - start)));
      return Polynomial<Field>::constant(ring_, ring_->field().from_fraction(v, 1));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (!ring_->has(name)) fail("unknown variable '" + name + "'");
      return Polynomial<Field>::variable(ring_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(s_) + "' at column " +
                     std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  RingPtr<Field> ring_;
};

}  // namespace detail

template <class Field>
Polynomial<Field> parse_polynomial(std::string_view text, const RingPtr<Field>& ring) {
  return detail::ExprParser<Field>(text, ring).parse();
}

/// Splits on commas that are not nested inside parentheses.
inline std::vector<std::string> split_top_level(std::string_view text, char sep = ',') {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

/// Parses a field constant written as `a` or `a/b` (optionally signed).
template <class Field>
typename Field::Element parse_scalar(std::string_view text, const Field& field) {
  auto ring = make_ring(field, std::vector<std::string>{});
  Polynomial<Field> p = parse_polynomial<Field>(text, ring);
  return p.is_zero() ? field.zero() : p.leading_coefficient();
}

}  // namespace sfkit
