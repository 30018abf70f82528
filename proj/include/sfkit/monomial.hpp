#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfkit {

inline constexpr std::size_t kMaxVariables = 32;

/// Exponent vector with cached total degree and support mask.
struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exp{};
  std::uint32_t degree = 0;
  std::uint32_t support = 0;

  Monomial() = default;

  static Monomial from(const std::vector<unsigned>& e) {
    if (e.size() > kMaxVariables) throw std::length_error("too many variables");
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) m.set(i, e[i]);
    return m;
  }

  static Monomial variable(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  unsigned operator[](std::size_t i) const { return exp[i]; }

  void set(std::size_t i, unsigned e) {
    if (e > 0xFFFF) throw std::overflow_error("exponent overflow");
    degree = degree - exp[i] + e;
    exp[i] = static_cast<std::uint16_t>(e);
    if (e) support |= (1u << i);
    else support &= ~(1u << i);
  }

  bool is_one() const { return degree == 0; }

  bool operator==(const Monomial& o) const {
    return degree == o.degree && support == o.support && exp == o.exp;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      unsigned e = unsigned{a.exp[i]} + b.exp[i];
      if (e > 0xFFFF) throw std::overflow_error("exponent overflow");
      m.exp[i] = static_cast<std::uint16_t>(e);
    }
    m.degree = a.degree + b.degree;
    m.support = a.support | b.support;
    return m;
  }

  /// True when this monomial divides `o`.
  bool divides(const Monomial& o) const {
    if ((support & ~o.support) != 0 || degree > o.degree) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }

  /// o / this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      m.exp[i] = static_cast<std::uint16_t>(o.exp[i] - exp[i]);
      if (m.exp[i]) m.support |= (1u << i);
    }
    m.degree = o.degree - degree;
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      m.exp[i] = std::max(a.exp[i], b.exp[i]);
      m.degree += m.exp[i];
    }
    m.support = a.support | b.support;
    return m;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    return (a.support & b.support) == 0;
  }

  std::size_t hash() const {
    std::size_t h = degree;
    for (auto e : exp) h = h * 1000003u + e;
    return h;
  }
};

/// Monomial order over the first `n` variables of a ring.
///
/// `weighted` compares a list of integer weight rows first and breaks ties
/// with grevlex; all rows must be nonnegative so the result is a well order.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, block, weighted };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
  /// Grevlex on variables [0, split) followed by grevlex on [split, n).
  static MonomialOrder block(std::size_t split) {
    MonomialOrder o(Kind::block);
    o.split_ = split;
    return o;
  }
  static MonomialOrder weighted(std::vector<std::vector<int>> rows) {
    for (const auto& r : rows)
      for (int w : r)
        if (w < 0) throw std::invalid_argument("negative weight");
    MonomialOrder o(Kind::weighted);
    o.rows_ = std::move(rows);
    return o;
  }

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  /// Negative, zero, positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b, std::size_t n) const {
    switch (kind_) {
      case Kind::lex:
        for (std::size_t i = 0; i < n; ++i)
          if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
        return 0;
      case Kind::grevlex:
        return grevlex_range(a, b, 0, n);
      case Kind::block: {
        int c = grevlex_range(a, b, 0, split_);
        return c != 0 ? c : grevlex_range(a, b, split_, n);
      }
      case Kind::weighted:
        for (const auto& row : rows_) {
          long wa = 0, wb = 0;
          for (std::size_t i = 0; i < row.size() && i < n; ++i) {
            wa += long{row[i]} * a.exp[i];
            wb += long{row[i]} * b.exp[i];
          }
          if (wa != wb) return wa > wb ? 1 : -1;
        }
        return grevlex_range(a, b, 0, n);
    }
    return 0;
  }

  bool is_degree_compatible() const { return kind_ == Kind::grevlex; }

  std::string key() const {
    switch (kind_) {
      case Kind::lex: return "lex";
      case Kind::grevlex: return "grevlex";
      case Kind::block: return "block:" + std::to_string(split_);
      case Kind::weighted: {
        std::string k = "weighted";
        for (const auto& r : rows_) {
          k += ":";
          for (int w : r) k += std::to_string(w) + ",";
        }
        return k;
      }
    }
    return "";
  }

  bool operator==(const MonomialOrder& o) const { return key() == o.key(); }

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                           std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a.exp[i];
      db += b.exp[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    return 0;
  }

  Kind kind_;
  std::size_t split_ = 0;
  std::vector<std::vector<int>> rows_;
};

}  // namespace sfkit
