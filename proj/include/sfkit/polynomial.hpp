#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sfkit/ring.hpp"

namespace sfkit {

/// Sparse multivariate polynomial. Terms are kept sorted by the ring's
/// order, largest first, with no zero coefficients.
template <class Field>
class Polynomial {
 public:
  using Element = typename Field::Element;
  struct Term {
    Monomial mono;
    Element coef;
    bool operator==(const Term& o) const { return mono == o.mono && coef == o.coef; }
  };

  explicit Polynomial(RingPtr<Field> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<Field> ring, Element c) {
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({Monomial{}, std::move(c)});
    return p;
  }
  static Polynomial from_int(RingPtr<Field> ring, long c) {
    Element e = ring->field().from_int(c);
    return constant(std::move(ring), std::move(e));
  }
  static Polynomial variable(RingPtr<Field> ring, const std::string& name, unsigned power = 1) {
    std::size_t i = ring->require_index(name);
    return monomial(std::move(ring), Monomial::variable(i, power));
  }
  static Polynomial variable(RingPtr<Field> ring, std::size_t i, unsigned power = 1) {
    return monomial(std::move(ring), Monomial::variable(i, power));
  }
  static Polynomial monomial(RingPtr<Field> ring, Monomial m) {
    Polynomial p(std::move(ring));
    p.terms_.push_back({m, p.field().one()});
    return p;
  }
  static Polynomial monomial(RingPtr<Field> ring, Monomial m, Element c) {
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({m, std::move(c)});
    return p;
  }
  /// Builds a canonical polynomial from arbitrary (unsorted, repeated) terms.
  static Polynomial from_terms(RingPtr<Field> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const RingPtr<Field>& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return is_constant() && !is_zero() && field().is_one(terms_[0].coef); }

  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Element& leading_coefficient() const { return terms_.front().coef; }
  const Term& leading_term() const { return terms_.front(); }

  Element constant_coefficient() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
    for (const auto& t : terms_)
      if (t.mono.is_one()) return t.coef;
    return field().zero();
  }

  Element coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coef;
    return field().zero();
  }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree));
    return d;
  }
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono[var]));
    return d;
  }
  int degree_in(const std::string& var) const { return degree_in(ring_->require_index(var)); }

  /// Degree in a subset of variables.
  int degree_in(std::span<const std::size_t> vars) const {
    int d = -1;
    for (const auto& t : terms_) {
      int s = 0;
      for (auto v : vars) s += t.mono[v];
      d = std::max(d, s);
    }
    return d;
  }

  bool uses_variable(std::size_t var) const {
    for (const auto& t : terms_)
      if (t.mono[var]) return true;
    return false;
  }
  std::uint32_t support() const {
    std::uint32_t s = 0;
    for (const auto& t : terms_) s |= t.mono.support;
    return s;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coef = field().neg(t.coef);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    return a.merge(b, b.field().one(), Monomial{});
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    return a.merge(b, b.field().neg(b.field().one()), Monomial{});
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    const Field& F = a.field();
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coef);
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coef);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, F.mul(s.coef, t.coef)});
    return from_terms(a.ring_, std::move(out));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scale(const Element& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coef = field().mul(t.coef, c);
    return r;
  }

  /// this * c * m; the monomial order is compatible with multiplication so
  /// sortedness is preserved.
  Polynomial mul_term(const Monomial& m, const Element& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coef, c)});
    return r;
  }

  /// this + c * m * g, computed by a single merge.
  Polynomial add_scaled(const Polynomial& g, const Element& c, const Monomial& m) const {
    return merge(g, c, m);
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = from_int(ring_, 1);
    Polynomial b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  Polynomial monic() const {
    if (is_zero() || field().is_one(leading_coefficient())) return *this;
    return scale(field().inv(leading_coefficient()));
  }

  /// Drops the leading term.
  Polynomial tail() const {
    Polynomial r(ring_);
    r.terms_.assign(terms_.begin() + (terms_.empty() ? 0 : 1), terms_.end());
    return r;
  }

  Element evaluate(std::span<const Element> point) const {
    if (point.size() != ring_->size()) throw RingError("point arity mismatch");
    const Field& F = field();
    Element acc = F.zero();
    for (const auto& t : terms_) {
      Element v = t.coef;
      for (std::size_t i = 0; i < point.size(); ++i)
        for (unsigned k = 0; k < t.mono[i]; ++k) v = F.mul(v, point[i]);
      acc = F.add(acc, v);
    }
    return acc;
  }

  /// Same polynomial viewed in another ring, matching variables by name.
  Polynomial to_ring(const RingPtr<Field>& target) const {
    if (target == ring_) return *this;
    if (!(target->field() == ring_->field())) throw RingError("field mismatch");
    std::vector<std::size_t> map(ring_->size(), kMaxVariables);
    std::uint32_t used = support();
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      auto j = target->index_of(ring_->variables()[i]);
      if (j) map[i] = *j;
      else if (used & (1u << i))
        throw RingError("variable '" + ring_->variables()[i] + "' missing from target ring");
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < ring_->size(); ++i)
        if (t.mono[i]) m.set(map[i], t.mono[i]);
      out.push_back({m, t.coef});
    }
    Polynomial r(target);
    r.terms_ = std::move(out);
    if (target->order() == ring_->order() && identity_map(map)) return r;
    r.canonicalize();
    return r;
  }

  Polynomial derivative(std::size_t var) const {
    const Field& F = field();
    std::vector<Term> out;
    for (const auto& t : terms_) {
      unsigned e = t.mono[var];
      if (!e) continue;
      Monomial m = t.mono;
      m.set(var, e - 1);
      Element c = F.mul(t.coef, F.from_int(static_cast<long>(e)));
      if (!F.is_zero(c)) out.push_back({m, c});
    }
    return from_terms(ring_, std::move(out));
  }

  bool operator==(const Polynomial& o) const {
    return ring_->same_variables(*o.ring_) && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Canonical rendering, e.g. `x1^2*x2 - 3/2*y1 + 1`.
  std::string str() const {
    if (terms_.empty()) return "0";
    const Field& F = field();
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      bool neg = F.is_negative(t.coef);
      Element a = neg ? F.neg(t.coef) : t.coef;
      if (first) out += neg ? "-" : "";
      else out += neg ? " - " : " + ";
      first = false;
      std::string mono = render_monomial(t.mono);
      if (mono.empty()) out += F.render(a);
      else if (F.is_one(a)) out += mono;
      else out += F.render(a) + "*" + mono;
    }
    return out;
  }

  std::string render_monomial(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      if (!m[i]) continue;
      if (!s.empty()) s += "*";
      s += ring_->variables()[i];
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

 private:
  void check_ring(const Polynomial& o) const {
    if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
      throw RingError("polynomials belong to different rings");
  }

  static bool identity_map(const std::vector<std::size_t>& map) {
    for (std::size_t i = 0; i < map.size(); ++i)
      if (map[i] != i) return false;
    return true;
  }

  void canonicalize() {
    const PolyRing<Field>& R = *ring_;
    const Field& F = R.field();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size();) {
      Term acc = std::move(terms_[i]);
      std::size_t j = i + 1;
      for (; j < terms_.size() && terms_[j].mono == acc.mono; ++j)
        acc.coef = F.add(acc.coef, terms_[j].coef);
      if (!F.is_zero(acc.coef)) out.push_back(std::move(acc));
      i = j;
    }
    terms_ = std::move(out);
  }

  Polynomial merge(const Polynomial& g, const Element& c, const Monomial& m) const {
    const PolyRing<Field>& R = *ring_;
    const Field& F = R.field();
    Polynomial r(ring_);
    if (F.is_zero(c) || g.is_zero()) {
      r.terms_ = terms_;
      return r;
    }
    r.terms_.reserve(terms_.size() + g.terms_.size());
    bool shift = !m.is_one();
    auto i = terms_.begin();
    auto j = g.terms_.begin();
    while (i != terms_.end() || j != g.terms_.end()) {
      if (j == g.terms_.end()) {
        r.terms_.push_back(*i++);
        continue;
      }
      Monomial gm = shift ? j->mono * m : j->mono;
      int cmp = i == terms_.end() ? -1 : R.compare(i->mono, gm);
      if (cmp > 0) {
        r.terms_.push_back(*i++);
      } else if (cmp < 0) {
        r.terms_.push_back({gm, F.mul(j->coef, c)});
        ++j;
      } else {
        Element s = F.add(i->coef, F.mul(j->coef, c));
        if (!F.is_zero(s)) r.terms_.push_back({gm, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr<Field> ring_;
  std::vector<Term> terms_;
};

}  // namespace sfkit
