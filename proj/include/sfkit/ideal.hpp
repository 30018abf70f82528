#pragma once

#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sfkit/algebra.hpp"
#include "sfkit/groebner.hpp"

namespace sfkit {

/// Ideal given by generators, with a write-once cache of reduced Groebner
/// bases keyed by monomial order. Copies share the cache.
template <class Field>
class Ideal {
 public:
  using Poly = Polynomial<Field>;

  explicit Ideal(RingPtr<Field> ring, std::vector<Poly> gens = {}, GroebnerBudget budget = {})
      : ring_(std::move(ring)), budget_(budget), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      gens_.push_back(g.to_ring(ring_));
    }
  }

  const RingPtr<Field>& ring() const { return ring_; }
  const std::vector<Poly>& generators() const& { return gens_; }
  std::vector<Poly> generators() && { return gens_; }
  const GroebnerBudget& budget() const { return budget_; }
  const Field& field() const { return ring_->field(); }

  /// Reduced Groebner basis in `order`; polynomials live in the ring with
  /// that order.
  const std::vector<Poly>& basis(const MonomialOrder& order) const& {
    std::string key = order.key();
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      auto it = cache_->bases.find(key);
      if (it != cache_->bases.end()) return *it->second;
    }
    RingPtr<Field> r = with_order(ring_, order);
    std::vector<Poly> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) gens.push_back(g.to_ring(r));
    auto computed = std::make_shared<const std::vector<Poly>>(groebner_basis(gens, budget_));
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto [it, inserted] = cache_->bases.emplace(key, std::move(computed));
    return *it->second;
  }
  const std::vector<Poly>& basis() const& { return basis(ring_->order()); }
  // A temporary's cache may die with it, so hand out a copy.
  std::vector<Poly> basis(const MonomialOrder& order) && { return static_cast<const Ideal&>(*this).basis(order); }
  std::vector<Poly> basis() && { return static_cast<const Ideal&>(*this).basis(); }

  /// Remainder of `p` modulo the reduced basis in `order`, returned in the
  /// ideal's own ring.
  Poly normal_form(const Poly& p, const MonomialOrder& order) const {
    const auto& gb = basis(order);
    RingPtr<Field> r = with_order(ring_, order);
    return reduce(p.to_ring(r), gb, budget_).to_ring(ring_);
  }
  Poly normal_form(const Poly& p) const { return normal_form(p, ring_->order()); }

  bool contains(const Poly& p) const { return normal_form(p).is_zero(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const {
    const auto& gb = basis();
    return gb.size() == 1 && gb[0].is_constant();
  }

  /// Same ideal, another ring (variables matched by name).
  Ideal in_ring(const RingPtr<Field>& r) const { return Ideal(r, gens_, budget_); }

  Ideal with_generators(std::vector<Poly> extra) const {
    std::vector<Poly> g = gens_;
    for (auto& e : extra) g.push_back(e.to_ring(ring_));
    return Ideal(ring_, std::move(g), budget_);
  }

  std::vector<std::string> rendered_basis() const {
    std::vector<std::string> out;
    for (const auto& g : basis()) out.push_back(g.to_ring(ring_).str());
    return out;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const std::vector<Poly>>> bases;
  };

  RingPtr<Field> ring_;
  std::vector<Poly> gens_;
  GroebnerBudget budget_;
  std::shared_ptr<Cache> cache_;
};

template <class Field>
Ideal<Field> operator+(const Ideal<Field>& a, const Ideal<Field>& b) {
  return a.with_generators(b.generators());
}

template <class Field>
Polynomial<Field> normal_form(const Polynomial<Field>& p, const Ideal<Field>& I,
                              const MonomialOrder& order) {
  return I.normal_form(p, order);
}

/// I ∩ K[remaining variables], via a block elimination order with the
/// dropped variables first.
template <class Field>
Ideal<Field> eliminate(const Ideal<Field>& I, const std::vector<std::string>& drop) {
  const auto& R = I.ring();
  std::vector<std::string> vars;
  for (const auto& d : drop) {
    R->require_index(d);
    if (std::find(vars.begin(), vars.end(), d) == vars.end()) vars.push_back(d);
  }
  std::size_t split = vars.size();
  for (const auto& v : R->variables())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  RingPtr<Field> target = without_variables(R, drop);
  if (split == 0) return I.in_ring(target);
  auto elim_ring = make_ring(R->field(), vars, MonomialOrder::block(split));
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : I.generators()) gens.push_back(g.to_ring(elim_ring));
  auto gb = groebner_basis(gens, I.budget());
  std::vector<Polynomial<Field>> kept;
  for (const auto& g : gb) {
    bool free = true;
    for (std::size_t k = 0; k < split && free; ++k) free = !g.uses_variable(k);
    if (free) kept.push_back(g.to_ring(target));
  }
  return Ideal<Field>(target, std::move(kept), I.budget());
}

/// (I : f^∞) by adding 1 - z f and eliminating z.
template <class Field>
Ideal<Field> saturate(const Ideal<Field>& I, const Polynomial<Field>& f) {
  if (f.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
  const auto& R = I.ring();
  std::string z = R->fresh_name("z");
  RingPtr<Field> Rz = with_appended(R, {z});
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : I.generators()) gens.push_back(g.to_ring(Rz));
  gens.push_back(Polynomial<Field>::from_int(Rz, 1) -
                 Polynomial<Field>::variable(Rz, z) * f.to_ring(Rz));
  Ideal<Field> J(Rz, std::move(gens), I.budget());
  return eliminate(J, {z}).in_ring(R);
}

/// (I : J^∞) as the intersection of (I : g^∞) over generators g of J.
template <class Field>
Ideal<Field> saturate(const Ideal<Field>& I, const Ideal<Field>& J);

/// True iff p^k ∈ I for some k, decided by 1 ∈ I + (1 - z p).
template <class Field>
bool radical_member(const Polynomial<Field>& p, const Ideal<Field>& I) {
  if (p.is_zero()) return true;
  const auto& R = I.ring();
  std::string z = R->fresh_name("z");
  RingPtr<Field> Rz = make_ring(R->field(), [&] {
    auto v = R->variables();
    v.push_back(z);
    return v;
  }());
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : I.generators()) gens.push_back(g.to_ring(Rz));
  gens.push_back(Polynomial<Field>::from_int(Rz, 1) -
                 Polynomial<Field>::variable(Rz, z) * p.to_ring(Rz));
  auto gb = groebner_basis(gens, I.budget());
  return gb.size() == 1 && gb[0].is_constant();
}

/// I ∩ J via elimination of t from t I + (1 - t) J.
template <class Field>
Ideal<Field> intersect(const Ideal<Field>& I, const Ideal<Field>& J) {
  const auto& R = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal<Field>(R, {}, I.budget());
  std::string t = R->fresh_name("t");
  RingPtr<Field> Rt = with_appended(R, {t});
  auto tv = Polynomial<Field>::variable(Rt, t);
  auto one = Polynomial<Field>::from_int(Rt, 1);
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : I.generators()) gens.push_back(tv * g.to_ring(Rt));
  for (const auto& g : J.generators()) gens.push_back((one - tv) * g.to_ring(Rt));
  return eliminate(Ideal<Field>(Rt, std::move(gens), I.budget()), {t}).in_ring(R);
}

/// Monic gcd of a and b, from the generator of (a) ∩ (b).
template <class Field>
Polynomial<Field> polynomial_gcd(const Polynomial<Field>& a, const Polynomial<Field>& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial<Field>::from_int(a.ring(), 1);
  Ideal<Field> l = intersect(Ideal<Field>(a.ring(), {a}), Ideal<Field>(a.ring(), {b}));
  auto gb = l.basis();
  auto q = divide_exact(a * b, gb.front());
  return q->monic();
}

template <class Field>
Ideal<Field> saturate(const Ideal<Field>& I, const Ideal<Field>& J) {
  std::optional<Ideal<Field>> acc;
  for (const auto& g : J.generators()) {
    Ideal<Field> s = saturate(I, g);
    acc = acc ? intersect(*acc, s) : s;
  }
  return acc ? *acc : I;
}

namespace detail {

inline void max_independent(const std::vector<std::uint32_t>& lead_supports, std::size_t n,
                            std::size_t next, std::uint32_t chosen, int size, int& best,
                            std::uint32_t& best_set) {
  if (size + static_cast<int>(n - next) <= best) return;
  if (next == n) {
    best = size;
    best_set = chosen;
    return;
  }
  std::uint32_t with = chosen | (1u << next);
  bool ok = true;
  for (auto s : lead_supports)
    if ((s & ~with) == 0) {
      ok = false;
      break;
    }
  if (ok) max_independent(lead_supports, n, next + 1, with, size + 1, best, best_set);
  max_independent(lead_supports, n, next + 1, chosen, size, best, best_set);
}

}  // namespace detail

/// A largest set of variables containing no leading monomial's support in
/// the grevlex basis, as a bit mask over ring indices; nullopt for the unit
/// ideal. Its size is the dimension of V(I).
template <class Field>
std::optional<std::uint32_t> independent_variables(const Ideal<Field>& I) {
  const auto& gb = I.basis(MonomialOrder::grevlex());
  if (gb.size() == 1 && gb[0].is_constant()) return std::nullopt;
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb) supports.push_back(g.leading_monomial().support);
  int best = -1;
  std::uint32_t set = 0;
  detail::max_independent(supports, I.ring()->size(), 0, 0, 0, best, set);
  return set;
}

/// Dimension of V(I); the unit ideal gives -1.
template <class Field>
int krull_dimension(const Ideal<Field>& I) {
  auto set = independent_variables(I);
  return set ? std::popcount(*set) : -1;
}

/// Vector-space dimension of K[x]/I: nullopt when infinite.
template <class Field>
std::optional<std::size_t> quotient_dimension(const Ideal<Field>& I) {
  int dim = krull_dimension(I);
  if (dim < 0) return std::size_t{0};
  if (dim > 0) return std::nullopt;
  const auto& gb = I.basis(MonomialOrder::grevlex());
  std::size_t n = I.ring()->size();
  // Count standard monomials by depth-first enumeration; finite because
  // every variable has a pure power among the leading monomials.
  std::size_t count = 0;
  std::vector<Monomial> stack{Monomial{}};
  auto standard = [&](const Monomial& m) {
    for (const auto& g : gb)
      if (g.leading_monomial().divides(m)) return false;
    return true;
  };
  while (!stack.empty()) {
    Monomial m = stack.back();
    stack.pop_back();
    ++count;
    // extend only at or after the last used variable to enumerate each once
    std::size_t last = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) last = i;
    for (std::size_t i = last; i < n; ++i) {
      Monomial e = m;
      e.set(i, m[i] + 1);
      if (standard(e)) stack.push_back(e);
    }
  }
  return count;
}

}  // namespace sfkit
