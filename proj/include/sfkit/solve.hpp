#pragma once

// Rational points of small systems over prime fields.

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sfkit/errors.hpp"
#include "sfkit/ideal.hpp"

namespace sfkit {

using FpPoly = Polynomial<PrimeField>;

/// Coefficient-wise reduction into a prime field ring with the same
/// variables. Rationals must have denominators prime to p; a prime field
/// input must already have characteristic p.
template <class Field>
FpPoly to_prime_field(const Polynomial<Field>& f, const RingPtr<PrimeField>& target) {
  const PrimeField& G = target->field();
  std::vector<FpPoly::Term> out;
  for (const auto& t : f.terms()) {
    if constexpr (Field::is_prime_field) {
      if (f.field().modulus() != G.modulus())
        throw PreconditionError("cannot move a polynomial between different prime fields");
      out.push_back({t.mono, t.coef});
    } else {
      if (G.from_mpz(t.coef.get_den()) == 0)
        throw PreconditionError("coefficient " + f.field().render(t.coef) + " has denominator divisible by " +
                                std::to_string(G.modulus()));
      out.push_back({t.mono, G.from_fraction(t.coef.get_num(), t.coef.get_den())});
    }
  }
  return FpPoly::from_terms(target, std::move(out));
}

template <class Field>
PrimeField::Element to_prime_field(const typename Field::Element& c, const Field& from, const PrimeField& G) {
  if constexpr (Field::is_prime_field) {
    if (from.modulus() != G.modulus())
      throw PreconditionError("cannot move a value between different prime fields");
    return c;
  } else {
    if (G.from_mpz(c.get_den()) == 0)
      throw PreconditionError("value " + from.render(c) + " has denominator divisible by " +
                              std::to_string(G.modulus()));
    return G.from_fraction(c.get_num(), c.get_den());
  }
}

/// Roots of a univariate polynomial over F_p by exhaustive evaluation.
inline std::vector<PrimeField::Element> roots_by_scan(const FpPoly& u) {
  const PrimeField& F = u.field();
  std::vector<PrimeField::Element> dense(static_cast<std::size_t>(std::max(u.total_degree(), 0)) + 1, 0);
  for (const auto& t : u.terms()) dense[t.mono.degree] = t.coef;
  std::vector<PrimeField::Element> out;
  for (std::uint32_t x = 0; x < F.modulus(); ++x) {
    PrimeField::Element acc = 0;
    for (auto it = dense.rbegin(); it != dense.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
    if (acc == 0) out.push_back(x);
  }
  return out;
}

/// Minimal polynomial of the variable with index v modulo a zero-dimensional
/// ideal, as a polynomial in that variable: the first linear dependency among
/// the normal forms of 1, v, v^2, ...
template <class Field>
Polynomial<Field> eliminant(const Ideal<Field>& I, std::size_t v) {
  using Poly = Polynomial<Field>;
  using Element = typename Field::Element;
  const Field& F = I.field();
  const auto& R = I.ring();
  struct Row {
    std::map<Monomial, Element, std::function<bool(const Monomial&, const Monomial&)>> vec;
    std::vector<Element> combo;  // coefficients on v^0 .. v^k
  };
  auto desc = [&R](const Monomial& a, const Monomial& b) { return R->compare(a, b) > 0; };
  std::vector<Row> rows;
  Poly power = Poly::from_int(R, 1);
  const Poly x = Poly::variable(R, v);
  for (std::size_t k = 0;; ++k) {
    if (k > 0) power = I.normal_form(power * x);
    Row cur{decltype(Row::vec)(desc), std::vector<Element>(k + 1, F.zero())};
    for (const auto& t : power.terms()) cur.vec.emplace(t.mono, t.coef);
    cur.combo[k] = F.one();
    for (const auto& row : rows) {
      auto it = cur.vec.find(row.vec.begin()->first);
      if (it == cur.vec.end()) continue;
      Element c = F.neg(F.div(it->second, row.vec.begin()->second));
      for (const auto& [m, e] : row.vec) {
        auto [jt, fresh] = cur.vec.try_emplace(m, F.mul(c, e));
        if (!fresh) {
          jt->second = F.add(jt->second, F.mul(c, e));
          if (F.is_zero(jt->second)) cur.vec.erase(jt);
        }
      }
      for (std::size_t q = 0; q < row.combo.size(); ++q) cur.combo[q] = F.add(cur.combo[q], F.mul(c, row.combo[q]));
    }
    if (cur.vec.empty()) {
      std::vector<typename Poly::Term> ts;
      for (std::size_t q = 0; q <= k; ++q)
        if (!F.is_zero(cur.combo[q])) {
          Monomial m;
          m.set(v, static_cast<unsigned>(q));
          ts.push_back({m, cur.combo[q]});
        }
      return Poly::from_terms(R, std::move(ts)).monic();
    }
    // reduced against all earlier rows, so its pivot is new
    rows.push_back(std::move(cur));
  }
}

struct SolveBudget {
  int max_branches = 4000;
  int free_tries = 6;  // random values tried for each free variable
  bool zero_first = false;
};

namespace detail {

class PointSearch {
 public:
  using Element = PrimeField::Element;

  PointSearch(std::mt19937_64& rng, SolveBudget budget) : rng_(rng), budget_(budget) {}

  // Values for every variable of I's ring, by name.
  std::optional<std::vector<std::pair<std::string, Element>>> solve(const Ideal<PrimeField>& I) {
    if (++branches_ > budget_.max_branches) return std::nullopt;
    const auto& R = I.ring();
    const PrimeField& F = R->field();
    if (R->size() == 0) {
      for (const auto& g : I.generators())
        if (!g.is_zero()) return std::nullopt;
      return std::vector<std::pair<std::string, Element>>{};
    }
    auto free = independent_variables(I);
    if (!free) return std::nullopt;
    if (*free != 0) {
      const std::string v = R->variables()[std::countr_zero(*free)];
      for (int k = 0; k < budget_.free_tries; ++k) {
        Element val = k == 0 && budget_.zero_first ? 0 : F.random(rng_);
        if (auto rest = solve(assign(I, v, val))) {
          rest->emplace_back(v, val);
          return rest;
        }
      }
      return std::nullopt;
    }
    // Zero-dimensional: branch on the roots of one variable's eliminant.
    const std::string v = R->variables().back();
    auto roots = roots_by_scan(eliminant(I, R->size() - 1));
    std::shuffle(roots.begin(), roots.end(), rng_);
    for (auto r : roots)
      if (auto rest = solve(assign(I, v, r))) {
        rest->emplace_back(v, r);
        return rest;
      }
    return std::nullopt;
  }

 private:
  static Ideal<PrimeField> assign(const Ideal<PrimeField>& I, const std::string& v, Element val) {
    RingPtr<PrimeField> sub = without_variables(I.ring(), {v});
    std::vector<FpPoly> gens;
    for (const auto& g : I.generators()) {
      auto h = set_variable(g, v, val);
      if (!h.is_zero()) gens.push_back(h.to_ring(sub));
    }
    return Ideal<PrimeField>(sub, std::move(gens), I.budget());
  }

  std::mt19937_64& rng_;
  SolveBudget budget_;
  int branches_ = 0;
};

}  // namespace detail

/// Some F_p-rational point of V(I), in ring variable order. Free variables
/// are guessed at random, so a miss is not a proof that none exists.
inline std::optional<std::vector<PrimeField::Element>> find_point(const Ideal<PrimeField>& I,
                                                                  std::mt19937_64& rng,
                                                                  SolveBudget budget = {}) {
  detail::PointSearch search(rng, budget);
  auto sol = search.solve(I);
  if (!sol) return std::nullopt;
  std::vector<PrimeField::Element> pt(I.ring()->size(), 0);
  for (const auto& [name, val] : *sol) pt[I.ring()->require_index(name)] = val;
  for (const auto& g : I.generators())
    if (g.evaluate(pt) != 0) throw std::logic_error("point search returned a non-solution");
  return pt;
}

/// Up to `count` distinct random F_p-points of V(I).
inline std::vector<std::vector<PrimeField::Element>> sample_points(const Ideal<PrimeField>& I, std::size_t count,
                                                                   std::mt19937_64& rng, int attempts = 0) {
  std::vector<std::vector<PrimeField::Element>> out;
  if (attempts == 0) attempts = static_cast<int>(4 * count + 8);
  for (int k = 0; k < attempts && out.size() < count; ++k) {
    auto pt = find_point(I, rng);
    if (pt && std::find(out.begin(), out.end(), *pt) == out.end()) out.push_back(*pt);
  }
  return out;
}

}  // namespace sfkit
