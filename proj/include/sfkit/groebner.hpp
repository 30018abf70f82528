#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "sfkit/polynomial.hpp"

namespace sfkit {

/// Caps on Buchberger's algorithm. Exceeding either raises ResourceLimitError.
struct GroebnerBudget {
  std::size_t max_basis_size = 20000;
  std::uint64_t max_reduction_steps = 500'000'000;
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

template <class Field>
class Reducer {
 public:
  using Poly = Polynomial<Field>;
  using Term = typename Poly::Term;

  Reducer(const std::vector<const Poly*>& basis, const GroebnerBudget& budget, std::uint64_t& steps)
      : basis_(basis), budget_(budget), steps_(steps) {}

  /// Full reduction; with `top_only`, stops at the first irreducible term.
  /// Pending terms live in an ordered map so each step costs O(|divisor| log n).
  Poly reduce(const Poly& p, bool top_only = false) const {
    if (p.is_zero()) return p;
    const auto& R = *p.ring();
    const Field& F = R.field();
    auto desc = [&R](const Monomial& a, const Monomial& b) { return R.compare(a, b) > 0; };
    std::map<Monomial, typename Field::Element, decltype(desc)> work(desc);
    for (const auto& t : p.terms()) work.emplace(t.mono, t.coef);
    std::vector<Term> rem;
    while (!work.empty()) {
      auto top = work.begin();
      const Poly* div = find_divisor(top->first);
      if (!div) {
        if (top_only) {
          for (auto& [m, c] : work) rem.push_back({m, std::move(c)});
          break;
        }
        rem.push_back({top->first, std::move(top->second)});
        work.erase(top);
        continue;
      }
      if (++steps_ > budget_.max_reduction_steps)
        throw ResourceLimitError("Groebner reduction step budget exceeded");
      Monomial shift = div->leading_monomial().quotient_of(top->first);
      auto c = F.neg(F.div(top->second, div->leading_coefficient()));
      work.erase(top);
      for (auto j = div->terms().begin() + 1; j != div->terms().end(); ++j) {
        Monomial gm = j->mono * shift;
        auto add = F.mul(j->coef, c);
        auto [it, fresh] = work.try_emplace(gm, add);
        if (!fresh) {
          it->second = F.add(it->second, add);
          if (F.is_zero(it->second)) work.erase(it);
        }
      }
    }
    return Poly::from_terms(p.ring(), std::move(rem));
  }

 private:
  const Poly* find_divisor(const Monomial& m) const {
    for (const Poly* g : basis_)
      if (g->leading_monomial().divides(m)) return g;
    return nullptr;
  }

  const std::vector<const Poly*>& basis_;
  const GroebnerBudget& budget_;
  std::uint64_t& steps_;
};

}  // namespace detail

/// Remainder of `p` on full division by `basis` (any list; the result is the
/// normal form when `basis` is a Groebner basis in p's ring order).
template <class Field>
Polynomial<Field> reduce(const Polynomial<Field>& p, const std::vector<Polynomial<Field>>& basis,
                         const GroebnerBudget& budget = {}) {
  std::vector<const Polynomial<Field>*> ptrs;
  for (const auto& g : basis)
    if (!g.is_zero()) ptrs.push_back(&g);
  std::uint64_t steps = 0;
  return detail::Reducer<Field>(ptrs, budget, steps).reduce(p);
}

template <class Field>
Polynomial<Field> s_polynomial(const Polynomial<Field>& f, const Polynomial<Field>& g) {
  const Field& F = f.field();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  auto a = f.mul_term(f.leading_monomial().quotient_of(l), F.inv(f.leading_coefficient()));
  return a.add_scaled(g, F.neg(F.inv(g.leading_coefficient())), g.leading_monomial().quotient_of(l));
}

/// Reduced Groebner basis of the ideal generated by `gens`, with respect to
/// the order of their ring. Output is monic and sorted by increasing leading
/// monomial. Uses Buchberger's algorithm with the Gebauer-Moeller criteria
/// and the sugar selection strategy.
template <class Field>
std::vector<Polynomial<Field>> groebner_basis(const std::vector<Polynomial<Field>>& gens,
                                              const GroebnerBudget& budget = {}) {
  using Poly = Polynomial<Field>;
  std::vector<Poly> input;
  for (const auto& g : gens)
    if (!g.is_zero()) input.push_back(g);
  if (input.empty()) return {};
  const RingPtr<Field> ring = input.front().ring();
  const auto& R = *ring;
  for (const auto& g : input)
    if (!(*g.ring() == R)) throw RingError("generators belong to different rings");

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int sugar;
  };
  std::vector<Poly> polys;
  std::vector<int> sugars;
  std::vector<bool> active;
  std::vector<Pair> pairs;
  std::uint64_t steps = 0;
  std::vector<const Poly*> act_ptrs;
  bool unit = false;

  auto refresh = [&] {
    act_ptrs.clear();
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) act_ptrs.push_back(&polys[k]);
  };

  auto update = [&](Poly h, int sugar) {
    std::size_t hi = polys.size();
    polys.push_back(std::move(h));
    sugars.push_back(sugar);
    active.push_back(true);
    const Monomial& lh = polys[hi].leading_monomial();
    if (lh.is_one()) {
      unit = true;
      return;
    }
    std::vector<std::size_t> cand;
    for (std::size_t k = 0; k < hi; ++k)
      if (active[k]) cand.push_back(k);
    std::vector<Monomial> cl(cand.size());
    for (std::size_t a = 0; a < cand.size(); ++a) cl[a] = lcm(lh, polys[cand[a]].leading_monomial());
    std::vector<char> in_c(cand.size(), 1), in_d(cand.size(), 0);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      in_c[a] = 0;
      bool keep = coprime(lh, polys[cand[a]].leading_monomial());
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < cand.size() && keep; ++b)
          if ((in_c[b] || in_d[b]) && cl[b].divides(cl[a])) keep = false;
      }
      if (keep) in_d[a] = 1;
    }
    std::vector<Pair> kept;
    kept.reserve(pairs.size());
    for (auto& pr : pairs) {
      Monomial l1 = lcm(polys[pr.i].leading_monomial(), lh);
      Monomial l2 = lcm(polys[pr.j].leading_monomial(), lh);
      if (lh.divides(pr.lcm) && l1 != pr.lcm && l2 != pr.lcm) continue;
      kept.push_back(std::move(pr));
    }
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (in_d[a] && !coprime(lh, polys[cand[a]].leading_monomial()))
        kept.push_back({cand[a], hi, cl[a],
                        std::max(sugars[cand[a]] + static_cast<int>(cl[a].degree) -
                                     static_cast<int>(polys[cand[a]].leading_monomial().degree),
                                 sugar + static_cast<int>(cl[a].degree) - static_cast<int>(lh.degree))});
    pairs = std::move(kept);
    for (std::size_t k = 0; k < hi; ++k)
      if (active[k] && lh.divides(polys[k].leading_monomial())) active[k] = false;
    std::size_t count = std::count(active.begin(), active.end(), true);
    if (count > budget.max_basis_size) throw ResourceLimitError("Groebner basis size budget exceeded");
  };

  std::sort(input.begin(), input.end(), [&](const Poly& a, const Poly& b) {
    return R.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (const auto& g : input) {
    refresh();
    Poly r = detail::Reducer<Field>(act_ptrs, budget, steps).reduce(g);
    if (r.is_zero()) continue;
    update(r.monic(), g.total_degree());
    if (unit) return {Poly::from_int(ring, 1)};
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (pairs[k].sugar < pairs[best].sugar ||
          (pairs[k].sugar == pairs[best].sugar && R.compare(pairs[k].lcm, pairs[best].lcm) < 0))
        best = k;
    Pair pr = pairs[best];
    pairs[best] = pairs.back();
    pairs.pop_back();
    Poly s = s_polynomial(polys[pr.i], polys[pr.j]);
    refresh();
    Poly r = detail::Reducer<Field>(act_ptrs, budget, steps).reduce(s);
    if (r.is_zero()) continue;
    update(r.monic(), pr.sugar);
    if (unit) return {Poly::from_int(ring, 1)};
  }

  std::vector<Poly> basis;
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) basis.push_back(polys[k]);
  // interreduce tails
  std::vector<Poly> reduced;
  reduced.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<const Poly*> others;
    for (std::size_t l = 0; l < basis.size(); ++l)
      if (l != k) others.push_back(&basis[l]);
    Poly r = detail::Reducer<Field>(others, budget, steps).reduce(basis[k]);
    reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
    return R.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return reduced;
}

/// True when every S-polynomial of `basis` reduces to zero modulo `basis`.
template <class Field>
bool is_groebner_basis(const std::vector<Polynomial<Field>>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

/// No leading monomial divides a term of another element, and all are monic.
template <class Field>
bool is_reduced_basis(const std::vector<Polynomial<Field>>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].field().is_one(basis[i].leading_coefficient())) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : basis[j].terms())
        if (basis[i].leading_monomial().divides(t.mono)) return false;
    }
  }
  return true;
}

}  // namespace sfkit
