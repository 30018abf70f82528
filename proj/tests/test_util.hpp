#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sfkit/ideal.hpp"
#include "sfkit/parse.hpp"

namespace sfkit::test {

using QQ = RationalField;
using GF = PrimeField;
using PolyQ = Polynomial<QQ>;
using PolyP = Polynomial<GF>;

inline RingPtr<QQ> qq_ring(std::vector<std::string> vars,
                           MonomialOrder order = MonomialOrder::grevlex()) {
  return make_ring(QQ{}, std::move(vars), std::move(order));
}

inline RingPtr<GF> gf_ring(std::uint64_t p, std::vector<std::string> vars,
                           MonomialOrder order = MonomialOrder::grevlex()) {
  return make_ring(GF(p), std::move(vars), std::move(order));
}

template <class Field>
Polynomial<Field> P(const RingPtr<Field>& r, std::string_view s) {
  return parse_polynomial<Field>(s, r);
}

template <class Field>
Ideal<Field> I(const RingPtr<Field>& r, std::initializer_list<std::string_view> gens) {
  std::vector<Polynomial<Field>> g;
  for (auto s : gens) g.push_back(P(r, s));
  return Ideal<Field>(r, std::move(g));
}

/// Random polynomial with `terms` terms of total degree <= `deg`.
template <class Field>
Polynomial<Field> random_poly(const RingPtr<Field>& r, std::mt19937_64& rng, int terms, int deg,
                              long coef_bound = 9) {
  std::vector<typename Polynomial<Field>::Term> ts;
  std::uniform_int_distribution<int> var(0, static_cast<int>(r->size()) - 1);
  std::uniform_int_distribution<int> dd(0, deg);
  std::uniform_int_distribution<long> cd(-coef_bound, coef_bound);
  for (int k = 0; k < terms; ++k) {
    int d = dd(rng);
    Monomial m;
    for (int s = 0; s < d; ++s) {
      int v = var(rng);
      m.set(v, m[v] + 1);
    }
    ts.push_back({m, r->field().from_int(cd(rng))});
  }
  return Polynomial<Field>::from_terms(r, std::move(ts));
}

/// Ideal equality by mutual normal-form reduction.
template <class Field>
bool same_ideal(const Ideal<Field>& a, const Ideal<Field>& b) {
  for (const auto& g : a.generators())
    if (!b.contains(g.to_ring(b.ring()))) return false;
  for (const auto& g : b.generators())
    if (!a.contains(g.to_ring(a.ring()))) return false;
  return true;
}

}  // namespace sfkit::test
