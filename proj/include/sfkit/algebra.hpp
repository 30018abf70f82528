#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sfkit/polynomial.hpp"

namespace sfkit {

template <class Field>
using Assignment = std::map<std::string, Polynomial<Field>>;

/// Replaces variables of `p` by polynomials of a common target ring.
/// Unassigned variables map to the variable of the same name in the target.
template <class Field>
Polynomial<Field> substitute(const Polynomial<Field>& p, const Assignment<Field>& assignment) {
  const auto& src = p.ring();
  if (assignment.empty()) return p;
  RingPtr<Field> target = assignment.begin()->second.ring();
  for (const auto& [name, q] : assignment) {
    if (!src->has(name)) throw RingError("unknown variable '" + name + "'");
    if (!(*q.ring() == *target)) throw RingError("assigned polynomials live in different rings");
  }
  std::vector<std::optional<Polynomial<Field>>> image(src->size());
  std::uint32_t used = p.support();
  for (std::size_t i = 0; i < src->size(); ++i) {
    const auto& name = src->variables()[i];
    auto it = assignment.find(name);
    if (it != assignment.end()) image[i] = it->second;
    else if (used & (1u << i)) image[i] = Polynomial<Field>::variable(target, name);
  }
  std::vector<std::vector<Polynomial<Field>>> powers(src->size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial<Field>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial<Field>::from_int(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * *image[i]);
    return cache[e];
  };
  Polynomial<Field> acc(target);
  for (const auto& t : p.terms()) {
    Polynomial<Field> term = Polynomial<Field>::constant(target, t.coef);
    for (std::size_t i = 0; i < src->size() && !term.is_zero(); ++i)
      if (t.mono[i]) term = term * power(i, t.mono[i]);
    acc = acc + term;
  }
  return acc;
}

/// Coefficients c_0..c_k in the ring without `var` such that p = sum c_s var^s.
template <class Field>
std::vector<Polynomial<Field>> coefficients_in(const Polynomial<Field>& p, const std::string& var) {
  std::size_t v = p.ring()->require_index(var);
  RingPtr<Field> sub = without_variables(p.ring(), {var});
  int k = p.degree_in(v);
  std::vector<std::vector<typename Polynomial<Field>::Term>> buckets(k < 0 ? 0 : k + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    unsigned e = m[v];
    m.set(v, 0);
    buckets[e].push_back({m, t.coef});
  }
  std::vector<Polynomial<Field>> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    Polynomial<Field> c = Polynomial<Field>::from_terms(p.ring(), std::move(b));
    out.push_back(c.to_ring(sub));
  }
  return out;
}

/// Homogenizes `p` with respect to the variables in `block` (all variables
/// when empty) using the new variable `newvar`, appended to the ring.
template <class Field>
Polynomial<Field> homogenize(const Polynomial<Field>& p, const std::string& newvar,
                             const std::vector<std::string>& block = {}) {
  if (p.ring()->has(newvar)) throw RingError("variable '" + newvar + "' already in ring");
  RingPtr<Field> target = with_appended(p.ring(), {newvar});
  std::vector<std::size_t> idx;
  if (block.empty())
    for (std::size_t i = 0; i < p.ring()->size(); ++i) idx.push_back(i);
  else
    for (const auto& b : block) idx.push_back(p.ring()->require_index(b));
  Polynomial<Field> lifted = p.to_ring(target);
  int top = lifted.degree_in(idx);
  std::size_t h = target->size() - 1;
  std::vector<typename Polynomial<Field>::Term> out;
  for (const auto& t : lifted.terms()) {
    int d = 0;
    for (auto i : idx) d += t.mono[i];
    Monomial m = t.mono;
    m.set(h, static_cast<unsigned>(top - d));
    out.push_back({m, t.coef});
  }
  return Polynomial<Field>::from_terms(target, std::move(out));
}

/// Sets `var` to the constant `value` and drops it from the ring.
template <class Field>
Polynomial<Field> set_variable(const Polynomial<Field>& p, const std::string& var,
                               const typename Field::Element& value) {
  std::size_t v = p.ring()->require_index(var);
  RingPtr<Field> target = without_variables(p.ring(), {var});
  const Field& F = p.field();
  std::vector<typename Polynomial<Field>::Term> out;
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    auto c = t.coef;
    for (unsigned k = 0; k < m[v]; ++k) c = F.mul(c, value);
    m.set(v, 0);
    out.push_back({m, c});
  }
  return Polynomial<Field>::from_terms(p.ring(), std::move(out)).to_ring(target);
}

template <class Field>
Polynomial<Field> dehomogenize(const Polynomial<Field>& p, const std::string& var) {
  return set_variable(p, var, p.field().one());
}

/// q with a = q * b, or nullopt when b does not divide a.
template <class Field>
std::optional<Polynomial<Field>> divide_exact(const Polynomial<Field>& a, const Polynomial<Field>& b) {
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const Field& F = a.field();
  auto inv = F.inv(b.leading_coefficient());
  Polynomial<Field> r = a.to_ring(b.ring());
  std::vector<typename Polynomial<Field>::Term> q;
  while (!r.is_zero()) {
    if (!b.leading_monomial().divides(r.leading_monomial())) return std::nullopt;
    Monomial m = b.leading_monomial().quotient_of(r.leading_monomial());
    auto c = F.mul(r.leading_coefficient(), inv);
    q.push_back({m, c});
    r = r.add_scaled(b, F.neg(c), m);
  }
  return Polynomial<Field>::from_terms(b.ring(), std::move(q));
}

/// Part of `p` whose degree in the variables `block` is maximal.
template <class Field>
Polynomial<Field> top_form(const Polynomial<Field>& p, std::span<const std::size_t> block) {
  int top = p.degree_in(block);
  std::vector<typename Polynomial<Field>::Term> out;
  for (const auto& t : p.terms()) {
    int d = 0;
    for (auto i : block) d += t.mono[i];
    if (d == top) out.push_back(t);
  }
  return Polynomial<Field>::from_terms(p.ring(), std::move(out));
}

/// Sets each named variable to its value and drops it.
template <class Field>
Polynomial<Field> specialize(const Polynomial<Field>& p,
                             const std::map<std::string, typename Field::Element>& values) {
  Polynomial<Field> r = p;
  for (const auto& [name, v] : values) r = set_variable(r, name, v);
  return r;
}

}  // namespace sfkit
