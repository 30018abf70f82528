#pragma once

// Parametric curves of bounded degree through points of a variety.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sfkit/errors.hpp"
#include "sfkit/ideal.hpp"
#include "sfkit/solve.hpp"

namespace sfkit {

/// t -> (phi_1(t), ..., phi_n(t)), components in a univariate ring.
template <class Field>
struct ParametricCurve {
  std::vector<Polynomial<Field>> components;

  const RingPtr<Field>& ring() const { return components.front().ring(); }
  int degree() const {
    int d = 0;
    for (const auto& c : components) d = std::max(d, c.total_degree());
    return d;
  }
  bool is_constant() const {
    for (const auto& c : components)
      if (!c.is_constant()) return false;
    return true;
  }
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < components.size(); ++i) s += (i ? ", " : "") + components[i].str();
    return s + ")";
  }
};

/// g(phi(t)) for g over the variables the curve's components stand for.
template <class Field>
Polynomial<Field> pull_back(const Polynomial<Field>& g, const ParametricCurve<Field>& phi) {
  const auto& vars = g.ring()->variables();
  if (vars.size() != phi.components.size())
    throw PreconditionError("curve has " + std::to_string(phi.components.size()) + " components, polynomial has " +
                            std::to_string(vars.size()) + " variables");
  Assignment<Field> a;
  for (std::size_t i = 0; i < vars.size(); ++i) a.emplace(vars[i], phi.components[i]);
  return substitute(g, a).to_ring(phi.ring());
}

/// True when every generator of I vanishes identically on phi.
template <class Field>
bool curve_lies_on(const ParametricCurve<Field>& phi, const Ideal<Field>& I) {
  for (const auto& g : I.generators())
    if (!pull_back(g, phi).is_zero()) return false;
  return true;
}

template <class Field>
struct CurveSearchProblem {
  using Element = typename Field::Element;

  CurveSearchProblem(Ideal<Field> variety, std::vector<Element> base_point, int degree_bound)
      : variety(std::move(variety)), base_point(std::move(base_point)), degree_bound(degree_bound) {
    if (this->degree_bound < 1) throw PreconditionError("degree bound must be at least 1");
    if (this->base_point.size() != this->variety.ring()->size())
      throw PreconditionError("point has " + std::to_string(this->base_point.size()) + " coordinates, ring has " +
                              std::to_string(this->variety.ring()->size()) + " variables");
    for (const auto& g : this->variety.generators())
      if (!this->variety.field().is_zero(g.evaluate(this->base_point)))
        throw PreconditionError("base point is not on the variety: " + g.str() + " does not vanish");
  }

  Ideal<Field> variety;
  std::vector<Element> base_point;
  int degree_bound;
};

/// The coefficient equations of g(a + sum_j b_j t^j) for g in I(X).
template <class Field>
struct CurveSystem {
  Ideal<Field> ideal;  // in the ring of the b variables
  std::vector<std::vector<std::size_t>> unknown;  // unknown[i][j-1]: ring index of b_{i,j}

  const RingPtr<Field>& ring() const { return ideal.ring(); }
  /// Weight of the ring variable with index k: the power of t it multiplies.
  int weight(std::size_t k) const {
    for (const auto& row : unknown)
      for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] == k) return static_cast<int>(j + 1);
    return 0;
  }
  /// Weighted degree of every term of g, or nullopt when they differ.
  std::optional<int> weighted_degree(const Polynomial<Field>& g) const {
    std::optional<int> d;
    for (const auto& t : g.terms()) {
      int w = 0;
      for (std::size_t k = 0; k < ring()->size(); ++k) w += weight(k) * t.mono[k];
      if (d && *d != w) return std::nullopt;
      d = w;
    }
    return d;
  }
};

namespace detail {

inline std::vector<std::string> curve_unknown_names(std::size_t n, int d) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i)
    for (int j = 1; j <= d; ++j) names.push_back("b" + std::to_string(i) + "_" + std::to_string(j));
  return names;
}

}  // namespace detail

template <class Field>
CurveSystem<Field> build_curve_system(const CurveSearchProblem<Field>& prob) {
  const auto& X = prob.variety;
  const std::size_t n = X.ring()->size();
  const int d = prob.degree_bound;
  auto names = detail::curve_unknown_names(n, d);
  RingPtr<Field> B = make_ring(X.field(), names);
  names.push_back("t");
  RingPtr<Field> Bt = make_ring(X.field(), names);
  auto t = Polynomial<Field>::variable(Bt, "t");

  CurveSystem<Field> sys{Ideal<Field>(B, {}, X.budget()), {}};
  Assignment<Field> a;
  for (std::size_t i = 0; i < n; ++i) {
    auto xi = Polynomial<Field>::constant(Bt, prob.base_point[i]);
    std::vector<std::size_t> row;
    for (int j = 1; j <= d; ++j) {
      std::size_t k = i * d + (j - 1);
      row.push_back(k);
      xi = xi + Polynomial<Field>::variable(Bt, k) * t.pow(j);
    }
    sys.unknown.push_back(row);
    a.emplace(X.ring()->variables()[i], xi);
  }
  std::vector<Polynomial<Field>> eqs;
  for (const auto& g : X.generators()) {
    auto coeffs = coefficients_in(substitute(g, a), "t");
    for (std::size_t s = 1; s < coeffs.size(); ++s)
      if (!coeffs[s].is_zero()) eqs.push_back(coeffs[s].to_ring(B));
  }
  sys.ideal = Ideal<Field>(B, std::move(eqs), X.budget());
  return sys;
}

/// Decides whether a nonconstant curve of degree <= d through the base point
/// lies in X over the algebraic closure. The system is homogeneous for the
/// weights of the b_{i,j}, so a nonzero solution exists iff some b_{i,j} is
/// outside the radical.
template <class Field>
bool curve_exists_through_point(const CurveSearchProblem<Field>& prob) {
  auto sys = build_curve_system(prob);
  if (sys.ideal.is_zero()) return true;
  for (std::size_t k = 0; k < sys.ring()->size(); ++k)
    if (!radical_member(Polynomial<Field>::variable(sys.ring(), k), sys.ideal)) return true;
  return false;
}

/// Largest prime accepted by the exhaustive root scans of the witness search.
inline constexpr std::uint64_t kMaxScanPrime = 10000;

namespace detail {

inline void check_scan_prime(std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (p > kMaxScanPrime)
    throw PreconditionError("p = " + std::to_string(p) + " exceeds the root-scan limit " +
                            std::to_string(kMaxScanPrime));
}

template <class Field>
Ideal<PrimeField> ideal_mod_p(const Ideal<Field>& I, const PrimeField& G) {
  RingPtr<PrimeField> R = make_ring(G, I.ring()->variables());
  std::vector<FpPoly> gens;
  for (const auto& g : I.generators()) gens.push_back(to_prime_field(g, R));
  return Ideal<PrimeField>(R, std::move(gens), I.budget());
}

// Nonzero solutions of a system homogeneous for positive variable weights,
// searched stratum by stratum: the first nonzero unknown (in `order`) is
// normalized to 1 when its weight is 1 and only forced nonzero otherwise.
inline std::optional<std::vector<PrimeField::Element>> nonzero_solution(
    const Ideal<PrimeField>& J, const std::vector<std::size_t>& order, const std::vector<int>& weights,
    std::mt19937_64& rng) {
  const auto& R = J.ring();
  std::string w = R->fresh_name("w");
  RingPtr<PrimeField> Rw = with_appended(R, {w});
  SolveBudget budget;
  budget.zero_first = true;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    std::vector<FpPoly> gens;
    for (const auto& g : J.generators()) gens.push_back(g.to_ring(Rw));
    for (std::size_t q = 0; q < pos; ++q) gens.push_back(FpPoly::variable(Rw, order[q]));
    auto b = FpPoly::variable(Rw, order[pos]);
    auto one = FpPoly::from_int(Rw, 1);
    if (weights[order[pos]] == 1) {
      gens.push_back(b - one);
      gens.push_back(FpPoly::variable(Rw, w));
    } else {
      gens.push_back(FpPoly::variable(Rw, w) * b - one);
    }
    auto pt = find_point(Ideal<PrimeField>(Rw, std::move(gens), J.budget()), rng, budget);
    if (pt) {
      pt->pop_back();
      return pt;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Searches for an explicit curve of degree <= d through the base point over
/// F_p. nullopt only means the search found nothing.
template <class Field>
std::optional<ParametricCurve<PrimeField>> find_curve_over_fp(const CurveSearchProblem<Field>& prob, std::uint64_t p,
                                                              std::uint64_t seed = 0xc0ffeeULL) {
  detail::check_scan_prime(p);
  PrimeField G(p);
  Ideal<PrimeField> X = detail::ideal_mod_p(prob.variety, G);
  std::vector<PrimeField::Element> a;
  for (const auto& c : prob.base_point) a.push_back(to_prime_field(c, prob.variety.field(), G));
  CurveSearchProblem<PrimeField> modp(X, a, prob.degree_bound);
  auto sys = build_curve_system(modp);

  const int d = prob.degree_bound;
  const std::size_t n = X.ring()->size();
  std::vector<int> weights(sys.ring()->size());
  for (std::size_t k = 0; k < weights.size(); ++k) weights[k] = sys.weight(k);
  std::vector<std::size_t> order;
  for (int j = 1; j <= d; ++j)
    for (std::size_t i = 0; i < n; ++i) order.push_back(sys.unknown[i][j - 1]);

  std::mt19937_64 rng(seed);
  auto b = detail::nonzero_solution(sys.ideal, order, weights, rng);
  if (!b) return std::nullopt;
  RingPtr<PrimeField> T = make_ring(G, {"t"});
  auto t = FpPoly::variable(T, 0);
  ParametricCurve<PrimeField> phi;
  for (std::size_t i = 0; i < n; ++i) {
    auto c = FpPoly::constant(T, a[i]);
    for (int j = 1; j <= d; ++j) c = c + FpPoly::constant(T, (*b)[sys.unknown[i][j - 1]]) * t.pow(j);
    phi.components.push_back(c);
  }
  if (phi.is_constant() || !curve_lies_on(phi, X))
    throw std::logic_error("curve search produced an invalid witness");
  return phi;
}

/// A line t -> a + t*b inside V(h) for deg h < number of variables.
template <class Field>
std::optional<ParametricCurve<PrimeField>> line_on_hypersurface(const Polynomial<Field>& h,
                                                                const std::vector<typename Field::Element>& a,
                                                                std::uint64_t p, std::uint64_t seed = 0x11eeULL) {
  const std::size_t n = h.ring()->size();
  const int d = h.total_degree();
  if (d < 1) throw PreconditionError("hypersurface needs a nonconstant polynomial");
  if (static_cast<std::size_t>(d) >= n)
    throw PreconditionError("degree " + std::to_string(d) + " is not below the number of variables " +
                            std::to_string(n) + "; lines are not guaranteed");
  if (a.size() != n) throw PreconditionError("point has the wrong number of coordinates");
  if (!h.field().is_zero(h.evaluate(a))) throw PreconditionError("point is not on the hypersurface");
  detail::check_scan_prime(p);
  PrimeField G(p);
  RingPtr<PrimeField> R = make_ring(G, h.ring()->variables());
  FpPoly hp = to_prime_field(h, R);
  std::vector<PrimeField::Element> ap;
  for (const auto& c : a) ap.push_back(to_prime_field(c, h.field(), G));

  // graded pieces of h(a + x)
  Assignment<PrimeField> shift;
  for (std::size_t i = 0; i < n; ++i)
    shift.emplace(R->variables()[i], FpPoly::variable(R, i) + FpPoly::constant(R, ap[i]));
  FpPoly moved = substitute(hp, shift);
  std::vector<std::vector<FpPoly::Term>> pieces(d + 1);
  for (const auto& t : moved.terms()) pieces[t.mono.degree].push_back(t);
  std::vector<FpPoly> gens;
  for (int k = 1; k <= d; ++k) {
    auto g = FpPoly::from_terms(R, std::move(pieces[k]));
    if (!g.is_zero()) gens.push_back(g);
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  auto b = detail::nonzero_solution(Ideal<PrimeField>(R, gens), order, std::vector<int>(n, 1), rng);
  if (!b) return std::nullopt;
  RingPtr<PrimeField> T = make_ring(G, {"t"});
  auto t = FpPoly::variable(T, 0);
  ParametricCurve<PrimeField> line;
  for (std::size_t i = 0; i < n; ++i)
    line.components.push_back(FpPoly::constant(T, ap[i]) + FpPoly::constant(T, (*b)[i]) * t);
  if (!pull_back(hp, line).is_zero()) throw std::logic_error("line search produced an invalid witness");
  return line;
}

template <class Field>
struct SampleVerdict {
  std::vector<typename Field::Element> point;
  bool exists = false;  // exact decision over the algebraic closure
  int settled_at = 0;   // smallest degree tried that produced the verdict
  std::optional<ParametricCurve<PrimeField>> witness;
};

template <class Field>
struct UniruledReport {
  int degree = 0;
  std::vector<SampleVerdict<Field>> samples;
  std::optional<std::size_t> refuted_at;  // index of the first sample without a curve

  bool supported() const { return !refuted_at; }
};

/// Checks every sample for a curve of degree <= d inside V(X). Degrees
/// 1, 2, ..., d are tried in turn since a curve of lower degree already
/// answers the question; at each degree an F_p witness is sought first and
/// the exact test runs when none turns up. Refutation comes only from the
/// exact test at degree d.
template <class Field>
UniruledReport<Field> uniruledness_certificate(const Ideal<Field>& X, int d,
                                               const std::vector<std::vector<typename Field::Element>>& samples,
                                               std::optional<std::uint64_t> p = std::nullopt) {
  UniruledReport<Field> rep;
  rep.degree = d;
  for (const auto& q : samples) CurveSearchProblem<Field>(X, q, d);  // validates every sample first
  for (std::size_t k = 0; k < samples.size(); ++k) {
    SampleVerdict<Field> v;
    v.point = samples[k];
    for (int e = 1; e <= d && !v.exists; ++e) {
      CurveSearchProblem<Field> prob(X, samples[k], e);
      if (p) v.witness = find_curve_over_fp(prob, *p);
      v.exists = v.witness.has_value() || curve_exists_through_point(prob);
      v.settled_at = e;
    }
    if (!v.exists && !rep.refuted_at) rep.refuted_at = k;
    rep.samples.push_back(std::move(v));
  }
  return rep;
}

/// Generic number of parameter values over a point of the curve: the
/// t-degree of gcd over K(s) of phi_i(t) - phi_i(s).
template <class Field>
int parametrization_degree(const ParametricCurve<Field>& phi) {
  if (phi.components.empty() || phi.is_constant()) throw PreconditionError("curve is constant");
  const Field& F = phi.ring()->field();
  RingPtr<Field> TS = make_ring(F, {"t", "s"}, MonomialOrder::lex());
  std::vector<Polynomial<Field>> gens;
  for (const auto& c : phi.components) {
    std::vector<typename Polynomial<Field>::Term> tt, st;
    for (const auto& term : c.terms()) {
      Monomial mt, ms;
      mt.set(0, term.mono.degree);
      ms.set(1, term.mono.degree);
      tt.push_back({mt, term.coef});
      st.push_back({ms, F.neg(term.coef)});
    }
    tt.insert(tt.end(), st.begin(), st.end());
    gens.push_back(Polynomial<Field>::from_terms(TS, std::move(tt)));
  }
  int best = -1;
  for (const auto& g : groebner_basis(gens)) {
    int e = g.degree_in(std::size_t{0});
    if (e > 0 && (best < 0 || e < best)) best = e;
  }
  return best;
}

}  // namespace sfkit
