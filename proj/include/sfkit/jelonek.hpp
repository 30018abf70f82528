#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sfkit/errors.hpp"
#include "sfkit/ideal.hpp"

namespace sfkit {

/// Polynomial map f: X -> K^m, X = V(domain) inside the source affine space.
template <class Field>
class PolyMap {
 public:
  using Poly = Polynomial<Field>;

  PolyMap(Ideal<Field> domain, std::vector<Poly> components,
          std::vector<std::string> target_vars = {})
      : domain_(std::move(domain)) {
    if (components.empty()) throw PreconditionError("a map needs at least one component");
    for (auto& c : components) components_.push_back(c.to_ring(domain_.ring()));
    const auto& src = domain_.ring();
    if (target_vars.empty()) target_vars = default_target_names(*src, components_.size());
    if (target_vars.size() != components_.size())
      throw PreconditionError("target variable count does not match component count");
    for (const auto& v : target_vars)
      if (src->has(v)) throw PreconditionError("target variable '" + v + "' clashes with source");
    target_ = make_ring(src->field(), std::move(target_vars));
  }

  /// Map defined on the whole source space.
  static PolyMap affine(const RingPtr<Field>& source, std::vector<Poly> components,
                        std::vector<std::string> target_vars = {}) {
    return PolyMap(Ideal<Field>(source), std::move(components), std::move(target_vars));
  }

  const RingPtr<Field>& source() const { return domain_.ring(); }
  const RingPtr<Field>& target() const { return target_; }
  const Ideal<Field>& domain() const { return domain_; }
  const std::vector<Poly>& components() const { return components_; }
  std::size_t arity() const { return components_.size(); }
  const Field& field() const { return source()->field(); }

  int degree() const {
    int d = 0;
    for (const auto& c : components_) d = std::max(d, c.total_degree());
    return d;
  }

  /// K[x, y] with the source variables first.
  RingPtr<Field> graph_ring(MonomialOrder order = MonomialOrder::grevlex()) const {
    std::vector<std::string> vars = source()->variables();
    for (const auto& v : target_->variables()) vars.push_back(v);
    return make_ring(field(), std::move(vars), std::move(order));
  }

 private:
  static std::vector<std::string> default_target_names(const PolyRing<Field>& src, std::size_t m) {
    for (std::string prefix : {"y", "u", "v", "w", "Y"}) {
      std::vector<std::string> names;
      bool ok = true;
      for (std::size_t i = 1; i <= m && ok; ++i) {
        names.push_back(prefix + std::to_string(i));
        ok = !src.has(names.back());
      }
      if (ok) return names;
    }
    throw PreconditionError("cannot choose target variable names");
  }

  Ideal<Field> domain_;
  std::vector<Poly> components_;
  RingPtr<Field> target_;
};

/// g ∘ f; g's source variables are replaced, in order, by f's components.
template <class Field>
PolyMap<Field> compose(const PolyMap<Field>& g, const PolyMap<Field>& f) {
  if (g.source()->size() != f.arity())
    throw PreconditionError("maps are not composable: g has " +
                            std::to_string(g.source()->size()) + " source variables, f has " +
                            std::to_string(f.arity()) + " components");
  Assignment<Field> a;
  for (std::size_t i = 0; i < f.arity(); ++i) a.emplace(g.source()->variables()[i], f.components()[i]);
  std::vector<Polynomial<Field>> comps;
  for (const auto& c : g.components()) comps.push_back(substitute(c, a));
  return PolyMap<Field>(f.domain(), std::move(comps), g.target()->variables());
}

/// I(X) + (y_1 - f_1, ..., y_m - f_m) in K[x, y].
template <class Field>
Ideal<Field> graph_ideal(const PolyMap<Field>& f) {
  auto R = f.graph_ring();
  std::vector<Polynomial<Field>> gens;
  for (const auto& g : f.domain().generators()) gens.push_back(g.to_ring(R));
  for (std::size_t i = 0; i < f.arity(); ++i)
    gens.push_back(Polynomial<Field>::variable(R, f.target()->variables()[i]) -
                   f.components()[i].to_ring(R));
  return Ideal<Field>(R, std::move(gens), f.domain().budget());
}

/// Part at infinity of the closure of the graph in P^n x K^m: an ideal in
/// K[x, y], homogeneous in x, whose projective zero set (x read as
/// [x_1 : ... : x_n]) is cl(graph f) ∩ {x_0 = 0}.
///
/// Computed from a Groebner basis in an order that compares x-degree first:
/// the x-homogenizations of such a basis generate the saturated
/// homogenization, so the x_0 = 0 slice is generated by the top x-forms.
template <class Field>
Ideal<Field> closure_at_infinity(const PolyMap<Field>& f) {
  Ideal<Field> G = graph_ideal(f);
  const auto& R = G.ring();
  std::size_t n = f.source()->size();
  std::vector<int> weights(R->size(), 0);
  for (std::size_t i = 0; i < n; ++i) weights[i] = 1;
  const auto& gb = G.basis(MonomialOrder::weighted({weights}));
  std::vector<std::size_t> block(n);
  for (std::size_t i = 0; i < n; ++i) block[i] = i;
  std::vector<Polynomial<Field>> tops;
  for (const auto& g : gb) tops.push_back(top_form(g, block).to_ring(R));
  return Ideal<Field>(R, std::move(tops), G.budget());
}

/// The same ideal computed literally: homogenize the graph generators in x
/// with x0, saturate by x0, then set x0 = 0.
template <class Field>
Ideal<Field> closure_at_infinity_by_saturation(const PolyMap<Field>& f) {
  Ideal<Field> G = graph_ideal(f);
  const auto& R = G.ring();
  std::string x0 = R->fresh_name("x0");
  std::vector<std::string> xs = f.source()->variables();
  std::vector<Polynomial<Field>> hom;
  RingPtr<Field> Rh = with_appended(R, {x0});
  for (const auto& g : G.generators()) hom.push_back(homogenize(g, x0, xs).to_ring(Rh));
  Ideal<Field> H(Rh, std::move(hom), G.budget());
  Ideal<Field> sat = saturate(H, Polynomial<Field>::variable(Rh, x0));
  std::vector<Polynomial<Field>> sliced;
  for (const auto& g : sat.generators()) sliced.push_back(set_variable(g, x0, R->field().zero()).to_ring(R));
  return Ideal<Field>(R, std::move(sliced), G.budget());
}

/// Classification of S_f.
template <class Field>
struct SfClassification {
  enum class Kind { empty, hypersurface, other };
  Kind kind = Kind::empty;
  std::optional<Polynomial<Field>> generator;
  int degree = 0;
  int dimension = -1;
};

template <class Field>
struct SfResult {
  RingPtr<Field> target;
  Ideal<Field> ideal;
  SfClassification<Field> classification;
  Ideal<Field> image_closure;
};

/// Fiber cardinality over generic points; nullopt means infinite fibers.
template <class Field>
std::optional<std::size_t> multiplicity(const PolyMap<Field>& f, int trials = 5,
                                        std::uint64_t seed = 0x5eedULL) {
  std::mt19937_64 rng(seed);
  const Field& F = f.field();
  const auto& src = f.source();
  std::optional<std::size_t> best;
  bool any_finite = false;
  for (int k = 0; k < trials; ++k) {
    std::vector<typename Field::Element> c(f.arity());
    if (f.domain().is_zero()) {
      std::vector<typename Field::Element> x(src->size());
      for (auto& v : x) v = F.random(rng, 1000);
      for (std::size_t i = 0; i < f.arity(); ++i) c[i] = f.components()[i].evaluate(x);
    } else {
      for (auto& v : c) v = F.random(rng, 1000);
    }
    std::vector<Polynomial<Field>> gens = f.domain().generators();
    for (std::size_t i = 0; i < f.arity(); ++i)
      gens.push_back(f.components()[i] - Polynomial<Field>::constant(src, c[i]));
    auto q = quotient_dimension(Ideal<Field>(src, std::move(gens), f.domain().budget()));
    if (!q) continue;
    any_finite = true;
    if (*q == 0) continue;
    if (!best || *q < *best) best = q;
  }
  if (!best && any_finite) return std::size_t{0};
  return best;
}

namespace detail {

/// Degree of the reduced hypersurface V(h), h in K[y]: the number of
/// distinct roots of h restricted to random lines, maximized over trials.
template <class Field>
int reduced_degree(const Polynomial<Field>& h, int trials = 4, std::uint64_t seed = 0x11e5ULL) {
  std::mt19937_64 rng(seed);
  const Field& F = h.field();
  auto S = make_ring(F, std::vector<std::string>{"s"});
  auto s = Polynomial<Field>::variable(S, "s");
  int best = 0;
  for (int k = 0; k < trials; ++k) {
    Assignment<Field> a;
    for (const auto& v : h.ring()->variables())
      a.emplace(v, Polynomial<Field>::constant(S, F.random(rng, 1000)) +
                       s * Polynomial<Field>::constant(S, F.random(rng, 1000)));
    auto u = substitute(h, a);
    if (u.is_zero() || u.is_constant()) continue;
    auto g = groebner_basis(std::vector<Polynomial<Field>>{u, u.derivative(0)});
    int common = g.empty() ? 0 : g[0].total_degree();
    best = std::max(best, u.total_degree() - common);
  }
  return best;
}

/// Certifies dominance of a map on all of K^n: the fiber through a point
/// has dimension at least the generic one, so a fiber of dimension n - m
/// forces the image to be m-dimensional. False means "not certified".
template <class Field>
bool dominant_by_fiber(const PolyMap<Field>& f, int trials = 2, std::uint64_t seed = 0xd0ULL) {
  const auto& src = f.source();
  if (!f.domain().is_zero() || f.arity() > src->size()) return false;
  std::mt19937_64 rng(seed);
  const Field& F = f.field();
  for (int k = 0; k < trials; ++k) {
    std::vector<typename Field::Element> x(src->size());
    for (auto& v : x) v = F.random(rng, 1000);
    std::vector<Polynomial<Field>> gens;
    for (const auto& c : f.components())
      gens.push_back(c - Polynomial<Field>::constant(src, c.evaluate(x)));
    int d = krull_dimension(Ideal<Field>(src, std::move(gens), f.domain().budget()));
    if (d == static_cast<int>(src->size() - f.arity())) return true;
  }
  return false;
}

template <class Field>
Ideal<Field> sf_ideal_from_infinity(const PolyMap<Field>& f, const Ideal<Field>& inf) {
  const auto& xs = f.source()->variables();
  std::optional<Ideal<Field>> acc;
  for (const auto& chart : xs) {
    std::vector<Polynomial<Field>> gens;
    RingPtr<Field> Rc = without_variables(inf.ring(), {chart});
    for (const auto& g : inf.generators()) gens.push_back(set_variable(g, chart, f.field().one()));
    Ideal<Field> J(Rc, std::move(gens), inf.budget());
    std::vector<std::string> drop;
    for (const auto& x : xs)
      if (x != chart) drop.push_back(x);
    Ideal<Field> E = eliminate(J, drop).in_ring(f.target());
    if (E.is_unit()) continue;
    acc = acc ? intersect(*acc, E) : E;
  }
  if (!acc) return Ideal<Field>(f.target(), {Polynomial<Field>::from_int(f.target(), 1)}, inf.budget());
  return *acc;
}

}  // namespace detail

/// Zariski closure of f(X): eliminate x from the graph ideal.
template <class Field>
Ideal<Field> image_closure(const PolyMap<Field>& f) {
  if (detail::dominant_by_fiber(f)) return Ideal<Field>(f.target(), {}, f.domain().budget());
  return eliminate(graph_ideal(f), f.source()->variables()).in_ring(f.target());
}

/// The set of points over which f is not proper, with its classification.
/// Throws NotGenericallyFinite when the generic fiber is infinite.
template <class Field>
SfResult<Field> nonproperness_set(const PolyMap<Field>& f) {
  if (!multiplicity(f)) throw NotGenericallyFinite("map is not generically finite (generic fiber is infinite)");
  Ideal<Field> inf = closure_at_infinity(f);
  Ideal<Field> S = detail::sf_ideal_from_infinity(f, inf);
  Ideal<Field> img = image_closure(f);
  SfClassification<Field> cls;
  Ideal<Field> joined = S + img;
  int dim_s = krull_dimension(joined);
  cls.dimension = dim_s;
  if (dim_s < 0) {
    cls.kind = SfClassification<Field>::Kind::empty;
  } else {
    int dim_img = krull_dimension(img);
    if (img.is_zero()) {
      // V(S) = V(h) ∪ V(S / h) with h the gcd of the basis; it is a
      // hypersurface iff the second piece lies inside the first.
      const auto& gb = joined.basis();
      Polynomial<Field> h(f.target());
      for (const auto& g : gb) h = polynomial_gcd(h, g.to_ring(f.target()));
      std::vector<Polynomial<Field>> rest;
      for (const auto& g : gb) rest.push_back(*divide_exact(g.to_ring(f.target()), h));
      if (!h.is_constant() && radical_member(h, Ideal<Field>(f.target(), rest, S.budget()))) {
        cls.kind = SfClassification<Field>::Kind::hypersurface;
        cls.generator = h;
        cls.degree = detail::reduced_degree(h);
      } else {
        cls.kind = SfClassification<Field>::Kind::other;
      }
    } else {
      std::vector<Polynomial<Field>> outside;
      for (const auto& g : joined.basis())
        if (!img.contains(g.to_ring(img.ring()))) outside.push_back(g.to_ring(f.target()));
      if (dim_s == dim_img - 1 && outside.size() == 1) {
        cls.kind = SfClassification<Field>::Kind::hypersurface;
        cls.generator = outside.front();
        cls.degree = outside.front().total_degree();
      } else {
        cls.kind = SfClassification<Field>::Kind::other;
      }
    }
  }
  return SfResult<Field>{f.target(), S, cls, img};
}

/// Integrality of K[X] over K[y]: in a block order with x before y, every
/// x_i must have a basis element whose leading monomial is a pure power of x_i.
template <class Field>
bool is_finite_map(const PolyMap<Field>& f) {
  Ideal<Field> G = graph_ideal(f);
  std::size_t n = f.source()->size();
  const auto& gb = G.basis(MonomialOrder::block(n));
  if (gb.size() == 1 && gb[0].is_constant()) return true;
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (const auto& g : gb) {
      const Monomial& lm = g.leading_monomial();
      if (lm.support == (1u << i)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

/// Outcome of the degree bound deg S_f <= (prod deg f_i - mu) / min deg f_i.
struct DegreeBoundCheck {
  bool applicable = false;
  std::string reason;
  mpq_class bound;
  int actual = 0;
  std::size_t mu = 0;
  bool holds = false;
};

template <class Field>
DegreeBoundCheck hiperc_bound_check(const PolyMap<Field>& f) {
  DegreeBoundCheck out;
  if (!f.domain().is_zero() || f.source()->size() != f.arity()) {
    out.reason = "map is not K^n -> K^n";
    return out;
  }
  auto mu = multiplicity(f);
  if (!mu || *mu == 0) {
    out.reason = "map is not dominant";
    return out;
  }
  SfResult<Field> sf = nonproperness_set(f);
  if (!sf.image_closure.is_zero()) {
    out.reason = "map is not dominant";
    return out;
  }
  if (sf.classification.kind != SfClassification<Field>::Kind::hypersurface) {
    out.reason = sf.classification.kind == SfClassification<Field>::Kind::empty
                     ? "S_f is empty"
                     : "S_f is not a principal hypersurface";
    return out;
  }
  mpz_class prod = 1;
  int mindeg = -1;
  for (const auto& c : f.components()) {
    prod *= c.total_degree();
    mindeg = mindeg < 0 ? c.total_degree() : std::min(mindeg, c.total_degree());
  }
  out.applicable = true;
  out.mu = *mu;
  out.bound = mpq_class(prod - static_cast<unsigned long>(*mu), mindeg);
  out.bound.canonicalize();
  out.actual = sf.classification.degree;
  out.holds = out.actual <= out.bound;
  return out;
}

template <class Field>
struct InclusionReport {
  bool inclusion = true;
  std::optional<Polynomial<Field>> witness;
  bool equality_checked = false;
  bool equality = false;
  std::optional<Polynomial<Field>> reverse_witness;
};

/// Checks S_g ⊆ S_{g∘f} through I(S_{g∘f}) ⊆ √I(S_g), and the reverse
/// inclusion when f is finite.
template <class Field>
InclusionReport<Field> composition_inclusion(const PolyMap<Field>& f, const PolyMap<Field>& g) {
  PolyMap<Field> gf = compose(g, f);
  SfResult<Field> sg = nonproperness_set(g);
  SfResult<Field> sgf = nonproperness_set(gf);
  Ideal<Field> a = sg.ideal;
  Ideal<Field> b = sgf.ideal.in_ring(a.ring());
  InclusionReport<Field> rep;
  for (const auto& h : b.generators())
    if (!radical_member(h, a)) {
      rep.inclusion = false;
      rep.witness = h;
      break;
    }
  if (is_finite_map(f)) {
    rep.equality_checked = true;
    rep.equality = rep.inclusion;
    for (const auto& h : a.generators())
      if (!radical_member(h, b)) {
        rep.equality = false;
        rep.reverse_witness = h;
        break;
      }
  }
  return rep;
}

}  // namespace sfkit
