#pragma once

// Polynomial actions of the additive group (K, +) and their fixed points.

#include <optional>
#include <string>
#include <vector>

#include "sfkit/errors.hpp"
#include "sfkit/jelonek.hpp"
#include "sfkit/uniruled.hpp"

namespace sfkit {

/// phi: K x K^n -> K^n, (t, x) -> phi(t, x), components in K[t, x].
template <class Field>
class AdditiveAction {
 public:
  using Poly = Polynomial<Field>;

  /// `components` may live in any ring whose variables are among t and the
  /// ambient ones.
  AdditiveAction(RingPtr<Field> ambient, std::string t, std::vector<Poly> components)
      : ambient_(std::move(ambient)), t_(std::move(t)) {
    if (ambient_->has(t_)) throw PreconditionError("group parameter '" + t_ + "' clashes with a coordinate");
    if (components.size() != ambient_->size())
      throw PreconditionError("action has " + std::to_string(components.size()) + " components on " +
                              std::to_string(ambient_->size()) + " coordinates");
    std::vector<std::string> vars{t_};
    for (const auto& v : ambient_->variables()) vars.push_back(v);
    ring_ = make_ring(ambient_->field(), std::move(vars));
    for (auto& c : components) map_.push_back(c.to_ring(ring_));
  }

  const RingPtr<Field>& ambient() const { return ambient_; }
  const RingPtr<Field>& ring() const { return ring_; }
  const std::string& parameter() const { return t_; }
  const std::vector<Poly>& components() const { return map_; }
  const Field& field() const { return ambient_->field(); }
  int t_degree() const {
    int d = 0;
    for (const auto& c : map_) d = std::max(d, c.degree_in(std::size_t{0}));
    return d;
  }
  /// phi_i(t, x) - x_i in K[t, x].
  Poly displacement(std::size_t i) const { return map_[i] - Poly::variable(ring_, i + 1); }

 private:
  RingPtr<Field> ambient_;
  std::string t_;
  RingPtr<Field> ring_;
  std::vector<Poly> map_;
};

template <class Field>
struct ActionCheck {
  enum class Axiom { none, identity, cocycle };
  Axiom broken = Axiom::none;
  std::size_t component = 0;
  std::optional<Polynomial<Field>> witness;  // the nonzero difference

  bool valid() const { return broken == Axiom::none; }
};

/// Checks phi(0, x) = x and phi(s, phi(t, x)) = phi(s + t, x) exactly.
template <class Field>
ActionCheck<Field> validate_action(const AdditiveAction<Field>& phi) {
  using Poly = Polynomial<Field>;
  ActionCheck<Field> out;
  const auto& R = phi.ring();
  const Field& F = phi.field();
  for (std::size_t i = 0; i < phi.components().size(); ++i) {
    Poly at0 = set_variable(phi.components()[i], phi.parameter(), F.zero());
    Poly diff = at0 - Poly::variable(at0.ring(), phi.ambient()->variables()[i]);
    if (!diff.is_zero()) {
      out.broken = ActionCheck<Field>::Axiom::identity;
      out.component = i;
      out.witness = diff;
      return out;
    }
  }
  std::string s = R->fresh_name("s");
  RingPtr<Field> S = with_appended(R, {s});  // t, x, s
  Poly sv = Poly::variable(S, s), tv = Poly::variable(S, phi.parameter());
  Assignment<Field> inner{{phi.parameter(), sv}}, shifted{{phi.parameter(), sv + tv}};
  for (std::size_t j = 0; j < phi.components().size(); ++j)
    inner.emplace(phi.ambient()->variables()[j], phi.components()[j].to_ring(S));
  for (std::size_t i = 0; i < phi.components().size(); ++i) {
    Poly diff = substitute(phi.components()[i], inner) - substitute(phi.components()[i], shifted);
    if (!diff.is_zero()) {
      out.broken = ActionCheck<Field>::Axiom::cocycle;
      out.component = i;
      out.witness = diff;
      return out;
    }
  }
  return out;
}

/// phi(t, x) - x is not identically zero. This is the right criterion in
/// characteristic 0; over F_p it is applied as is.
template <class Field>
bool is_effective(const AdditiveAction<Field>& phi) {
  for (std::size_t i = 0; i < phi.components().size(); ++i)
    if (!phi.displacement(i).is_zero()) return true;
  return false;
}

/// Generated by the coefficients of t^s, s >= 1, of every phi_i - x_i.
template <class Field>
Ideal<Field> fixed_point_ideal(const AdditiveAction<Field>& phi) {
  std::vector<Polynomial<Field>> gens;
  for (std::size_t i = 0; i < phi.components().size(); ++i) {
    auto coeffs = coefficients_in(phi.displacement(i), phi.parameter());
    for (std::size_t s = 1; s < coeffs.size(); ++s)
      if (!coeffs[s].is_zero()) gens.push_back(coeffs[s].to_ring(phi.ambient()));
  }
  return Ideal<Field>(phi.ambient(), std::move(gens));
}

template <class Field>
struct FixReport {
  UniruledReport<Field> certificate;
  int fixed_dimension = -1;
  std::vector<bool> non_isolated;  // per sample

  bool passed() const {
    for (bool b : non_isolated)
      if (!b) return false;
    return certificate.supported();
  }
};

/// Uniruledness certificate of Fix at degree d, plus a check that no sample
/// is an isolated fixed point.
template <class Field>
FixReport<Field> fix_uniruled_check(const AdditiveAction<Field>& phi, int d,
                                    const std::vector<std::vector<typename Field::Element>>& samples,
                                    std::optional<std::uint64_t> p = std::nullopt) {
  auto check = validate_action(phi);
  if (!check.valid()) throw PreconditionError("not a group action: an axiom fails");
  if (!is_effective(phi)) throw PreconditionError("action is not effective");
  Ideal<Field> fix = fixed_point_ideal(phi);
  for (const auto& q : samples) {
    if (q.size() != phi.ambient()->size()) throw PreconditionError("sample has the wrong number of coordinates");
    for (const auto& g : fix.generators())
      if (!phi.field().is_zero(g.evaluate(q))) throw PreconditionError("sample is not a fixed point");
  }
  FixReport<Field> rep{uniruledness_certificate(fix, d, samples, p), krull_dimension(fix), {}};
  for (const auto& v : rep.certificate.samples) rep.non_isolated.push_back(rep.fixed_dimension >= 1 && v.exists);
  return rep;
}

/// Phi(s, t) = phi(t, L(s)) on K^2. Target coordinates reuse the ambient
/// names when they do not clash with s and t.
template <class Field>
PolyMap<Field> orbit_map(const AdditiveAction<Field>& phi, const ParametricCurve<Field>& L) {
  using Poly = Polynomial<Field>;
  if (L.components.size() != phi.ambient()->size())
    throw PreconditionError("curve has " + std::to_string(L.components.size()) + " components, action acts on " +
                            std::to_string(phi.ambient()->size()) + " coordinates");
  RingPtr<Field> ST = make_ring(phi.field(), {"s", "t"});
  Poly s = Poly::variable(ST, 0), t = Poly::variable(ST, 1);
  Assignment<Field> a{{phi.parameter(), t}};
  for (std::size_t i = 0; i < L.components.size(); ++i) {
    Poly li(ST);
    for (const auto& term : L.components[i].terms())
      li = li + Poly::constant(ST, term.coef) * s.pow(term.mono.degree);
    a.emplace(phi.ambient()->variables()[i], li);
  }
  std::vector<Poly> comps;
  for (const auto& c : phi.components()) comps.push_back(substitute(c, a));
  std::vector<std::string> names;
  if (!phi.ambient()->has("s") && !phi.ambient()->has("t")) names = phi.ambient()->variables();
  return PolyMap<Field>::affine(ST, std::move(comps), std::move(names));
}

}  // namespace sfkit
