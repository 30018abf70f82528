#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "sfkit/field.hpp"
#include "sfkit/monomial.hpp"

namespace sfkit {

/// Error raised when operands live in different rings or a name is unknown.
class RingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// K[x_1, ..., x_n] with a fixed monomial order. Rings are immutable and
/// shared; polynomials hold a pointer to theirs.
template <class Field>
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> vars, MonomialOrder order)
      : field_(std::move(field)), vars_(std::move(vars)), order_(std::move(order)) {
    if (vars_.size() > kMaxVariables)
      throw RingError("at most " + std::to_string(kMaxVariables) + " variables supported");
    std::unordered_set<std::string> seen;
    for (const auto& v : vars_) {
      if (v.empty()) throw RingError("empty variable name");
      if (!seen.insert(v).second) throw RingError("duplicate variable name '" + v + "'");
    }
    if (order_.kind() == MonomialOrder::Kind::block && order_.split() > vars_.size())
      throw RingError("block split exceeds variable count");
  }

  const Field& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
  }

  std::size_t require_index(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw RingError("unknown variable '" + name + "'");
    return *i;
  }

  bool has(const std::string& name) const { return index_of(name).has_value(); }

  int compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b, vars_.size());
  }

  /// Same field and variables; order is ignored.
  bool same_variables(const PolyRing& o) const {
    return field_ == o.field_ && vars_ == o.vars_;
  }
  bool operator==(const PolyRing& o) const { return same_variables(o) && order_ == o.order_; }

  /// A name not used by this ring, derived from `base`.
  std::string fresh_name(const std::string& base) const {
    if (!has(base)) return base;
    for (int k = 1;; ++k) {
      std::string c = base + "_" + std::to_string(k);
      if (!has(c)) return c;
    }
  }

 private:
  Field field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

template <class Field>
using RingPtr = std::shared_ptr<const PolyRing<Field>>;

template <class Field>
RingPtr<Field> make_ring(Field field, std::vector<std::string> vars,
                         MonomialOrder order = MonomialOrder::grevlex()) {
  return std::make_shared<const PolyRing<Field>>(std::move(field), std::move(vars),
                                                 std::move(order));
}

template <class Field>
RingPtr<Field> with_order(const RingPtr<Field>& r, MonomialOrder order) {
  if (r->order() == order) return r;
  return make_ring(r->field(), r->variables(), std::move(order));
}

/// Ring over the same field with a new variable list. Block splits that
/// would no longer fit fall back to grevlex.
template <class Field>
RingPtr<Field> with_variables(const RingPtr<Field>& r, std::vector<std::string> vars) {
  MonomialOrder o = r->order();
  if (o.kind() == MonomialOrder::Kind::weighted ||
      (o.kind() == MonomialOrder::Kind::block && o.split() > vars.size()))
    o = MonomialOrder::grevlex();
  return make_ring(r->field(), std::move(vars), std::move(o));
}

template <class Field>
RingPtr<Field> without_variables(const RingPtr<Field>& r, const std::vector<std::string>& drop) {
  std::vector<std::string> keep;
  for (const auto& v : r->variables())
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) keep.push_back(v);
  return with_variables(r, std::move(keep));
}

template <class Field>
RingPtr<Field> with_appended(const RingPtr<Field>& r, const std::vector<std::string>& extra) {
  std::vector<std::string> vars = r->variables();
  for (const auto& v : extra) {
    if (r->has(v)) throw RingError("variable '" + v + "' already in ring");
    vars.push_back(v);
  }
  return with_variables(r, std::move(vars));
}

}  // namespace sfkit
