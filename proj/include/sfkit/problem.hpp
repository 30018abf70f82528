#pragma once

// Line-oriented problem files:
//   field QQ | field GF 101
//   vars x1 x2 x3
//   domain x1*x2 - 1          (repeatable)
//   map x2, x3
//   action t: x1, x2 + t*x1
//   point 0, 1/2              (repeatable)
// `#` starts a comment.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sfkit/groupfix.hpp"
#include "sfkit/parse.hpp"

namespace sfkit {

/// A problem file before the field is fixed: every expression is kept as text.
struct ProblemText {
  std::string field = "QQ";
  std::uint64_t modulus = 0;
  std::vector<std::string> vars;
  std::vector<std::string> domain;
  std::optional<std::vector<std::string>> map;
  std::optional<std::string> action_parameter;
  std::vector<std::string> action;
  std::vector<std::vector<std::string>> points;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  for (auto& part : split_top_level(s)) out.push_back(trim(part));
  return out;
}

}  // namespace detail

/// Comma-separated coordinates, e.g. `0, 1/2, -3`.
inline std::vector<std::string> parse_point_text(std::string_view s) {
  auto out = detail::split_list(s);
  for (const auto& c : out)
    if (c.empty()) throw ParseError("empty coordinate in point '" + std::string(s) + "'");
  return out;
}

inline ProblemText parse_problem_text(std::istream& in, const std::string& source = "<input>") {
  ProblemText p;
  bool have_field = false, have_vars = false;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError(source + ":" + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::string body = detail::trim(line);
    if (body.empty()) continue;
    std::size_t sp = 0;
    while (sp < body.size() && !std::isspace(static_cast<unsigned char>(body[sp])) && body[sp] != ':') ++sp;
    std::string key = body.substr(0, sp);
    std::string rest = detail::trim(std::string_view(body).substr(sp));
    if (key == "field") {
      if (have_field) throw fail("field declared twice");
      have_field = true;
      std::istringstream ss(rest);
      std::string kind, extra;
      ss >> kind;
      if (kind == "QQ") {
        p.field = "QQ";
      } else if (kind == "GF") {
        long long q = 0;
        if (!(ss >> q) || q < 2) throw fail("expected 'GF <prime>'");
        p.field = "GF";
        p.modulus = static_cast<std::uint64_t>(q);
      } else {
        throw fail("unknown field '" + kind + "'; expected QQ or GF p");
      }
      if (ss >> extra) throw fail("trailing text after field declaration");
    } else if (key == "vars") {
      if (have_vars) throw fail("vars declared twice");
      have_vars = true;
      std::istringstream ss(rest);
      for (std::string v; ss >> v;) p.vars.push_back(v);
      if (p.vars.empty()) throw fail("vars needs at least one name");
    } else if (key == "domain") {
      if (rest.empty()) throw fail("empty domain generator");
      p.domain.push_back(rest);
    } else if (key == "map") {
      if (p.map) throw fail("map declared twice");
      p.map = detail::split_list(rest);
    } else if (key == "action") {
      if (p.action_parameter) throw fail("action declared twice");
      auto colon = rest.find(':');
      if (colon == std::string::npos) throw fail("expected 'action <parameter>: components'");
      p.action_parameter = detail::trim(std::string_view(rest).substr(0, colon));
      if (p.action_parameter->empty()) throw fail("missing action parameter");
      p.action = detail::split_list(std::string_view(rest).substr(colon + 1));
    } else if (key == "point") {
      try {
        p.points.push_back(parse_point_text(rest));
      } catch (const ParseError& e) {
        throw fail(e.what());
      }
    } else {
      throw fail("unknown keyword '" + key + "'");
    }
  }
  if (!have_vars) throw ParseError(source + ": missing 'vars' line");
  if (p.map && p.action_parameter) throw ParseError(source + ": a problem has a map or an action, not both");
  return p;
}

inline ProblemText read_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_problem_text(in, path);
}

/// A problem with its field fixed.
template <class Field>
struct Problem {
  using Element = typename Field::Element;
  RingPtr<Field> ring;
  Ideal<Field> domain;
  std::optional<PolyMap<Field>> map;
  std::optional<AdditiveAction<Field>> action;
  std::vector<std::vector<Element>> points;
};

template <class Field>
std::vector<typename Field::Element> parse_point(const std::vector<std::string>& coords, const Field& F,
                                                 std::size_t arity) {
  if (coords.size() != arity)
    throw PreconditionError("point has " + std::to_string(coords.size()) + " coordinates, expected " +
                            std::to_string(arity));
  std::vector<typename Field::Element> out;
  for (const auto& c : coords) out.push_back(parse_scalar(c, F));
  return out;
}

template <class Field>
Problem<Field> build_problem(const ProblemText& t, const Field& F) {
  RingPtr<Field> R = make_ring(F, t.vars);
  std::vector<Polynomial<Field>> dom;
  for (const auto& g : t.domain) dom.push_back(parse_polynomial(g, R));
  Problem<Field> p{R, Ideal<Field>(R, std::move(dom)), std::nullopt, std::nullopt, {}};
  if (t.map) {
    std::vector<Polynomial<Field>> comps;
    for (const auto& c : *t.map) comps.push_back(parse_polynomial(c, R));
    p.map.emplace(p.domain, std::move(comps));
  }
  if (t.action_parameter) {
    std::vector<std::string> vars{*t.action_parameter};
    for (const auto& v : t.vars) vars.push_back(v);
    RingPtr<Field> A = make_ring(F, vars);
    std::vector<Polynomial<Field>> comps;
    for (const auto& c : t.action) comps.push_back(parse_polynomial(c, A));
    p.action.emplace(R, *t.action_parameter, std::move(comps));
  }
  for (const auto& q : t.points) p.points.push_back(parse_point(q, F, R->size()));
  return p;
}

/// Renders a problem back into the file format.
template <class Field>
std::string render_problem(const Problem<Field>& p) {
  std::string out = "field " + p.ring->field().name() + "\nvars";
  for (const auto& v : p.ring->variables()) out += " " + v;
  out += "\n";
  for (const auto& g : p.domain.generators()) out += "domain " + g.str() + "\n";
  auto join = [](const auto& polys) {
    std::string s;
    for (std::size_t i = 0; i < polys.size(); ++i) s += (i ? ", " : "") + polys[i].str();
    return s;
  };
  if (p.map) out += "map " + join(p.map->components()) + "\n";
  if (p.action) out += "action " + p.action->parameter() + ": " + join(p.action->components()) + "\n";
  for (const auto& q : p.points) {
    out += "point ";
    for (std::size_t i = 0; i < q.size(); ++i) out += (i ? ", " : "") + p.ring->field().render(q[i]);
    out += "\n";
  }
  return out;
}

}  // namespace sfkit
