#pragma once

// Command dispatch behind the sfkit tool. Exit codes: 0 success,
// 1 mathematical refutation, 2 parse or precondition error, 3 budget exceeded.

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "sfkit/problem.hpp"

namespace sfkit::cli {

enum ExitCode { kOk = 0, kRefuted = 1, kInputError = 2, kBudget = 3 };

struct Request {
  std::string command;
  std::vector<std::string> files;
  bool json = false;
  int trials = 5;
  int degree = 0;
  std::optional<std::uint64_t> fp;
  std::string point;
  std::string curve;
  std::string samples;
};

/// Result of one command. The JSON form always carries the same keys.
struct Report {
  std::string status = "ok";
  std::string summary;
  std::vector<std::string> generators;
  std::string classification;
  std::optional<int> dimension;
  std::optional<int> degree;
  std::vector<std::string> witnesses;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  int exit_code = kOk;

  void refute() {
    status = "refuted";
    exit_code = kRefuted;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["status"] = status;
    j["generators"] = generators;
    j["classification"] = classification.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(classification);
    j["dimension"] = dimension ? nlohmann::ordered_json(*dimension) : nlohmann::ordered_json(nullptr);
    j["degree"] = degree ? nlohmann::ordered_json(*degree) : nlohmann::ordered_json(nullptr);
    j["witnesses"] = witnesses;
    j["details"] = details;
    return j;
  }

  std::string text() const {
    std::string s = summary + "\nstatus: " + status + "\n";
    if (!classification.empty()) s += "classification: " + classification + "\n";
    if (dimension) s += "dimension: " + std::to_string(*dimension) + "\n";
    if (degree) s += "degree: " + std::to_string(*degree) + "\n";
    if (!generators.empty()) {
      s += "generators:\n";
      for (const auto& g : generators) s += "  " + g + "\n";
    }
    if (!witnesses.empty()) {
      s += "witnesses:\n";
      for (const auto& w : witnesses) s += "  " + w + "\n";
    }
    for (const auto& [k, v] : details.items()) s += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    return s;
  }
};

namespace detail {

template <class Field>
std::vector<std::string> render_basis(const Ideal<Field>& I) {
  std::vector<std::string> out;
  for (const auto& g : I.basis()) out.push_back(g.str());
  return out;
}

template <class Field>
std::string render_point(const std::vector<typename Field::Element>& q, const Field& F) {
  std::string s = "(";
  for (std::size_t i = 0; i < q.size(); ++i) s += (i ? ", " : "") + F.render(q[i]);
  return s + ")";
}

inline std::string kind_name(int k) {
  static const char* names[] = {"empty", "hypersurface", "other"};
  return names[k];
}

template <class Field>
const PolyMap<Field>& need_map(const Problem<Field>& p) {
  if (!p.map) throw PreconditionError("this command needs a 'map' line");
  return *p.map;
}

template <class Field>
const AdditiveAction<Field>& need_action(const Problem<Field>& p) {
  if (!p.action) throw PreconditionError("this command needs an 'action' line");
  return *p.action;
}

template <class Field>
void require_valid(const AdditiveAction<Field>& phi) {
  auto c = validate_action(phi);
  if (c.valid()) return;
  std::string law = c.broken == ActionCheck<Field>::Axiom::identity ? "phi(0, x) = x" : "phi(s, phi(t, x)) = phi(s + t, x)";
  throw PreconditionError("not an action: " + law + " fails in component " + std::to_string(c.component + 1));
}

template <class Field>
std::vector<typename Field::Element> query_point(const Request& req, const Problem<Field>& p) {
  if (!req.point.empty()) return parse_point(parse_point_text(req.point), p.ring->field(), p.ring->size());
  if (p.points.empty()) throw PreconditionError("no point given: use --point or a 'point' line");
  return p.points.front();
}

template <class Field>
void fill_sf(Report& r, const SfResult<Field>& sf) {
  r.generators = render_basis(sf.ideal);
  r.classification = kind_name(static_cast<int>(sf.classification.kind));
  r.dimension = sf.classification.dimension;
  if (sf.classification.kind == SfClassification<Field>::Kind::hypersurface) {
    r.degree = sf.classification.degree;
    r.details["hypersurface"] = sf.classification.generator->str();
  }
}

template <class Field>
Report run_sf(const Problem<Field>& p) {
  Report r;
  auto sf = nonproperness_set(need_map(p));
  fill_sf(r, sf);
  r.summary = "S_f: " + r.classification;
  if (sf.classification.generator) r.summary += " " + sf.classification.generator->str() + " = 0";
  return r;
}

template <class Field>
Report run_image(const Problem<Field>& p) {
  Report r;
  auto img = image_closure(need_map(p));
  r.generators = render_basis(img);
  r.dimension = krull_dimension(img);
  r.classification = img.is_zero() ? "dominant" : "not-dominant";
  r.summary = "image closure: " + r.classification;
  return r;
}

template <class Field>
Report run_finite(const Problem<Field>& p) {
  Report r;
  bool fin = is_finite_map(need_map(p));
  r.classification = fin ? "finite" : "not-finite";
  r.summary = fin ? "the map is finite" : "the map is not finite";
  return r;
}

template <class Field>
Report run_mult(const Problem<Field>& p, int trials) {
  if (trials < 1) throw PreconditionError("--trials must be positive");
  Report r;
  auto mu = multiplicity(need_map(p), trials);
  if (mu) {
    r.classification = "generically-finite";
    r.details["multiplicity"] = *mu;
    r.summary = "generic fiber has " + std::to_string(*mu) + " points";
  } else {
    r.classification = "infinite-fibers";
    r.details["multiplicity"] = nullptr;
    r.summary = "generic fiber is infinite";
  }
  return r;
}

template <class Field>
Report run_bound(const Problem<Field>& p) {
  auto c = hiperc_bound_check(need_map(p));
  if (!c.applicable) throw PreconditionError("degree bound does not apply: " + c.reason);
  Report r;
  r.degree = c.actual;
  r.classification = c.holds ? "holds" : "violated";
  r.details["bound"] = c.bound.get_str();
  r.details["multiplicity"] = c.mu;
  r.summary = "deg S_f = " + std::to_string(c.actual) + (c.holds ? " <= " : " > ") + c.bound.get_str();
  if (!c.holds) r.refute();
  return r;
}

template <class Field>
Report run_compose(const Problem<Field>& f, const Problem<Field>& g) {
  Report r;
  auto rep = composition_inclusion(need_map(f), need_map(g));
  r.details["inclusion"] = rep.inclusion;
  r.details["equality_checked"] = rep.equality_checked;
  if (rep.equality_checked) r.details["equality"] = rep.equality;
  if (rep.witness) r.witnesses.push_back(rep.witness->str());
  if (rep.reverse_witness) r.witnesses.push_back(rep.reverse_witness->str());
  bool ok = rep.inclusion && (!rep.equality_checked || rep.equality);
  r.classification = rep.equality_checked && rep.equality ? "equal" : rep.inclusion ? "included" : "not-included";
  r.summary = rep.equality_checked && rep.equality ? "S_g = S_{g o f}" : rep.inclusion ? "S_g is inside S_{g o f}" : "S_g is not inside S_{g o f}";
  if (!ok) r.refute();
  return r;
}

template <class Field>
Report run_effective(const Problem<Field>& p) {
  const auto& phi = need_action(p);
  require_valid(phi);
  Report r;
  bool eff = is_effective(phi);
  r.classification = eff ? "effective" : "trivial";
  r.summary = eff ? "the action is effective" : "the action is trivial";
  return r;
}

template <class Field>
Report run_fix(const Problem<Field>& p) {
  const auto& phi = need_action(p);
  require_valid(phi);
  Report r;
  Ideal<Field> fix = fixed_point_ideal(phi);
  r.generators = render_basis(fix);
  r.dimension = krull_dimension(fix);
  r.classification = *r.dimension < 0 ? "empty" : *r.dimension == 0 ? "isolated" : "positive-dimensional";
  r.details["t_degree"] = phi.t_degree();
  r.summary = "Fix: " + r.classification;
  return r;
}

template <class Field>
Report run_orbit(const Problem<Field>& p, const std::string& curve_text) {
  const auto& phi = need_action(p);
  require_valid(phi);
  if (curve_text.empty()) throw PreconditionError("orbit needs --curve with components in s");
  RingPtr<Field> S = make_ring(p.ring->field(), {"s"});
  ParametricCurve<Field> L;
  for (const auto& c : split_top_level(curve_text)) L.components.push_back(parse_polynomial(c, S));
  PolyMap<Field> Phi = orbit_map(phi, L);
  Report r;
  std::string comps;
  for (std::size_t i = 0; i < Phi.arity(); ++i) comps += (i ? ", " : "") + Phi.components()[i].str();
  r.witnesses.push_back("(" + comps + ")");
  auto sf = nonproperness_set(Phi);
  fill_sf(r, sf);
  Ideal<Field> fix = fixed_point_ideal(phi);
  bool inside = true;
  for (const auto& g : fix.generators())
    if (!radical_member(g.to_ring(sf.target), sf.ideal)) inside = false;
  r.details["inside_fix"] = inside;
  r.summary = "orbit map S: " + r.classification + (inside ? ", contained in Fix" : ", not contained in Fix");
  if (!inside) r.refute();
  return r;
}

template <class Field>
Report run_curve(const Problem<Field>& p, const Request& req) {
  if (req.degree < 1) throw PreconditionError("--degree must be at least 1");
  auto a = query_point(req, p);
  auto rep = uniruledness_certificate(p.domain, req.degree, {a}, req.fp);
  const auto& v = rep.samples.front();
  Report r;
  r.degree = req.degree;
  std::string where = render_point(a, p.ring->field());
  if (v.witness) r.witnesses.push_back(v.witness->str());
  if (v.exists) {
    r.classification = "exists";
    r.details["found_at_degree"] = v.settled_at;
    r.summary = "a curve of degree <= " + std::to_string(req.degree) + " passes through " + where;
  } else {
    r.classification = "none";
    r.summary = "no curve of degree <= " + std::to_string(req.degree) + " through " + where;
    r.refute();
  }
  return r;
}

template <class Field>
Report run_line(const Problem<Field>& p, const Request& req) {
  if (!req.fp) throw PreconditionError("line needs --fp p");
  if (p.domain.generators().size() != 1) throw PreconditionError("line needs exactly one 'domain' polynomial");
  auto a = query_point(req, p);
  auto L = line_on_hypersurface(p.domain.generators().front(), a, *req.fp);
  Report r;
  r.degree = 1;
  std::string where = render_point(a, p.ring->field());
  if (L) {
    r.classification = "found";
    r.witnesses.push_back(L->str());
    r.summary = "line through " + where;
  } else {
    r.classification = "not-found";
    r.summary = "no line found through " + where + " over GF " + std::to_string(*req.fp);
    r.refute();
  }
  return r;
}

template <class Field>
Report run_certify(const Problem<Field>& p, const Request& req) {
  if (req.degree < 1) throw PreconditionError("--degree must be at least 1");
  std::vector<std::vector<typename Field::Element>> samples = p.points;
  if (!req.samples.empty()) {
    samples.clear();
    std::ifstream in(req.samples);
    if (!in) throw ParseError("cannot open '" + req.samples + "'");
    std::string line;
    while (std::getline(in, line)) {
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      if (sfkit::detail::trim(line).empty()) continue;
      samples.push_back(parse_point(parse_point_text(line), p.ring->field(), p.ring->size()));
    }
  }
  if (samples.empty()) throw PreconditionError("certify needs sample points (--samples or 'point' lines)");
  auto rep = uniruledness_certificate(p.domain, req.degree, samples, req.fp);
  Report r;
  r.degree = req.degree;
  nlohmann::ordered_json per = nlohmann::ordered_json::array();
  for (const auto& v : rep.samples) {
    std::string where = render_point(v.point, p.ring->field());
    per.push_back(where + (v.exists ? " yes" : " no"));
    if (v.witness) r.witnesses.push_back(where + ": " + v.witness->str());
  }
  r.details["samples"] = per;
  if (rep.supported()) {
    r.classification = "supported";
    r.summary = "every sample lies on a curve of degree <= " + std::to_string(req.degree);
  } else {
    r.classification = "refuted";
    r.summary = "sample " + render_point(rep.samples[*rep.refuted_at].point, p.ring->field()) +
                " lies on no curve of degree <= " + std::to_string(req.degree);
    r.refute();
  }
  return r;
}

template <class Field>
Report dispatch(const Request& req, const std::vector<ProblemText>& texts, const Field& F) {
  std::vector<Problem<Field>> ps;
  for (const auto& t : texts) ps.push_back(build_problem(t, F));
  const auto& p = ps.front();
  const std::string& c = req.command;
  if (c == "sf") return run_sf(p);
  if (c == "image") return run_image(p);
  if (c == "finite") return run_finite(p);
  if (c == "mult") return run_mult(p, req.trials);
  if (c == "bound") return run_bound(p);
  if (c == "compose") return run_compose(ps.at(0), ps.at(1));
  if (c == "fix") return run_fix(p);
  if (c == "effective") return run_effective(p);
  if (c == "orbit") return run_orbit(p, req.curve);
  if (c == "curve") return run_curve(p, req);
  if (c == "line") return run_line(p, req);
  if (c == "certify") return run_certify(p, req);
  throw PreconditionError("unknown command '" + c + "'");
}

}  // namespace detail

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"sf",  "image",     "finite", "mult",  "bound", "compose",
                                              "fix", "effective", "orbit",  "curve", "line",  "certify"};
  return names;
}

/// Runs one command and writes its report; returns the exit code.
inline int run(const Request& req, std::ostream& out, std::ostream& err) {
  Report r;
  try {
    std::size_t want = req.command == "compose" ? 2 : 1;
    if (req.files.size() != want)
      throw PreconditionError(req.command + " takes " + std::to_string(want) + " problem file(s)");
    std::vector<ProblemText> texts;
    for (const auto& f : req.files) texts.push_back(read_problem_file(f));
    for (const auto& t : texts)
      if (t.field != texts.front().field || t.modulus != texts.front().modulus)
        throw PreconditionError("problem files use different fields");
    if (texts.front().field == "QQ") r = detail::dispatch(req, texts, RationalField{});
    else r = detail::dispatch(req, texts, PrimeField(texts.front().modulus));
  } catch (const ResourceLimitError& e) {
    r = Report{};
    r.status = "budget-exceeded";
    r.summary = std::string("resource budget exceeded: ") + e.what();
    r.exit_code = kBudget;
    err << "sfkit: " << e.what() << "\n";
  } catch (const std::exception& e) {
    // parse errors, preconditions, bad moduli and arithmetic domain errors
    r = Report{};
    r.status = "error";
    r.summary = std::string("error: ") + e.what();
    r.exit_code = kInputError;
    err << "sfkit: " << e.what() << "\n";
  }
  if (req.json) out << r.to_json().dump(2) << "\n";
  else if (r.exit_code < kInputError) out << r.text();
  return r.exit_code;
}

}  // namespace sfkit::cli
