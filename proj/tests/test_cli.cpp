#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "sfkit/cli.hpp"
#include "test_util.hpp"

using namespace sfkit;
using namespace sfkit::test;
using cli::Request;

namespace {

std::string prob(const std::string& name) { return std::string(SFKIT_PROBLEMS_DIR) + "/" + name; }

struct Outcome {
  int code;
  std::string out;
};

Outcome run(Request req) {
  std::ostringstream out, err;
  int code = cli::run(req, out, err);
  return {code, out.str()};
}

Request req(std::string cmd, std::vector<std::string> files, bool json = false) {
  Request r;
  r.command = std::move(cmd);
  for (auto& f : files) r.files.push_back(prob(f));
  r.json = json;
  return r;
}

std::string temp_file(const std::string& name, const std::string& body) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

int exit_status(const std::string& args) {
  std::string cmd = std::string(SFKIT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST(CliGolden, SfOfLinearShear) {
  auto o = run(req("sf", {"x1_x1x2.prob"}));
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out,
            "S_f: hypersurface y1 = 0\n"
            "status: ok\n"
            "classification: hypersurface\n"
            "dimension: 1\n"
            "degree: 1\n"
            "generators:\n"
            "  y1\n"
            "hypersurface: y1\n");
}

TEST(CliGolden, SfOfIdentityIsEmpty) {
  auto o = run(req("sf", {"identity2.prob"}, true));
  EXPECT_EQ(o.code, 0);
  auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["classification"], "empty");
  EXPECT_EQ(j["dimension"], -1);
}

TEST(CliGolden, NoLineThroughCusp) {
  auto r = req("curve", {"cusp.prob"});
  r.point = "0,0";
  r.degree = 1;
  auto o = run(r);
  EXPECT_EQ(o.code, cli::kRefuted);
  EXPECT_EQ(o.out.substr(0, o.out.find('\n')), "no curve of degree <= 1 through (0, 0)");
}

TEST(CliGolden, CuspCubicWithWitness) {
  auto r = req("curve", {"cusp.prob"}, true);
  r.degree = 3;
  r.fp = 101;
  auto o = run(r);
  EXPECT_EQ(o.code, 0);
  auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["classification"], "exists");
  ASSERT_EQ(j["witnesses"].size(), 1u);
  // the witness lies on y^2 = x^3 over F_101
  auto T = gf_ring(101, {"t"});
  std::string w = j["witnesses"][0];
  auto comps = split_top_level(w.substr(1, w.size() - 2));
  ASSERT_EQ(comps.size(), 2u);
  auto x = P(T, comps[0]), y = P(T, comps[1]);
  EXPECT_TRUE((y * y - x * x * x).is_zero());
  EXPECT_FALSE(x.is_constant() && y.is_constant());
}

TEST(CliGolden, WorkedExamples) {
  auto o = run(req("sf", {"xy_square.prob"}, true));
  EXPECT_EQ(nlohmann::json::parse(o.out)["generators"], nlohmann::json::array({"y2^2 - y1"}));
  o = run(req("sf", {"hyperbola.prob"}, true));
  EXPECT_EQ(nlohmann::json::parse(o.out)["generators"], nlohmann::json::array({"y1"}));
  o = run(req("bound", {"xy_square.prob"}, true));
  EXPECT_EQ(nlohmann::json::parse(o.out)["details"]["bound"], "7/2");
  o = run(req("compose", {"square_first.prob", "g_shear.prob"}, true));
  EXPECT_EQ(nlohmann::json::parse(o.out)["classification"], "equal");
  auto orbit = req("orbit", {"shear.prob"}, true);
  orbit.curve = "s, 0";
  auto j = nlohmann::json::parse(run(orbit).out);
  EXPECT_EQ(j["witnesses"][0], "(s, s*t)");
  EXPECT_EQ(j["details"]["inside_fix"], true);
}

TEST(CliGolden, LinesOnQuadricAndFermat) {
  for (std::string f : {"quadric.prob", "fermat.prob"}) {
    auto r = req("line", {f}, true);
    r.fp = 101;
    auto o = run(r);
    EXPECT_EQ(o.code, 0) << f;
    EXPECT_EQ(nlohmann::json::parse(o.out)["classification"], "found");
  }
}

TEST(CliGolden, CertifyParabola) {
  auto r = req("certify", {"parabola.prob"});
  r.samples = prob("parabola.samples");
  r.degree = 1;
  EXPECT_EQ(run(r).code, cli::kRefuted);
  r.degree = 2;
  EXPECT_EQ(run(r).code, 0);
}

TEST(CliJson, SchemaAndDeterminism) {
  const std::vector<std::string> keys{"status", "generators", "classification", "dimension",
                                      "degree", "witnesses",  "details"};
  std::vector<Request> rs{req("sf", {"xy_square.prob"}, true), req("fix", {"shear.prob"}, true),
                          req("mult", {"x1_x1x2.prob"}, true), req("sf", {"missing.prob"}, true)};
  for (const auto& r : rs) {
    auto a = run(r), b = run(r);
    EXPECT_EQ(a.out, b.out);
    auto j = nlohmann::ordered_json::parse(a.out);
    std::vector<std::string> got;
    for (const auto& [k, v] : j.items()) got.push_back(k);
    EXPECT_EQ(got, keys) << a.out;
  }
}

TEST(CliErrors, ParseAndPreconditionFailuresExitTwo) {
  std::vector<std::string> bodies{
      "vars x\nmap x\nfrobnicate\n",        // unknown keyword
      "field QQ\nmap x\n",                  // no vars
      "field RR\nvars x\nmap x\n",          // unknown field
      "field GF 100\nvars x\nmap x\n",      // not prime
      "vars x\nmap x +\n",                  // bad expression
      "vars x\nmap z\n",                    // unknown variable
      "vars x y\nmap x\naction t: x, y\n",  // both map and action
      "vars x\naction t: x + t^2\n",        // not an action
  };
  for (std::size_t k = 0; k < bodies.size(); ++k) {
    Request r;
    r.command = k + 1 == bodies.size() ? "fix" : "sf";
    r.files = {temp_file("bad" + std::to_string(k) + ".prob", bodies[k])};
    r.json = true;
    auto o = run(r);
    EXPECT_EQ(o.code, cli::kInputError) << bodies[k];
    EXPECT_EQ(nlohmann::json::parse(o.out)["status"], "error");
  }
  auto r = req("curve", {"cusp.prob"});
  r.degree = 1;
  r.point = "1, 0";  // not on the cusp
  EXPECT_EQ(run(r).code, cli::kInputError);
  EXPECT_EQ(run(req("fix", {"x1_x1x2.prob"})).code, cli::kInputError);
}

TEST(CliBinary, ExitCodes) {
  EXPECT_EQ(exit_status("sf " + prob("x1_x1x2.prob")), 0);
  EXPECT_EQ(exit_status("curve --point 0,0 --degree 1 " + prob("cusp.prob")), 1);
  EXPECT_EQ(exit_status("sf " + prob("missing.prob")), 2);
  EXPECT_EQ(exit_status("nonsense"), 2);
  EXPECT_EQ(exit_status("--json sf " + prob("identity2.prob")), 0);
}

// Rendering then re-parsing gives the same terms.

TEST(RoundTrip, ComputedIdeals) {
  for (std::string f : {"x1_x1x2.prob", "xy_square.prob", "hyperbola.prob"}) {
    auto p = build_problem(read_problem_file(prob(f)), RationalField{});
    auto sf = nonproperness_set(*p.map);
    for (const auto& g : sf.ideal.basis()) EXPECT_EQ(parse_polynomial(g.str(), sf.target), g);
  }
}

TEST(RoundTrip, RandomPolynomials) {
  std::mt19937_64 rng(7);
  auto R = qq_ring({"x1", "x2", "y"});
  auto G = gf_ring(32003, {"a", "b"});
  for (int k = 0; k < 200; ++k) {
    auto p = random_poly(R, rng, 5, 4) * PolyQ::constant(R, mpq_class(1, 1 + k % 7));
    EXPECT_EQ(parse_polynomial(p.str(), R), p) << p.str();
    auto q = random_poly(G, rng, 5, 5, 40000);
    EXPECT_EQ(parse_polynomial(q.str(), G), q) << q.str();
  }
}

TEST(RoundTrip, ProblemFiles) {
  for (std::string f : {"x1_x1x2.prob", "hyperbola.prob", "cusp.prob", "shear.prob"}) {
    auto p = build_problem(read_problem_file(prob(f)), RationalField{});
    std::string text = render_problem(p);
    std::istringstream in(text);
    auto q = build_problem(parse_problem_text(in), RationalField{});
    EXPECT_EQ(render_problem(q), text);
  }
  std::istringstream in("field GF 101\nvars x1 x2 x3 x4\ndomain x1^3 + x2^3 + x3^3 + x4^3\npoint 1, -1, 0, 0\n");
  auto p = build_problem(parse_problem_text(in), PrimeField(101));
  EXPECT_EQ(p.points[0][1], 100u);
}
