#include <gtest/gtest.h>

#include "sfkit/uniruled.hpp"
#include "test_util.hpp"

using namespace sfkit;
using namespace sfkit::test;

namespace {

// Brute force over F_q: is there a nonzero (x(t), y(t)) with zero constant
// terms, degree <= d, and y^2 = x^3? Plain integer arithmetic, no library.
bool cusp_curve_brute_force(int q, int d) {
  auto mul = [q](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % q;
    return c;
  };
  int total = 1;
  for (int k = 0; k < 2 * d; ++k) total *= q;
  for (int code = 1; code < total; ++code) {
    std::vector<int> x(d + 1, 0), y(d + 1, 0);
    int c = code;
    for (int j = 1; j <= d; ++j, c /= q) x[j] = c % q;
    for (int j = 1; j <= d; ++j, c /= q) y[j] = c % q;
    auto y2 = mul(y, y);
    auto x3 = mul(mul(x, x), x);
    y2.resize(x3.size(), 0);
    bool same = true;
    for (std::size_t k = 0; k < x3.size(); ++k) same = same && y2[k] == x3[k];
    if (same) return true;
  }
  return false;
}

CurveSearchProblem<QQ> cusp(int d) {
  auto r = qq_ring({"x", "y"});
  return CurveSearchProblem<QQ>(sfkit::test::I(r, {"y^2 - x^3"}), {0, 0}, d);
}

}  // namespace

TEST(CurveSystem, LineInCoordinateHyperplane) {
  auto r = qq_ring({"x1", "x2"});
  auto sys = build_curve_system(CurveSearchProblem<QQ>(sfkit::test::I(r, {"x1"}), {0, 0}, 1));
  EXPECT_TRUE(same_ideal(sys.ideal, sfkit::test::I(sys.ring(), {"b1_1"})));
}

TEST(CurveSystem, WholePlaneGivesZeroSystem) {
  auto r = qq_ring({"x1", "x2"});
  auto sys = build_curve_system(CurveSearchProblem<QQ>(Ideal<QQ>(r), {3, -1}, 1));
  EXPECT_TRUE(sys.ideal.is_zero());
}

TEST(CurveSystem, CuspDegreeTwoForcesConstant) {
  auto sys = build_curve_system(cusp(2));
  for (std::size_t k = 0; k < sys.ring()->size(); ++k)
    EXPECT_TRUE(radical_member(PolyQ::variable(sys.ring(), k), sys.ideal));
}

TEST(CurveSystem, RejectsPointOffVariety) {
  auto r = qq_ring({"x", "y"});
  EXPECT_THROW(CurveSearchProblem<QQ>(sfkit::test::I(r, {"y^2 - x^3"}), {1, 0}, 1), PreconditionError);
  EXPECT_THROW(CurveSearchProblem<QQ>(sfkit::test::I(r, {"y^2 - x^3"}), {0, 0}, 0), PreconditionError);
}

TEST(CurveExists, CuspMatchesBruteForceOverF5) {
  for (int d = 1; d <= 3; ++d) EXPECT_EQ(curve_exists_through_point(cusp(d)), cusp_curve_brute_force(5, d)) << d;
  EXPECT_FALSE(curve_exists_through_point(cusp(1)));
  EXPECT_TRUE(curve_exists_through_point(cusp(3)));
}

TEST(CurveExists, MonotoneInDegree) {
  bool seen = false;
  for (int d = 1; d <= 4; ++d) {
    bool e = curve_exists_through_point(cusp(d));
    if (seen) {
      EXPECT_TRUE(e) << d;
    }
    seen = seen || e;
  }
  EXPECT_TRUE(seen);
}

TEST(CurveExists, HyperplaneAnyPoint) {
  auto r = qq_ring({"x1", "x2"});
  for (int c : {0, 5, -7})
    EXPECT_TRUE(curve_exists_through_point(CurveSearchProblem<QQ>(sfkit::test::I(r, {"x1"}), {0, c}, 1)));
}

TEST(FindCurve, CuspWitness) {
  auto w = find_curve_over_fp(cusp(3), 101);
  ASSERT_TRUE(w.has_value());
  EXPECT_FALSE(w->is_constant());
  EXPECT_LE(w->degree(), 3);
  auto r = gf_ring(101, {"x", "y"});
  EXPECT_TRUE(pull_back(P(r, "y^2 - x^3"), *w).is_zero());
  EXPECT_FALSE(find_curve_over_fp(cusp(1), 101).has_value());
}

TEST(FindCurve, HyperplaneWitness) {
  auto r = qq_ring({"x1", "x2"});
  auto w = find_curve_over_fp(CurveSearchProblem<QQ>(sfkit::test::I(r, {"x1"}), {0, 0}, 1), 5);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->components[0].is_zero());
  EXPECT_EQ(w->components[1].total_degree(), 1);
}

TEST(FindCurve, RejectsBadPrimes) {
  EXPECT_THROW(find_curve_over_fp(cusp(1), 100), PreconditionError);
  EXPECT_THROW(find_curve_over_fp(cusp(1), 32003), PreconditionError);
}

TEST(FindCurve, RejectsDenominatorDivisibleByP) {
  auto r = qq_ring({"x", "y"});
  CurveSearchProblem<QQ> prob(sfkit::test::I(r, {"x - y/5"}), {0, 0}, 1);
  EXPECT_THROW(find_curve_over_fp(prob, 5), PreconditionError);
}

TEST(LineOnHypersurface, QuadricThroughOrigin) {
  auto r = qq_ring({"x1", "x2", "x3", "x4"});
  auto h = P(r, "x1*x2 + x3*x4");
  auto line = line_on_hypersurface(h, {0, 0, 0, 0}, 101);
  ASSERT_TRUE(line.has_value());
  auto rp = gf_ring(101, {"x1", "x2", "x3", "x4"});
  EXPECT_TRUE(pull_back(P(rp, "x1*x2 + x3*x4"), *line).is_zero());
  EXPECT_EQ(line->degree(), 1);
}

TEST(LineOnHypersurface, FermatCubicThroughOrigin) {
  auto r = qq_ring({"x", "y", "z", "w"});
  auto line = line_on_hypersurface(P(r, "x^3 + y^3 + z^3 + w^3"), {0, 0, 0, 0}, 101);
  ASSERT_TRUE(line.has_value());
  auto rp = gf_ring(101, {"x", "y", "z", "w"});
  EXPECT_TRUE(pull_back(P(rp, "x^3 + y^3 + z^3 + w^3"), *line).is_zero());
}

TEST(LineOnHypersurface, QuadricThroughOffOriginPoint) {
  auto r = qq_ring({"x1", "x2", "x3", "x4"});
  auto line = line_on_hypersurface(P(r, "x1*x2 + x3*x4"), {1, 0, 0, 0}, 101);
  ASSERT_TRUE(line.has_value());
  auto rp = gf_ring(101, {"x1", "x2", "x3", "x4"});
  EXPECT_TRUE(pull_back(P(rp, "x1*x2 + x3*x4"), *line).is_zero());
  EXPECT_EQ(line->components[0].constant_coefficient(), 1u);
}

TEST(LineOnHypersurface, Preconditions) {
  auto r = qq_ring({"x", "y"});
  EXPECT_THROW(line_on_hypersurface(P(r, "x^2 + y^2 - 1"), {1, 0}, 101), PreconditionError);
  auto r4 = qq_ring({"a", "b", "c", "d"});
  EXPECT_THROW(line_on_hypersurface(P(r4, "a*b + c*d"), {1, 1, 0, 0}, 101), PreconditionError);
}

TEST(Certificate, HyperplaneSupported) {
  auto r = qq_ring({"x1", "x2"});
  auto rep = uniruledness_certificate(sfkit::test::I(r, {"x1"}), 1, {{0, 0}, {0, 3}, {0, mpq_class(-1, 2)}}, 101);
  EXPECT_TRUE(rep.supported());
  for (const auto& s : rep.samples) {
    EXPECT_TRUE(s.exists);
    EXPECT_TRUE(s.witness.has_value());
  }
}

TEST(Certificate, ParabolaRefutedAtOneSupportedAtTwo) {
  auto r = qq_ring({"y1", "y2"});
  auto X = sfkit::test::I(r, {"y1 - y2^2"});
  std::vector<std::vector<mpq_class>> pts{{0, 0}, {1, 1}, {4, -2}};
  auto r1 = uniruledness_certificate(X, 1, pts, 101);
  EXPECT_FALSE(r1.supported());
  EXPECT_EQ(r1.refuted_at, std::optional<std::size_t>(0));
  auto r2 = uniruledness_certificate(X, 2, pts, 101);
  EXPECT_TRUE(r2.supported());
}

TEST(Certificate, EmptySamplesAndOffVariety) {
  auto r = qq_ring({"x1", "x2"});
  EXPECT_TRUE(uniruledness_certificate(sfkit::test::I(r, {"x1"}), 1, {}).supported());
  EXPECT_THROW(uniruledness_certificate(sfkit::test::I(r, {"x1"}), 1, {{1, 0}}), PreconditionError);
}

TEST(ParametrizationDegree, Examples) {
  auto T = qq_ring({"t"});
  EXPECT_EQ(parametrization_degree(ParametricCurve<QQ>{{P(T, "t^2"), P(T, "t^3")}}), 1);
  EXPECT_EQ(parametrization_degree(ParametricCurve<QQ>{{P(T, "t^2"), P(T, "t^4")}}), 2);
  EXPECT_EQ(parametrization_degree(ParametricCurve<QQ>{{P(T, "t"), P(T, "0")}}), 1);
  EXPECT_THROW(parametrization_degree(ParametricCurve<QQ>{{P(T, "3"), P(T, "0")}}), PreconditionError);
}

TEST(ParametrizationDegree, ComposingWithPowerMultiplies) {
  std::mt19937_64 rng(7);
  auto T = gf_ring(32003, {"t"});
  for (int trial = 0; trial < 12; ++trial) {
    ParametricCurve<GF> phi;
    for (int i = 0; i < 2; ++i) phi.components.push_back(random_poly(T, rng, 3, 4));
    if (phi.is_constant()) continue;
    int base = parametrization_degree(phi);
    for (int k = 2; k <= 3; ++k) {
      ParametricCurve<GF> psi;
      for (const auto& c : phi.components)
        psi.components.push_back(substitute(c, Assignment<GF>{{"t", PolyP::variable(T, 0).pow(k)}}));
      EXPECT_EQ(parametrization_degree(psi), k * base) << phi.str();
    }
  }
}

// Invariants on random hypersurfaces over F_101.

class RandomCurveProblems : public ::testing::TestWithParam<int> {};

TEST_P(RandomCurveProblems, SystemIsWeightedHomogeneousAndWitnessesAreSound) {
  std::mt19937_64 rng(GetParam());
  auto r = gf_ring(101, {"x", "y", "z"});
  auto h = random_poly(r, rng, 3, 3);
  if (h.is_constant()) return;
  Ideal<GF> X(r, {h});
  auto pts = sample_points(X, 2, rng);
  for (const auto& pt : pts) {
    for (int d = 1; d <= 2; ++d) {
      CurveSearchProblem<GF> prob(X, pt, d);
      auto sys = build_curve_system(prob);
      for (const auto& g : sys.ideal.generators()) EXPECT_TRUE(sys.weighted_degree(g).has_value()) << g.str();
      auto w = find_curve_over_fp(prob, 101);
      if (w) {
        EXPECT_TRUE(curve_lies_on(*w, X));
        EXPECT_LE(w->degree(), d);
        for (std::size_t i = 0; i < pt.size(); ++i) EXPECT_EQ(w->components[i].constant_coefficient(), pt[i]);
        EXPECT_TRUE(curve_exists_through_point(prob));
      }
    }
  }
}

TEST_P(RandomCurveProblems, SampledPointsSolveTheSystem) {
  std::mt19937_64 rng(GetParam() + 50);
  auto r = gf_ring(101, {"x", "y", "z"});
  Ideal<GF> X(r, {random_poly(r, rng, 3, 2), random_poly(r, rng, 3, 2)});
  for (const auto& pt : sample_points(X, 3, rng))
    for (const auto& g : X.generators()) EXPECT_EQ(g.evaluate(pt), 0u);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomCurveProblems, ::testing::Range(1, 9));

TEST(RootsByScan, MatchesDirectEvaluation) {
  auto r = gf_ring(101, {"u"});
  auto u = P(r, "(u - 3)*(u - 50)*(u^2 + 1)");
  auto roots = roots_by_scan(u);
  std::vector<std::uint32_t> expect;
  for (std::uint32_t x = 0; x < 101; ++x) {
    std::vector<std::uint32_t> pt{x};
    if (u.evaluate(pt) == 0) expect.push_back(x);
  }
  EXPECT_EQ(roots, expect);
  EXPECT_EQ(roots.size(), 4u);  // -1 is a square mod 101
}
