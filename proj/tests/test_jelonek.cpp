#include <gtest/gtest.h>

#include "sfkit/jelonek.hpp"
#include "test_util.hpp"

using namespace sfkit;
using namespace sfkit::test;

namespace {

PolyMap<QQ> affine_map(std::vector<std::string> vars, std::initializer_list<std::string_view> comps) {
  auto r = qq_ring(std::move(vars));
  std::vector<PolyQ> c;
  for (auto s : comps) c.push_back(P(r, s));
  return PolyMap<QQ>::affine(r, std::move(c));
}

Ideal<QQ> target_ideal(const PolyMap<QQ>& f, std::initializer_list<std::string_view> gens) {
  return sfkit::test::I(f.target(), gens);
}

}  // namespace

TEST(GraphIdeal, Examples) {
  auto f = affine_map({"x1", "x2"}, {"x1", "x1*x2"});
  auto G = graph_ideal(f);
  EXPECT_TRUE(same_ideal(G, sfkit::test::I(G.ring(), {"y1 - x1", "y2 - x1*x2"})));

  auto id = affine_map({"x1"}, {"x1"});
  auto Gi = graph_ideal(id);
  EXPECT_TRUE(same_ideal(Gi, sfkit::test::I(Gi.ring(), {"y1 - x1"})));

  auto r = qq_ring({"x1", "x2", "x3"});
  PolyMap<QQ> h(sfkit::test::I(r, {"x1*x2 - 1"}), {P(r, "x2"), P(r, "x3")});
  auto Gh = graph_ideal(h);
  EXPECT_TRUE(same_ideal(Gh, sfkit::test::I(Gh.ring(), {"x1*x2 - 1", "y1 - x2", "y2 - x3"})));
}

TEST(ClosureAtInfinity, ContainsLimitRelations) {
  auto f = affine_map({"x1", "x2"}, {"x1", "x1*x2"});
  auto inf = closure_at_infinity(f);
  // at infinity the x-direction is [0 : 1] and y1 = 0
  EXPECT_TRUE(radical_member(P(inf.ring(), "y1*x2"), inf));
  EXPECT_TRUE(radical_member(P(inf.ring(), "x1"), inf));
}

TEST(ClosureAtInfinity, AgreesWithSaturationRoute) {
  std::vector<PolyMap<QQ>> maps{
      affine_map({"x1", "x2"}, {"x1", "x1*x2"}),
      affine_map({"x", "y"}, {"x + (x*y)^2", "x*y"}),
      affine_map({"x"}, {"x^2"}),
      affine_map({"x1", "x2"}, {"x1^2", "x2"}),
  };
  auto r = qq_ring({"x1", "x2", "x3"});
  maps.emplace_back(sfkit::test::I(r, {"x1*x2 - 1"}), std::vector<PolyQ>{P(r, "x2"), P(r, "x3")});
  for (const auto& f : maps) {
    auto fast = closure_at_infinity(f);
    auto slow = closure_at_infinity_by_saturation(f);
    EXPECT_TRUE(same_ideal(fast, slow));
  }
}

TEST(NonpropernessSet, ShearX1X1X2) {
  auto f = affine_map({"x1", "x2"}, {"x1", "x1*x2"});
  auto sf = nonproperness_set(f);
  EXPECT_TRUE(same_ideal(sf.ideal, target_ideal(f, {"y1"})));
  ASSERT_EQ(sf.classification.kind, SfClassification<QQ>::Kind::hypersurface);
  EXPECT_EQ(sf.classification.generator->str(), "y1");
  EXPECT_EQ(sf.classification.degree, 1);
  EXPECT_TRUE(sf.image_closure.is_zero());
}

TEST(NonpropernessSet, SquareOfProductParabola) {
  auto f = affine_map({"x", "y"}, {"x + (x*y)^2", "x*y"});
  auto sf = nonproperness_set(f);
  EXPECT_TRUE(same_ideal(sf.ideal, target_ideal(f, {"y1 - y2^2"})));
  ASSERT_EQ(sf.classification.kind, SfClassification<QQ>::Kind::hypersurface);
  EXPECT_EQ(sf.classification.degree, 2);
}

TEST(NonpropernessSet, HyperbolaCylinder) {
  auto r = qq_ring({"x1", "x2", "x3"});
  PolyMap<QQ> f(sfkit::test::I(r, {"x1*x2 - 1"}), {P(r, "x2"), P(r, "x3")});
  auto sf = nonproperness_set(f);
  EXPECT_TRUE(same_ideal(sf.ideal, target_ideal(f, {"y1"})));
  EXPECT_EQ(sf.classification.kind, SfClassification<QQ>::Kind::hypersurface);
}

TEST(NonpropernessSet, IdentityIsEmpty) {
  for (auto vars : {std::vector<std::string>{"x1"}, std::vector<std::string>{"x1", "x2"},
                    std::vector<std::string>{"a", "b", "c"}}) {
    auto r = qq_ring(vars);
    std::vector<PolyQ> comps;
    for (const auto& v : vars) comps.push_back(PolyQ::variable(r, v));
    auto sf = nonproperness_set(PolyMap<QQ>::affine(r, comps));
    EXPECT_EQ(sf.classification.kind, SfClassification<QQ>::Kind::empty);
    EXPECT_TRUE(sf.ideal.is_unit());
  }
}

TEST(NonpropernessSet, SquareMapIsProper) {
  auto sf = nonproperness_set(affine_map({"x"}, {"x^2"}));
  EXPECT_EQ(sf.classification.kind, SfClassification<QQ>::Kind::empty);
}

TEST(NonpropernessSet, RejectsInfiniteFibers) {
  EXPECT_THROW(nonproperness_set(affine_map({"x1", "x2"}, {"x1 + x2"})), NotGenericallyFinite);
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(multiplicity(affine_map({"x1", "x2"}, {"x1", "x2"})), std::optional<std::size_t>(1));
  EXPECT_EQ(multiplicity(affine_map({"x1", "x2"}, {"x1", "x1*x2"})), std::optional<std::size_t>(1));
  EXPECT_EQ(multiplicity(affine_map({"x", "y"}, {"x^2", "y"})), std::optional<std::size_t>(2));
  EXPECT_EQ(multiplicity(affine_map({"x", "y"}, {"x*y"})), std::nullopt);
}

TEST(IsFiniteMap, Examples) {
  EXPECT_TRUE(is_finite_map(affine_map({"x1", "x2"}, {"x1", "x2"})));
  EXPECT_TRUE(is_finite_map(affine_map({"x", "y"}, {"x^2", "y"})));
  EXPECT_FALSE(is_finite_map(affine_map({"x1", "x2"}, {"x1", "x1*x2"})));
}

TEST(DegreeBound, WorkedInstances) {
  auto c1 = hiperc_bound_check(affine_map({"x1", "x2"}, {"x1", "x1*x2"}));
  ASSERT_TRUE(c1.applicable);
  EXPECT_EQ(c1.bound, mpq_class(1));
  EXPECT_EQ(c1.actual, 1);
  EXPECT_TRUE(c1.holds);

  auto c2 = hiperc_bound_check(affine_map({"x", "y"}, {"x + (x*y)^2", "x*y"}));
  ASSERT_TRUE(c2.applicable);
  EXPECT_EQ(c2.mu, 1u);
  // deg f1 = 4, deg f2 = 2: (4*2 - 1)/2
  EXPECT_EQ(c2.bound, mpq_class(7, 2));
  EXPECT_EQ(c2.actual, 2);
  EXPECT_TRUE(c2.holds);

  auto c3 = hiperc_bound_check(affine_map({"x1", "x2"}, {"x1", "x2"}));
  EXPECT_FALSE(c3.applicable);
}

TEST(CompositionInclusion, FiniteInnerMapGivesEquality) {
  auto f = affine_map({"x1", "x2"}, {"x1^2", "x2"});
  auto g = affine_map({"x1", "x2"}, {"x1", "x1*x2"});
  auto rep = composition_inclusion(f, g);
  EXPECT_TRUE(rep.inclusion);
  EXPECT_TRUE(rep.equality_checked);
  EXPECT_TRUE(rep.equality);
}

TEST(CompositionInclusion, IdentityInner) {
  auto f = affine_map({"x1", "x2"}, {"x1", "x2"});
  auto g = affine_map({"x1", "x2"}, {"x1", "x1*x2"});
  auto rep = composition_inclusion(f, g);
  EXPECT_TRUE(rep.inclusion);
  EXPECT_TRUE(rep.equality);
}

TEST(CompositionInclusion, IdentityOuterEmptyInclusion) {
  auto f = affine_map({"x1", "x2"}, {"x1", "x1*x2"});
  auto g = affine_map({"x1", "x2"}, {"x1", "x2"});
  auto rep = composition_inclusion(f, g);
  EXPECT_TRUE(rep.inclusion);
  EXPECT_FALSE(rep.equality_checked);
  auto sgf = nonproperness_set(compose(g, f));
  EXPECT_TRUE(same_ideal(sgf.ideal, sfkit::test::I(sgf.target, {"y1"})));
}

TEST(CompositionInclusion, ArityMismatch) {
  auto f = affine_map({"x1", "x2"}, {"x1"});
  auto g = affine_map({"x1", "x2"}, {"x1", "x2"});
  EXPECT_THROW(composition_inclusion(f, g), PreconditionError);
}
