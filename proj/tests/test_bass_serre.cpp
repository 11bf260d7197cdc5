#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "powalt/artin_graph.hpp"
#include "powalt/artin_group.hpp"
#include "powalt/bass_serre.hpp"
#include "powalt/error.hpp"

using namespace powalt;

namespace {
  Word w(Group const& G, char const* s) {
    return parse_word(s, G.alphabet());
  }
}  // namespace

TEST(BassSerre, VertexStabilisers) {
  auto bs = load_gog("bs12.json");
  auto const& t = *bs.tree;
  EXPECT_EQ(t.vertex_types(), 1);
  // b^n <a> is stabilised by b^n a b^-n
  for (int n = -2; n <= 2; ++n) {
    Word   bn = power(w(*bs.group, "b"), n);
    Vertex x  = t.act(bn, t.base());
    Word   s  = conjugate(bn, w(*bs.group, "a"));
    EXPECT_TRUE(t.fixes(s, x));
    EXPECT_EQ(t.from_vertex_coordinates(x, t.to_vertex_coordinates(x, s)), bs.group->normalize(s));
  }
}

TEST(BassSerre, PointwiseStabilisers) {
  auto zz = load_gog("trivial-amalgam.json");
  auto const& tz = *zz.tree;
  auto seg = geodesic(tz, tz.base(), tz.act(w(*zz.group, "b"), tz.base()));
  EXPECT_TRUE(pointwise_stabiliser(tz, seg).trivial());

  auto bs = load_gog("bs12.json");
  auto const& t = *bs.tree;
  Vertex far = t.act(w(*bs.group, "b^3"), t.base());
  auto   d   = pointwise_stabiliser(t, geodesic(t, t.base(), far));
  EXPECT_FALSE(d.trivial());
  EXPECT_TRUE(bs.group->equal(d.global, w(*bs.group, "a")));

  auto path = load_graph(data_path("path34.gv"));
  auto sp   = artin_splitting(path);
  ASSERT_TRUE(sp);
  auto const& ta = *sp->tree;
  Vertex      n  = ta.neighbours(ta.base(), 4).vertices.at(0);
  auto        e  = pointwise_stabiliser(ta, geodesic(ta, ta.base(), n));
  EXPECT_TRUE(sp->group->equal(e.global, w(*sp->group, "b"))
              || sp->group->equal(e.global, w(*sp->group, "b^-1")));
}

// Strict chain <a^(2^n)> along the b-ray, each step separated.
TEST(BassSerre, BaumslagSolitarProbe) {
  auto bs = load_gog("bs12.json");
  auto const& t = *bs.tree;
  auto r = stabilisation_probe(t, w(*bs.group, "b"), 4);
  EXPECT_EQ(r.verdict, StabilisationReport::Verdict::strict_decrease);
  ASSERT_GE(r.chain.size(), 4u);
  for (std::size_t n = 0; n < r.chain.size(); ++n) {
    auto const& s = r.chain[n];
    Word expected = generator(bs.group->alphabet().index("a"), 1LL << n);
    EXPECT_TRUE(bs.group->equal(s.stabiliser.global, expected)) << n;
    EXPECT_TRUE(s.strict);
    EXPECT_TRUE(bs.group->equal(s.separator, expected));
    EXPECT_FALSE(t.fixes(s.separator, s.moved));
  }
}

TEST(BassSerre, FreeProductStabilises) {
  auto zz = load_gog("trivial-amalgam.json");
  auto r  = stabilisation_probe(*zz.tree, w(*zz.group, "a*b"), 4);
  EXPECT_EQ(r.verdict, StabilisationReport::Verdict::stabilises);
}

TEST(BassSerre, ArtinSplittingStabilises) {
  auto sp = artin_splitting(load_graph(data_path("path34.gv")));
  ASSERT_TRUE(sp);
  auto r = stabilisation_probe(*sp->tree, w(*sp->group, "a*c"), 6);
  EXPECT_EQ(r.verdict, StabilisationReport::Verdict::stabilises);
  EXPECT_LE(r.step, 3u);
}

// utl on the fixed end b^{+inf} is the exponent sum of b.
TEST(BassSerre, UltimateTranslationLengthIsAdditive) {
  auto bs = load_gog("bs12.json");
  auto const& t = *bs.tree;
  auto const& G = *bs.group;
  int  ib = G.alphabet().index("b");
  BoundaryPoint xi{w(G, "b"), 1};
  EXPECT_EQ(utl_value(t, xi, w(G, "b"), 8), 1);
  EXPECT_EQ(utl_value(t, xi, w(G, "a"), 8), 0);
  EXPECT_EQ(utl_value(t, xi, w(G, "b*a"), 8), 1);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    Word g = oracle::random_word(rng, 2, 3, 2);
    Word h = oracle::random_word(rng, 2, 3, 2);
    long long ug = utl_value(t, xi, g, 8), uh = utl_value(t, xi, h, 8);
    EXPECT_EQ(utl_value(t, xi, concat(g, h), 8), ug + uh);
    long long sum = 0;
    for (auto const& s : g) {
      sum += s.gen == ib ? s.exp : 0;
    }
    EXPECT_EQ(ug, sum);
  }
}

TEST(BassSerre, UtlRejectsNonStabilisers) {
  auto zz = load_gog("trivial-amalgam.json");
  BoundaryPoint xi{w(*zz.group, "a*b"), 1};
  EXPECT_EQ(utl_value(*zz.tree, xi, w(*zz.group, "a*b"), 8), 2);
  try {
    utl_value(*zz.tree, xi, w(*zz.group, "b*a*b"), 8);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_a_stabiliser);
  }
}

TEST(BassSerre, RootsClosure) {
  EXPECT_EQ(roots_closure_check(*load_gog("trivial-amalgam.json").tree).verdict,
            RootsClosure::Verdict::holds);
  EXPECT_EQ(roots_closure_check(*load_gog("bs12.json").tree).verdict,
            RootsClosure::Verdict::fails);
  nlohmann::json f2 = {{"type", "free"}, {"generators", {"x", "y"}}};
  nlohmann::json g2 = {{"type", "free"}, {"generators", {"u", "v"}}};
  auto doc = [&](char const* l, char const* r) {
    return nlohmann::json{
        {"schema_version", 1},
        {"vertices", {{{"name", "A"}, {"group", f2}}, {{"name", "B"}, {"group", g2}}}},
        {"edges",
         {{{"name", "e"}, {"source", "A"}, {"target", "B"}, {"source_image", l},
           {"target_image", r}}}}};
  };
  EXPECT_EQ(roots_closure_check(*gog_from_json(doc("x*y*x^-1*y^-1", "u^2*v^3")).tree).verdict,
            RootsClosure::Verdict::holds);
  EXPECT_EQ(roots_closure_check(*gog_from_json(doc("x^2", "u*v")).tree).verdict,
            RootsClosure::Verdict::fails);
}
