#include <gtest/gtest.h>

#include <random>
#include <unordered_map>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "powalt/artin_graph.hpp"
#include "powalt/artin_group.hpp"
#include "powalt/bass_serre.hpp"

using namespace powalt;

namespace {
  Word w(Group const& G, char const* s) {
    return parse_word(s, G.alphabet());
  }

  Vertex coset(BassSerreTree const& t, char const* rep, int type) {
    return t.act(w(t.group(), rep), Vertex{type, {}});
  }
}  // namespace

TEST(Tree, DistancesInFreeProductTree) {
  auto        gog = load_gog("trivial-amalgam.json");
  auto const& t   = *gog.tree;
  Vertex      A   = coset(t, "1", 0);
  EXPECT_EQ(distance(t, A, A), 0u);
  EXPECT_EQ(distance(t, A, coset(t, "1", 1)), 1u);
  // 1.A -- a.B -- ab.A
  EXPECT_EQ(distance(t, A, coset(t, "a*b", 0)), 2u);
  EXPECT_EQ(distance(t, A, coset(t, "a*b*a*b", 0)), 4u);
  auto g = geodesic(t, A, coset(t, "b", 0));
  ASSERT_EQ(g.length(), 2u);
  EXPECT_EQ(g.vertices[1], coset(t, "1", 1));
}

// Breadth-first search over the neighbour lists.
TEST(Tree, DistanceMatchesBreadthFirstSearch) {
  auto        gog = load_gog("trivial-amalgam.json");
  auto const& t   = *gog.tree;
  std::unordered_map<Vertex, std::size_t, VertexHash> depth = {{t.base(), 0}};
  std::vector<Vertex> frontier = {t.base()};
  for (std::size_t d = 1; d <= 4; ++d) {
    std::vector<Vertex> next;
    for (auto const& v : frontier) {
      for (auto const& n : t.neighbours(v, 3).vertices) {
        if (depth.emplace(n, d).second) {
          next.push_back(n);
        }
      }
    }
    frontier = next;
  }
  for (auto const& [v, d] : depth) {
    EXPECT_EQ(distance(t, t.base(), v), d);
  }
}

TEST(Tree, GeodesicsAreConsistent) {
  auto gog = load_gog("bs12.json");
  auto const& t = *gog.tree;
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    Vertex u = t.act(oracle::random_word(rng, 2, 4, 2), t.base());
    Vertex v = t.act(oracle::random_word(rng, 2, 4, 2), t.base());
    Vertex x = t.act(oracle::random_word(rng, 2, 4, 2), t.base());
    auto   g = geodesic(t, u, v);
    EXPECT_EQ(g.length(), distance(t, v, u));
    EXPECT_LE(distance(t, u, v), distance(t, u, x) + distance(t, x, v));
    for (std::size_t k = 0; k + 1 < g.vertices.size(); ++k) {
      EXPECT_EQ(distance(t, g.vertices[k], g.vertices[k + 1]), 1u);
    }
    // the group acts by isometries
    Word h = oracle::random_word(rng, 2, 3, 2);
    EXPECT_EQ(distance(t, t.act(h, u), t.act(h, v)), distance(t, u, v));
  }
}

TEST(Tree, NeighboursAreSymmetric) {
  auto gog = load_gog("artin-path34.json");
  auto const& t = *gog.tree;
  for (auto const& v : ball(t, t.base(), 2, 4).vertices) {
    for (auto const& n : t.neighbours(v, 4).vertices) {
      EXPECT_EQ(distance(t, v, n), 1u);
      auto back = t.neighbours(n, 64).vertices;
      EXPECT_NE(std::find(back.begin(), back.end(), v), back.end());
    }
  }
}

TEST(Tree, ClassificationExamples) {
  auto zz = load_gog("trivial-amalgam.json");
  auto c  = classify_isometry(*zz.tree, w(*zz.group, "a*b"));
  EXPECT_FALSE(c.elliptic());
  EXPECT_EQ(c.tau, 2);
  EXPECT_TRUE(classify_isometry(*zz.tree, {}).elliptic());

  auto bs = load_gog("bs12.json");
  auto a  = classify_isometry(*bs.tree, w(*bs.group, "a"));
  ASSERT_TRUE(a.elliptic());
  EXPECT_TRUE(bs.tree->fixes(w(*bs.group, "a"), bs.tree->base()));
  auto b = classify_isometry(*bs.tree, w(*bs.group, "b"));
  EXPECT_FALSE(b.elliptic());
  EXPECT_EQ(b.tau, 1);
}

// The displacement criterion against brute-force minimum displacement.
TEST(Tree, ClassificationMatchesBruteForce) {
  std::vector<std::pair<char const*, int>> trees = {
      {"trivial-amalgam.json", 2}, {"bs12.json", 2}, {"artin-path34.json", 3}};
  std::mt19937_64 rng(23);
  for (auto const& [file, gens] : trees) {
    auto        gog = load_gog(file);
    auto const& t   = *gog.tree;
    for (int i = 0; i < 30; ++i) {
      Word g  = oracle::random_word(rng, gens, 3, 2);
      auto c  = classify_isometry(t, g);
      auto bf = oracle::brute_displacement(t, g, 4, 3);
      EXPECT_EQ(c.elliptic(), bf.min == 0) << file << " " << format_word(g, t.group().alphabet());
      EXPECT_EQ(static_cast<std::size_t>(c.tau), bf.min);
    }
  }
}

TEST(Tree, FixedSets) {
  auto zz = load_gog("trivial-amalgam.json");
  auto s  = fixed_set_ball(*zz.tree, w(*zz.group, "a"), 3);
  ASSERT_EQ(s.vertices.size(), 1u);
  EXPECT_EQ(s.vertices[0], coset(*zz.tree, "1", 0));

  auto        bs = load_gog("bs12.json");
  auto const& t  = *bs.tree;
  Word        a  = w(*bs.group, "a");
  auto        f  = fixed_set_ball(t, a, 3, 1, 8);
  // the ray b^n <a>, n >= 0, lies in Fix(a)
  for (int n = 0; n <= 3; ++n) {
    Vertex x = t.act(power(w(*bs.group, "b"), n), t.base());
    EXPECT_TRUE(t.fixes(a, x));
    EXPECT_NE(std::find(f.vertices.begin(), f.vertices.end(), x), f.vertices.end());
  }
  // convexity within the ball
  for (auto const& u : f.vertices) {
    for (auto const& v : f.vertices) {
      for (auto const& x : geodesic(t, u, v).vertices) {
        EXPECT_TRUE(t.fixes(a, x));
      }
    }
  }
  // independent count: brute force over the radius-3 ball
  std::size_t fixed = 0;
  for (auto const& x : ball(t, f.center, 3, 8).vertices) {
    fixed += t.fixes(a, x);
  }
  EXPECT_EQ(f.vertices.size(), fixed);
  // a^4 fixes strictly more of the ball than a
  auto f4 = fixed_set_ball(t, power(a, 4), 3, 1, 8);
  EXPECT_GT(f4.vertices.size(), f.vertices.size());
}

TEST(Tree, AxisOverlap) {
  auto zz = load_gog("trivial-amalgam.json");
  auto const& t = *zz.tree;
  Word g = w(*zz.group, "a*b"), h = w(*zz.group, "b*a");
  auto same = axis_overlap(t, g, g, 4);
  EXPECT_TRUE(same.exceeds_low && same.exceeds_high);
  auto o = axis_overlap(t, g, h, 4);
  ASSERT_FALSE(o.empty);
  EXPECT_TRUE(o.bounded());
  EXPECT_EQ(o.length(), 1);
  // brute force: common vertices of the two axes inside a big ball
  AxisFrame fg(t, g), fh(t, h);
  std::size_t common = 0;
  for (auto const& x : ball(t, t.base(), 6, 3).vertices) {
    common += fg.distance_to_axis(x) == 0 && fh.distance_to_axis(x) == 0;
  }
  EXPECT_EQ(common, static_cast<std::size_t>(o.length() + 1));
}

TEST(Tree, AxisFramePositions) {
  auto bs = load_gog("bs12.json");
  auto const& t = *bs.tree;
  Word b = w(*bs.group, "b");
  AxisFrame f(t, b);
  EXPECT_EQ(f.tau(), 1);
  for (long long p = -3; p <= 3; ++p) {
    EXPECT_EQ(f.position(f.at(p)), p);
    EXPECT_EQ(f.at(p + 1), t.act(b, f.at(p)));
  }
}
