#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "powalt/artin_graph.hpp"
#include "powalt/artin_group.hpp"
#include "powalt/artin_pairs.hpp"
#include "powalt/error.hpp"

using namespace powalt;

namespace {
  PresentationGraph graph(char const* text) {
    return parse_graph(text);
  }

  using Parts = std::vector<std::vector<std::string>>;

  Parts parts(VisualSplitting const& s) {
    return {s.gamma1, s.gamma2, s.gamma0};
  }
}  // namespace

TEST(Artin, GraphFormatsAgree) {
  auto dot  = load_graph(data_path("path34.gv"));
  auto js   = load_graph(data_path("path34.json"));
  EXPECT_EQ(graph_to_json(dot), graph_to_json(js));
  EXPECT_EQ(graph_to_json(graph_from_json(graph_to_json(dot))), graph_to_json(dot));
  EXPECT_EQ(dot.label(dot.index("a"), dot.index("b")), 3);
  EXPECT_EQ(dot.label(dot.index("a"), dot.index("c")), 0);
}

TEST(Artin, GraphParseErrors) {
  try {
    parse_graph("graph { a -- b [label=x]; }");
    FAIL();
  } catch (ParseError const& e) {
    EXPECT_EQ(e.token(), "x");
  }
  EXPECT_THROW(parse_graph("graph { a -- b [label=1]; }"), Error);
  EXPECT_THROW(parse_graph("graph { a -- a [label=3]; }"), Error);
}

TEST(Artin, Classification) {
  auto tri = classify_graph(graph("graph { a -- b [label=2]; b -- c [label=3]; a -- c [label=7]; }"));
  EXPECT_TRUE(tri.two_dimensional);
  EXPECT_FALSE(tri.triangle_free);
  auto p22 = classify_graph(graph("graph { a -- b [label=2]; b -- c [label=2]; }"));
  EXPECT_FALSE(p22.two_two_free);
  auto e3 = classify_graph(load_graph(data_path("edge3.gv")));
  EXPECT_TRUE(e3.dihedral);
  EXPECT_TRUE(e3.spherical);
  auto p = classify_graph(load_graph(data_path("path34.gv")));
  EXPECT_TRUE(p.two_two_free && p.triangle_free);
  EXPECT_FALSE(p.spherical);
}

TEST(Artin, UniformExponents) {
  std::vector<std::pair<char const*, long long>> cases = {
      {"edge3.gv", 6}, {"edge4.gv", 4}, {"edge5.gv", 10}, {"edge6.gv", 3}, {"edges46.gv", 6},
      {"path34.gv", 6}};
  for (auto const& [file, n] : cases) {
    EXPECT_EQ(uniform_exponent(load_graph(data_path(file))).adjusted, n) << file;
  }
  auto e4 = uniform_exponent(load_graph(data_path("edge4.gv")));
  EXPECT_EQ(e4.N, 2);
  EXPECT_EQ(dihedral_index(6), 3);
  EXPECT_EQ(dihedral_index(3), 6);
}

TEST(Artin, VisualSplittings) {
  auto path = load_graph(data_path("path34.gv"));
  auto sp   = visual_splittings(path);
  ASSERT_EQ(sp.size(), 1u);
  EXPECT_EQ(parts(sp[0]), (Parts{{"a", "b"}, {"b", "c"}, {"b"}}));

  EXPECT_TRUE(visual_splittings(load_graph(data_path("edge3.gv"))).empty());

  auto cyc = visual_splittings(load_graph(data_path("cycle4.gv")));
  ASSERT_EQ(cyc.size(), 2u);
  std::vector<std::vector<std::string>> seps;
  for (auto const& s : cyc) {
    seps.push_back(s.gamma0);
  }
  std::sort(seps.begin(), seps.end());
  EXPECT_EQ(seps, (Parts{{"a", "c"}, {"b", "d"}}));
}

// Brute force: every proper separator pair of the 4-cycle.
TEST(Artin, SplittingsSeparate) {
  auto g = load_graph(data_path("cycle4.gv"));
  for (auto const& s : visual_splittings(g)) {
    auto i1 = g.indices(s.gamma1), i2 = g.indices(s.gamma2);
    for (int u : i1) {
      for (int v : i2) {
        bool in0 = std::find(s.gamma0.begin(), s.gamma0.end(), g.name(u)) != s.gamma0.end()
                   || std::find(s.gamma0.begin(), s.gamma0.end(), g.name(v)) != s.gamma0.end();
        if (!in0) {
          EXPECT_FALSE(g.adjacent(u, v));
        }
      }
    }
  }
}

TEST(Artin, Reductions) {
  auto leaves = [](char const* file) {
    auto l = reduction_leaves(reduction_report(load_graph(data_path(file))));
    std::sort(l.begin(), l.end());
    return l;
  };
  EXPECT_EQ(leaves("path34.gv"), (Parts{{"a", "b"}, {"b", "c"}}));
  EXPECT_EQ(leaves("edge3.gv"), (Parts{{"a", "b"}}));
  EXPECT_EQ(leaves("star3.gv"), (Parts{{"o", "x"}, {"o", "y"}, {"o", "z"}}));
  auto star = reduction_report(load_graph(data_path("star3.gv")));
  EXPECT_FALSE(star.leaf);
  int depth = 0;
  for (auto const* n = &star; !n->leaf; n = &n->children.back()) {
    ++depth;
  }
  EXPECT_GE(depth, 1);
  // every leaf is complete
  auto g = load_graph(data_path("cycle4.gv"));
  for (auto const& leaf : reduction_leaves(reduction_report(g))) {
    EXPECT_TRUE(g.induced(g.indices(leaf)).complete());
  }
}

TEST(Artin, DihedralStructure) {
  auto d3 = dihedral_structure(3);
  EXPECT_EQ(d3.m_prime, 6);
  EXPECT_EQ(d3.k, 2);
  EXPECT_EQ(d3.abelian_rank, 3u);
  EXPECT_TRUE(d3.torsion.empty());
  for (int m : {4, 5, 6}) {
    auto d = dihedral_structure(m);
    EXPECT_EQ(d.abelian_rank, static_cast<std::size_t>(d.k + 1)) << m;
    EXPECT_TRUE(d.torsion.empty()) << m;
    EXPECT_TRUE(d.central_primitive) << m;
  }
  EXPECT_EQ(dihedral_structure(6).m_prime, 3);
}

TEST(Artin, WordProblemSupport) {
  EXPECT_NO_THROW(artin_group(load_graph(data_path("path34.gv"))));
  try {
    artin_group(load_graph(data_path("cycle4.gv")));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::unsupported_word_problem);
  }
}

TEST(Artin, PairChecks) {
  auto path = load_graph(data_path("path34.gv"));
  PairOptions o;
  o.max_word_len = 6;
  auto ac = pair_check_artin(path, "a", "c", o);
  EXPECT_EQ(ac.verdict.kind, PairVerdict::Kind::free_certificate);
  EXPECT_EQ(ac.verdict.n, 1);
  auto inv = pair_check_artin(path, "a*b", "b^-1*a^-1", o);
  EXPECT_EQ(inv.verdict.kind, PairVerdict::Kind::commute);
  auto ab = pair_check_artin(path, "a", "b", o);
  EXPECT_EQ(ab.verdict.kind, PairVerdict::Kind::free_certificate);
  EXPECT_EQ(ab.verdict.n, 6);
  auto mixed = pair_check_artin(path, "a*c", "b", o);
  EXPECT_EQ(mixed.verdict.kind, PairVerdict::Kind::free_certificate);
  EXPECT_GE(mixed.verdict.n, 3);
  EXPECT_THROW(pair_check_artin(load_graph(data_path("cycle4.gv")), "a", "b", o), Error);
}

TEST(Artin, GrowthPreconditions) {
  auto iso = graph("graph { a; c; }");
  auto w   = growth_witness(iso, {"a", "c"}, 5, 6);
  ASSERT_TRUE(w.found);
  EXPECT_EQ(w.s, "a");
  EXPECT_EQ(w.t, "c");
  try {
    growth_witness(load_graph(data_path("edge3.gv")), {"a", "b"}, 6, 6);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::input_error);
  }
}
