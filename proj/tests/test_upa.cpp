#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "powalt/error.hpp"
#include "powalt/upa.hpp"

using namespace powalt;
using nlohmann::json;

namespace {
  FactBase facts(char const* file) {
    return parse_facts(load_json(data_path(std::string("facts/") + file)));
  }

  Derivation first_goal(FactBase const& f) {
    return derive_membership(f.goals.at(0), f);
  }

  FactBase inline_facts(json list, char const* group, char const* cls) {
    return parse_facts({{"schema_version", 1},
                        {"facts", list},
                        {"goals", {{{"group", group}, {"class", cls}}}}});
  }
}  // namespace

TEST(Upa, DirectProductOfFreeGroups) {
  auto f = facts("f2xf2.json");
  for (auto const& goal : f.goals) {
    auto d = derive_membership(goal, f);
    ASSERT_TRUE(d.derived) << goal.cls;
    EXPECT_TRUE(replay(d.proof, f).ok);
  }
  auto d = first_goal(f);
  EXPECT_EQ(d.proof.rule, "direct-product");
  EXPECT_TRUE(d.proof.exponent.computed);
  EXPECT_EQ(d.proof.exponent.value, 1);
}

TEST(Upa, FiniteIndexOvergroupMultipliesTheExponent) {
  auto f = facts("index6-overgroup.json");
  auto d = first_goal(f);
  ASSERT_TRUE(d.derived);
  EXPECT_TRUE(d.proof.exponent.computed);
  EXPECT_EQ(d.proof.exponent.value, 6);
  EXPECT_TRUE(replay(d.proof, f).ok);
}

TEST(Upa, RelativelyHyperbolicExponentIsNotComputed) {
  auto f = facts("relhyp.json");
  auto d = first_goal(f);
  ASSERT_TRUE(d.derived);
  EXPECT_FALSE(d.proof.exponent.computed);
  EXPECT_NE(to_json(d.proof.exponent).dump().find("finite, not computed"), std::string::npos);
  EXPECT_TRUE(replay(d.proof, f).ok);
}

TEST(Upa, ShippedFactFilesDeriveAndReplay) {
  for (char const* file : {"free-by-z.json", "three-manifold.json", "braid3.json"}) {
    auto f = facts(file);
    for (auto const& goal : f.goals) {
      auto d = derive_membership(goal, f);
      ASSERT_TRUE(d.derived) << file << " " << goal.group << " " << goal.cls;
      auto r = replay(d.proof, f);
      EXPECT_TRUE(r.ok) << file << ": " << r.failure;
      EXPECT_FALSE(render_proof(d.proof).empty());
    }
  }
}

TEST(Upa, CentralExtensionIsInUpaZero) {
  auto f = facts("braid3.json");
  auto d = first_goal(f);
  ASSERT_TRUE(d.derived);
  EXPECT_EQ(d.proof.rule, "central-extension");
}

TEST(Upa, MissingFactsAreReported) {
  auto f = inline_facts({{{"subject", "G"}, {"assertion", "bounded_torsion"}, {"bound", 2}}}, "G",
                        "UPA");
  auto d = first_goal(f);
  EXPECT_FALSE(d.derived);
  EXPECT_FALSE(d.missing.empty());
}

TEST(Upa, CyclesAreDetected) {
  auto f = inline_facts({{{"subject", "G"}, {"assertion", "finite_index_overgroup_of"},
                          {"group", "H"}, {"index", 2}},
                         {{"subject", "H"}, {"assertion", "finite_index_overgroup_of"},
                          {"group", "G"}, {"index", 2}}},
                        "G", "UPA");
  try {
    first_goal(f);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::cyclic_fact_dependency);
  }
}

TEST(Upa, ReplayNoticesRemovedFacts) {
  auto f = facts("index6-overgroup.json");
  auto d = first_goal(f);
  ASSERT_TRUE(d.derived);
  FactBase pruned = f;
  pruned.facts.erase(pruned.facts.begin());
  EXPECT_FALSE(replay(d.proof, pruned).ok);
}

TEST(Upa, MalformedFacts) {
  EXPECT_THROW(inline_facts({{{"subject", "G"}, {"assertion", "amenable"}}}, "G", "UPA"), Error);
  EXPECT_THROW(inline_facts({{{"subject", "G"}, {"assertion", "finite_index_overgroup_of"},
                              {"group", "H"}, {"index", 0}}},
                            "G", "UPA"),
               Error);
}
