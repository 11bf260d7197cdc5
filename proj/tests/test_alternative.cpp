#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "powalt/alternative.hpp"
#include "powalt/error.hpp"
#include "powalt/groups.hpp"

using namespace powalt;
using nlohmann::json;

namespace {
  Word w(Group const& G, char const* s) {
    return parse_word(s, G.alphabet());
  }

  PairOptions quick() {
    PairOptions o;
    o.max_word_len = 6;
    return o;
  }
}  // namespace

TEST(Alternative, EllipticPairInFreeProductIsFree) {
  auto gog = load_gog("trivial-amalgam.json");
  auto v   = classify_pair(*gog.tree, w(*gog.group, "a"), w(*gog.group, "b"));
  ASSERT_EQ(v.kind, PairVerdict::Kind::free_certificate);
  EXPECT_EQ(v.n, 1);
  EXPECT_EQ(v.branch, "elliptic-elliptic");
  EXPECT_EQ(v.verified_length, 10u);
  ASSERT_TRUE(v.set_g && v.set_h);
  EXPECT_TRUE(check_ping_pong(*gog.tree, v).ok);
}

TEST(Alternative, PowersOfOneElementCommute) {
  auto gog = load_gog("trivial-amalgam.json");
  for (char const* g : {"a", "a*b", "b^2*a^-1"}) {
    Word x = w(*gog.group, g);
    auto v = classify_pair(*gog.tree, x, power(x, 2), quick());
    EXPECT_EQ(v.kind, PairVerdict::Kind::commute) << g;
    EXPECT_EQ(v.n, 1);
  }
}

TEST(Alternative, BaumslagSolitarPairIsUnknown) {
  auto gog = load_gog("bs12.json");
  auto v   = classify_pair(*gog.tree, w(*gog.group, "a"), w(*gog.group, "b"), quick());
  EXPECT_EQ(v.kind, PairVerdict::Kind::unknown);
  EXPECT_EQ(v.reason, "stabilisation-unverified");
  ASSERT_TRUE(v.probe);
  EXPECT_EQ(v.probe->verdict, StabilisationReport::Verdict::strict_decrease);
}

TEST(Alternative, BaumslagSolitarCommonEnd) {
  auto gog = load_gog("bs12.json");
  auto v   = classify_pair(*gog.tree, w(*gog.group, "b*a"), w(*gog.group, "b"), quick());
  ASSERT_EQ(v.kind, PairVerdict::Kind::common_boundary);
  EXPECT_EQ(v.utl_g, v.n * 1);
  EXPECT_EQ(v.utl_h, v.n * 1);
}

// Every branch that issues a certificate must survive an independent
// replay; random pairs in Z*Z checked against free reduction.
TEST(Alternative, FreeProductPairsAreCorrect) {
  auto gog = load_gog("trivial-amalgam.json");
  std::mt19937_64 rng(41);
  PairOptions o = quick();
  for (int i = 0; i < 25; ++i) {
    Word g = oracle::random_word(rng, 2, 1 + i % 3, 2);
    Word h = oracle::random_word(rng, 2, 1 + (i / 3) % 3, 2);
    auto v = classify_pair(*gog.tree, g, h, o);
    std::string pair = format_word(g, gog.group->alphabet()) + ", " +
                       format_word(h, gog.group->alphabet());
    if (v.kind == PairVerdict::Kind::free_certificate) {
      // in a free group a relation among powers means no free basis
      Word c = commutator(power(v.g, v.n), power(v.h, v.n));
      EXPECT_FALSE(oracle::free_trivial(c)) << pair;
      auto r = verify_free_certificate(*gog.group, gog.tree.get(), v, 6);
      EXPECT_TRUE(r.ok) << pair << ": " << r.failure;
    } else if (v.kind == PairVerdict::Kind::commute) {
      EXPECT_TRUE(oracle::free_trivial(commutator(power(v.g, v.n), power(v.h, v.n)))) << pair;
    }
  }
}

TEST(Alternative, FakeCertificateIsRejected) {
  auto        gog = load_gog("trivial-amalgam.json");
  PairVerdict fake;
  fake.kind = PairVerdict::Kind::free_certificate;
  fake.g    = w(*gog.group, "a");
  fake.h    = w(*gog.group, "a^2");
  fake.n    = 1;
  auto r    = verify_free_certificate(*gog.group, nullptr, fake, 4);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.words.ok);
}

TEST(Alternative, CertificateDocumentRoundTrip) {
  auto gog = load_gog("trivial-amalgam.json");
  auto v   = classify_pair(*gog.tree, w(*gog.group, "a"), w(*gog.group, "b*a*b^-1"), quick());
  ASSERT_EQ(v.kind, PairVerdict::Kind::free_certificate);
  json cert = certificate_json(v, gog.document, *gog.group);
  EXPECT_EQ(cert["schema_version"], 1);
  auto again = json::parse(cert.dump());
  EXPECT_TRUE(verify_certificate(again).ok);

  // swapping the predicates breaks ping-pong
  auto bad = again;
  std::swap(bad["predicates"]["g"], bad["predicates"]["h"]);
  EXPECT_FALSE(verify_certificate(bad).ok);

  // a relation among the words is caught
  auto rel = again;
  rel["h"] = "a^-1";
  EXPECT_FALSE(verify_certificate(rel).ok);
}

TEST(Alternative, DihedralPowersAreFreeToLength) {
  auto D = std::make_shared<DihedralArtin>(std::vector<std::string>{"a", "b"}, 3);
  auto r = check_free_words(*D, w(*D, "a^6"), w(*D, "b^6"), 6, 2);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.candidates, 364u);  // (3^6 - 1) / 2
  EXPECT_EQ(r.powers, 6u);
  auto s = check_free_words(*D, w(*D, "a"), w(*D, "b"), 6);
  EXPECT_FALSE(s.ok);
}

TEST(Alternative, TorsionOrder) {
  FiniteCyclic C("a", 5);
  EXPECT_EQ(torsion_order(C, w(C, "a^2")), 5);
  FreeGroup F({"a"});
  EXPECT_EQ(torsion_order(F, w(F, "a")), 0);
}

TEST(Alternative, LawParsing) {
  auto l = parse_law("[[x1,x2],[x3,x4]]");
  EXPECT_EQ(l.variables.size(), 4u);
  EXPECT_EQ(length(l.word), 16);
  EXPECT_THROW(parse_law("x1*x1^-1"), Error);
  EXPECT_THROW(parse_law("[x1,"), ParseError);
}

TEST(Alternative, LawChecks) {
  FreeAbelian Z({"a", "b"});
  EXPECT_TRUE(law_check(Z, {w(Z, "a"), w(Z, "b")}, parse_law("[x1,x2]"), 20).holds);
  FreeGroup F({"a", "b"});
  auto r = law_check(F, {w(F, "a"), w(F, "b")}, parse_law("[x1,x2]"), 20);
  EXPECT_FALSE(r.holds);
  ASSERT_EQ(r.counterexample.size(), 2u);
}

// The metabelian law on BS(1,2), rechecked with affine maps.
TEST(Alternative, MetabelianLawOnBaumslagSolitar) {
  auto gog = load_gog("bs12.json");
  auto const& G = *gog.group;
  auto law = parse_law("[[x1,x2],[x3,x4]]");
  auto r   = law_check(G, {w(G, "a"), w(G, "b")}, law, 30);
  EXPECT_TRUE(r.holds);
  int ia = G.alphabet().index("a"), ib = G.alphabet().index("b");
  std::mt19937_64 rng(43);
  for (int i = 0; i < 30; ++i) {
    Word x[4];
    for (auto& xi : x) {
      xi = oracle::random_word(rng, 2, 3, 2);
    }
    Word v = commutator(commutator(x[0], x[1]), commutator(x[2], x[3]));
    EXPECT_TRUE(oracle::affine(v, ia, ib).identity());
    EXPECT_TRUE(G.is_identity(v));
  }
}

TEST(Alternative, PowerAlternativeEstimates) {
  FreeAbelian Z({"a", "b"});
  auto z = pa_estimate(Z, w(Z, "a"), w(Z, "b"), 4, 6);
  EXPECT_EQ(z.n, 1);
  EXPECT_EQ(z.outcome, "commute");
  FreeGroup F({"a", "b"});
  auto f = pa_estimate(F, w(F, "a"), w(F, "b"), 4, 6);
  EXPECT_EQ(f.n, 1);
  EXPECT_EQ(f.outcome, "free");
  auto D = std::make_shared<DihedralArtin>(std::vector<std::string>{"a", "b"}, 3);
  auto d = pa_estimate(*D, w(*D, "a"), w(*D, "b"), 4, 6);
  EXPECT_EQ(d.n, 2);
  EXPECT_EQ(d.outcome, "free");
  EXPECT_EQ(d.evidence.size(), 1u);
}

TEST(Alternative, VerdictJsonHasClaimAndPredicates) {
  auto gog = load_gog("trivial-amalgam.json");
  auto v   = classify_pair(*gog.tree, w(*gog.group, "a"), w(*gog.group, "b"), quick());
  json j   = to_json(v, *gog.group);
  EXPECT_EQ(j["verdict"], "free_certificate");
  EXPECT_TRUE(j.contains("claim"));
  EXPECT_EQ(j["predicates"]["g"]["type"], "half_tree");
}
