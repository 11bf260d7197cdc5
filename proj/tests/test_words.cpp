#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "powalt/error.hpp"
#include "powalt/word.hpp"

using namespace powalt;

namespace {
  Alphabet const ab({"a", "b"});
}

TEST(Words, ParseJuxtapositionAndStar) {
  EXPECT_EQ(parse_word("a*b^-2*a", ab), parse_word("a b^-2 a", ab));
  EXPECT_EQ(format_word(parse_word("a*b^-2*a", ab), ab), "a*b^-2*a");
  EXPECT_TRUE(parse_word("1", ab).empty());
  EXPECT_TRUE(parse_word("", ab).empty());
}

TEST(Words, ParseReducesFreely) {
  EXPECT_EQ(format_word(parse_word("a*b*b^-1*a", ab), ab), "a^2");
  EXPECT_EQ(format_word(parse_word("a^3 a^-3", ab), ab), "1");
}

TEST(Words, ParseErrorNamesTokenAndPosition) {
  try {
    parse_word("a*c", ab);
    FAIL() << "expected a parse error";
  } catch (ParseError const& e) {
    EXPECT_EQ(e.token(), "c");
    EXPECT_EQ(e.position(), 2u);
    EXPECT_EQ(e.code(), ErrorCode::parse_error);
  }
  EXPECT_THROW(parse_word("a^", ab), ParseError);
  EXPECT_THROW(parse_word("a**b", ab), ParseError);
}

TEST(Words, FormatParseRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Word w = reduce(oracle::random_word(rng, 2, 6, 4));
    EXPECT_EQ(parse_word(format_word(w, ab), ab), w);
  }
}

TEST(Words, ReduceAgreesWithLetterStack) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Word w = oracle::random_word(rng, 2, 8, 2);
    Word v = concat(w, inverse(reduce(w)));
    EXPECT_TRUE(reduce(v).empty());
    EXPECT_EQ(reduce(w).empty(), oracle::free_trivial(w));
  }
}

TEST(Words, PowerAndCommutator) {
  Word a = generator(0), b = generator(1);
  EXPECT_EQ(power(a, 3), generator(0, 3));
  EXPECT_EQ(power(concat(a, b), -1), inverse(concat(a, b)));
  EXPECT_EQ(length(commutator(a, b)), 4);
}
