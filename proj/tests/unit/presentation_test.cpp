#include "oracles.hpp"
#include "seifert/invariants.hpp"
#include "seifert/presentation.hpp"

#include <gtest/gtest.h>

using namespace seifert;

TEST(Word, FreeAndCyclicReduction) {
  EXPECT_EQ(free_reduce({1, 2, -2, -1, 3}), (Word{3}));
  EXPECT_EQ(free_reduce({1, -1}), Word{});
  EXPECT_EQ(cyclic_reduce({-1, 2, 3, 1}), (Word{2, 3}));
  EXPECT_EQ(cyclic_reduce({2, 1, -2}), (Word{1}));
}

TEST(Word, PowersAndInverses) {
  EXPECT_EQ(letter_power(2, 3), (Word{2, 2, 2}));
  EXPECT_EQ(letter_power(2, -2), (Word{-2, -2}));
  EXPECT_EQ(letter_power(2, 0), Word{});
  EXPECT_EQ(inverse({1, 2, -3}), (Word{3, -2, -1}));
  EXPECT_EQ(commutator(1, 2), (Word{1, 2, -1, -2}));
  EXPECT_EQ(free_reduce(concat({1, 2}, inverse({1, 2}))), Word{});
}

TEST(Presentation, RendersWords) {
  Presentation p{{"a", "b"}, {{1, 1, -2}, {}}, std::nullopt};
  EXPECT_EQ(render_word(p, p.relators[0]), "a^2*b^-1");
  EXPECT_EQ(render_presentation(p), "< a, b | a^2*b^-1, 1 >");
}

TEST(Presentation, ValidateRejectsUnknownGenerators) {
  Presentation p{{"a"}, {{1, 2}}, std::nullopt};
  EXPECT_THROW(p.validate(), DomainError);
  Presentation q{{"a"}, {{1}}, 3};
  EXPECT_THROW(q.validate(), DomainError);
}

TEST(Simplify, EliminatesGeneratorsOfLengthOneOccurrence) {
  // < a, b | a*b^-1 > is Z
  Presentation p{{"a", "b"}, {{1, -2}}, std::nullopt};
  auto s = simplify(p);
  EXPECT_EQ(s.generator_count(), 1u);
  EXPECT_TRUE(s.relators.empty());
}

TEST(Simplify, KeepsFirstHomology) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    auto s = oracle::random_symbol(rng, {.allow_boundary = true});
    auto p = presentation(normalize(s));
    EXPECT_EQ(first_homology(simplify(p)), first_homology(p)) << render_symbol(s);
  }
}

TEST(Simplify, KeepsHomomorphismCounts) {
  std::mt19937_64 rng(3);
  auto groups = oracle::catalogue_up_to(8);
  for (int i = 0; i < 30; ++i) {
    auto s = oracle::random_symbol(rng, {.max_genus = 1, .max_fibres = 3, .max_alpha = 5});
    auto p = presentation(normalize(s));
    auto q = simplify(p);
    EXPECT_LE(q.generator_count(), p.generator_count());
    for (const auto& g : groups) EXPECT_EQ(count_homomorphisms(q, g), count_homomorphisms(p, g)) << g.name();
  }
}
