#include <gtest/gtest.h>

#include "support.hpp"

using namespace unipotent_lab;

namespace {
const Word x = Word::generator(0), y = Word::generator(1);
}

TEST(Words, FreeReduction) {
  EXPECT_TRUE((x * inverse(x)).is_identity());
  EXPECT_EQ(x * y * inverse(y) * x, Word::generator(0, 2));
  Word c = commutator(x, y);
  EXPECT_EQ(c.syllables(), 4u);
  EXPECT_EQ(c.length(), 4);
  EXPECT_EQ(format_word(c, {"x", "y"}), "x y x^-1 y^-1");
}

TEST(Words, ParseGrammar) {
  std::vector<std::string> names{"x", "y"};
  EXPECT_EQ(parse_word("[x,y]", std::as_const(names)), commutator(x, y));
  EXPECT_EQ(parse_word("x y y^-1 x", std::as_const(names)), Word::generator(0, 2));
  EXPECT_EQ(parse_word("(x y)^2", std::as_const(names)), x * y * x * y);
  EXPECT_EQ(parse_word("[[x,y],x]", std::as_const(names)), commutator(commutator(x, y), x));
  EXPECT_EQ(parse_word("1", std::as_const(names)), Word{});
  EXPECT_THROW(parse_word("x^", std::as_const(names)), ParseError);
  EXPECT_THROW(parse_word("z", std::as_const(names)), InputError);
}

TEST(Words, FormatRoundTrip) {
  std::mt19937_64 gen(1);
  std::vector<std::string> names{"x", "y", "z"};
  for (int t = 0; t < 50; ++t) {
    Word w = test_support::random_word(gen, 3, gen() % 8);
    EXPECT_EQ(parse_word(format_word(w, names), std::as_const(names)), w);
  }
}

TEST(PresentationFile, ParsesHeaderAndRelators) {
  auto p = parse_presentation("p 2\ngenerators x y\nrelator [x,y]\n");
  ASSERT_TRUE(p.prime);
  EXPECT_EQ(*p.prime, 2u);
  EXPECT_EQ(p.generators, (std::vector<std::string>{"x", "y"}));
  ASSERT_EQ(p.relator_count(), 1u);
  EXPECT_EQ(p.relators[0], commutator(x, y));
}

TEST(PresentationFile, PowerRelator) {
  auto p = parse_presentation("generators x\nrelator x^2\n");
  ASSERT_EQ(p.relator_count(), 1u);
  EXPECT_EQ(p.relators[0], Word::generator(0, 2));
  EXPECT_FALSE(p.prime);
}

TEST(PresentationFile, Errors) {
  EXPECT_THROW(parse_presentation("generators x\nrelator x^\n"), ParseError);
  EXPECT_THROW(parse_presentation("p 4\ngenerators x\n"), InputError);
  EXPECT_THROW(parse_presentation("relator x\n"), InputError);
  try {
    parse_presentation("generators x\nrelator x^\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(PresentationFile, FrattiniWarning) {
  auto p = parse_presentation("p 2\ngenerators x y\nrelator x y^2\n");
  EXPECT_FALSE(p.warnings.empty());
  auto q = parse_presentation("p 2\ngenerators x y\nrelator x^2 [x,y]\n");
  EXPECT_TRUE(q.warnings.empty());
}

TEST(Simplicial, FaceMaps) {
  auto sp = simplicialize(parse_presentation("p 2\ngenerators x y\nrelator [x,y]\n"));
  Word yy = Word::generator(sp.y_generator(0));
  EXPECT_EQ(apply_generator_map(sp.d1, yy), commutator(x, y));
  EXPECT_TRUE(apply_generator_map(sp.d0, yy).is_identity());
  EXPECT_EQ(apply_generator_map(sp.d0, yy * x), x);
  EXPECT_EQ(sp.total_names(), (std::vector<std::string>{"x", "y", "r1"}));
}

TEST(Simplicial, ZeroAndTwoRelators) {
  auto free = simplicialize(parse_presentation("generators x y\n"));
  EXPECT_EQ(apply_generator_map(free.d0, x * y), x * y);
  EXPECT_EQ(apply_generator_map(free.d1, x * y), x * y);
  auto two = simplicialize(parse_presentation("p 2\ngenerators x y\nrelator x^2\nrelator [x,y]\n"));
  EXPECT_EQ(apply_generator_map(two.d1, Word::generator(2)), Word::generator(0, 2));
  EXPECT_EQ(apply_generator_map(two.d1, Word::generator(3)), commutator(x, y));
}

// d0 s0 = d1 s0 = identity on words over X.
TEST(Simplicial, PropertyIdentities) {
  auto sp = simplicialize(test_support::fixture("two_relators.pres"));
  std::mt19937_64 gen(2);
  for (int t = 0; t < 100; ++t) {
    Word w = test_support::random_word(gen, 2, gen() % 10);
    Word lifted = apply_generator_map(sp.s0, w);
    EXPECT_EQ(apply_generator_map(sp.d0, lifted), w);
    EXPECT_EQ(apply_generator_map(sp.d1, lifted), w);
  }
}

// Words in ker d0 map under d1 into the normal closure of the relators; seen
// in a nilpotent quotient, d1(k) has Lie log inside the relation ideal.
TEST(Simplicial, PropertyKernelLandsInRelations) {
  auto pres = test_support::fixture("commutator.pres");
  auto sp = simplicialize(pres);
  const unsigned c = 4;
  auto base = make_free_lie(2, c);
  auto rel = ideal_closure(std::vector<Vector>{base->log_word(pres.relators[0])}, base);
  std::mt19937_64 gen(4);
  for (int t = 0; t < 20; ++t) {
    Word u = test_support::random_word(gen, 3, 1 + gen() % 4);
    Word k = u * Word::generator(2, (gen() % 2) ? 1 : -1) * inverse(u);  // conjugate of a y-letter
    ASSERT_TRUE(apply_generator_map(sp.d0, k).is_identity());
    EXPECT_TRUE(rel.contains(base->log_word(apply_generator_map(sp.d1, k))));
  }
}
