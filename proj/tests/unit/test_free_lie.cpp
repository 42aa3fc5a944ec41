#include <gtest/gtest.h>

#include "support.hpp"

using namespace unipotent_lab;

TEST(HallBasis, DegreeSizes) {
  EXPECT_EQ(HallBasis(2, 5).degree_sizes(), (std::vector<std::size_t>{0, 2, 1, 2, 3, 6}));
  EXPECT_EQ(HallBasis(1, 4).degree_sizes(), (std::vector<std::size_t>{0, 1, 0, 0, 0}));
  EXPECT_EQ(HallBasis(3, 2).degree_sizes()[2], 3u);
}

TEST(HallBasis, PropertyWittIdentity) {
  for (std::size_t k = 1; k <= 3; ++k) {
    auto sizes = HallBasis(k, 8).degree_sizes();
    for (unsigned n = 1; n <= 8; ++n) {
      EXPECT_EQ(Integer(static_cast<unsigned long>(sizes[n])), witt_number(k, n));
      Integer sum = 0;
      for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) sum += Integer(d) * witt_number(k, d);
      EXPECT_EQ(sum, pow(Integer(static_cast<unsigned long>(k)), n));
    }
  }
}

TEST(HallBasis, WordsAreLyndonAndFormatted) {
  HallBasis b(2, 4);
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_TRUE(is_lyndon(b[i].letters));
  EXPECT_EQ(b.format(2, {"x", "y"}), "[x,y]");
  EXPECT_EQ(b.index_of({0, 1}), 2u);
}

TEST(FreeLie, BracketExamples) {
  auto L = make_free_lie(2, 4, {"x", "y"});
  auto x = L->generator(0), y = L->generator(1);
  EXPECT_TRUE(is_zero(L->bracket(x, x)));
  Vector xy = L->bracket(x, y);
  Vector hall = L->zero();
  hall[*L->basis().index_of({0, 1})] = 1;
  EXPECT_EQ(xy, hall);
  // [[x,y],x] against the associative commutator in the series algebra.
  Vector xyx = L->bracket(xy, x);
  auto X = L->to_series(x), Y = L->to_series(y);
  auto XY = X * Y - Y * X;
  EXPECT_EQ(L->to_series(xyx), XY * X - X * XY);
  EXPECT_EQ(L->from_series(XY * X - X * XY), xyx);
}

TEST(FreeLie, NonLieSeriesRejected) {
  auto L = make_free_lie(2, 3);
  auto s = L->to_series(L->generator(0));
  EXPECT_THROW(L->from_series(s * s), InvariantViolation);
}

TEST(FreeLie, BchExamples) {
  auto L = make_free_lie(2, 2);
  auto x = L->generator(0), y = L->generator(1);
  EXPECT_TRUE(is_zero(L->bch(x, negated(x))));
  Vector want = x;
  for (std::size_t i = 0; i < want.size(); ++i) want[i] += y[i];
  axpy(want, frac(-1, 2), L->bracket(x, y));
  EXPECT_EQ(L->bch(x, y), want);

  auto L3 = make_free_lie(2, 3);
  Vector a = L3->bracket(L3->generator(0), L3->generator(1));
  Vector b = a;
  for (auto& v : b) v *= 2;
  Vector sum = a;
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b[i];
  EXPECT_EQ(L3->bch(a, b), sum);
}

TEST(FreeLie, LogWordExamples) {
  auto L = make_free_lie(2, 4);
  const Word x = Word::generator(0), y = Word::generator(1);
  EXPECT_EQ(L->log_word(x), L->generator(0));
  EXPECT_TRUE(is_zero(L->log_word(Word{})));
  Vector c = L->log_word(commutator(x, y));
  EXPECT_EQ(L->lowest_degree(c), 2u);
  EXPECT_EQ(L->homogeneous_part(c, 2), L->bracket(L->generator(0), L->generator(1)));
}

namespace {

Vector random_element(std::mt19937_64& gen, const FreeLieAlgebra& L) {
  Vector v = L.zero();
  for (int k = 0; k < 3; ++k) v[gen() % L.dim()] += Rational(static_cast<long>(gen() % 5) - 2, 1 + gen() % 2);
  return v;
}

}  // namespace

TEST(FreeLie, PropertyBchAssociative) {
  std::mt19937_64 gen(31);
  for (std::size_t rank : {2u, 3u}) {
    auto L = make_free_lie(rank, 4);
    for (int t = 0; t < 50; ++t) {
      Vector a = random_element(gen, *L), b = random_element(gen, *L), c = random_element(gen, *L);
      EXPECT_EQ(L->bch(L->bch(a, b), c), L->bch(a, L->bch(b, c)));
    }
  }
}

TEST(FreeLie, PropertyLogWordIsHomomorphism) {
  std::mt19937_64 gen(32);
  auto L = make_free_lie(2, 5);
  for (int t = 0; t < 30; ++t) {
    Word u = test_support::random_word(gen, 2, gen() % 7), v = test_support::random_word(gen, 2, gen() % 7);
    EXPECT_EQ(L->log_word(u * v), L->bch(L->log_word(u), L->log_word(v)));
  }
}

TEST(FreeLie, PropertyJacobiAndAntisymmetry) {
  std::mt19937_64 gen(33);
  auto L = make_free_lie(3, 5);
  for (int t = 0; t < 30; ++t) {
    Vector a = random_element(gen, *L), b = random_element(gen, *L), c = random_element(gen, *L);
    Vector ab = L->bracket(a, b), ba = L->bracket(b, a);
    for (std::size_t i = 0; i < ab.size(); ++i) EXPECT_EQ(ab[i], -ba[i]);
    Vector j = L->bracket(a, L->bracket(b, c));
    Vector j2 = L->bracket(b, L->bracket(c, a)), j3 = L->bracket(c, L->bracket(a, b));
    for (std::size_t i = 0; i < j.size(); ++i) EXPECT_EQ(j[i] + j2[i] + j3[i], 0);
  }
}

TEST(FreeLie, WeightedGenerators) {
  auto L = make_free_lie(std::vector<unsigned>{1, 1, 2}, 4);
  EXPECT_EQ(L->degree(L->basis().generator_index(2)), 2u);
  auto sizes = L->basis().degree_sizes();
  EXPECT_EQ(sizes[1], 2u);
  EXPECT_EQ(sizes[2], 2u);  // [x,y] and the weight-2 letter
}

TEST(FreeLie, CutoffCap) { EXPECT_THROW(make_free_lie(2, 11), InputError); }

TEST(GradedElements, Operations) {
  auto L = make_free_lie(2, 3, {"x", "y"});
  auto x = GradedLieElement::generator(L, 0), y = GradedLieElement::generator(L, 1);
  auto z = bracket(x, y);
  EXPECT_EQ(z.component(2).size(), 1u);
  EXPECT_EQ(z.format(), "[x,y]");
  EXPECT_TRUE((z - z).is_zero());
  EXPECT_EQ(bch_multiply(x, -x), GradedLieElement::zero(L));
  EXPECT_EQ(log_word(Word::generator(1), L), y);
}
