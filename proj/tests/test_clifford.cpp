#include <gtest/gtest.h>

#include "oracle.hpp"
#include "superdop/errors.hpp"
#include "support.hpp"

using namespace support;

namespace {

FockMatrix matrix(unsigned q, std::vector<std::vector<int>> rows) {
  FockMatrix m(q);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

SuperDiffOp mul_xi(const Chart& c, unsigned a) {
  return SuperDiffOp::multiplication(Superfunction::coordinate(c, c.odd_coordinate(a)));
}
SuperDiffOp d_xi(const Chart& c, unsigned a) { return SuperDiffOp::partial(c, c.odd_coordinate(a)); }

TEST(FockBasis, SizeThenLexicographic) {
  const auto b = fock_basis(3);
  const std::vector<OddMask> expected{0, 1, 2, 4, 3, 5, 6, 7};
  EXPECT_EQ(b, expected);
}

TEST(Rep, Q1Matrices) {
  const Chart c = chart(0, 1);
  EXPECT_EQ(rep(mul_xi(c, 0)), matrix(1, {{0, 0}, {1, 0}}));
  EXPECT_EQ(rep(d_xi(c, 0)), matrix(1, {{0, 1}, {0, 0}}));
  EXPECT_EQ(rep(SuperDiffOp::identity(c)), FockMatrix::identity(1));
}

TEST(Rep, GeneratorsMatchWedgeAndContraction) {
  for (unsigned q = 1; q <= 3; ++q) {
    const Chart c = chart(0, q);
    for (unsigned i = 0; i < q; ++i) {
      EXPECT_EQ(rep(mul_xi(c, i)), oracle::wedge(q, i));
      EXPECT_EQ(rep(d_xi(c, i)), oracle::contraction(q, i));
    }
  }
}

TEST(Rep, CliffordRelations) {
  for (unsigned q = 1; q <= 3; ++q) {
    const Chart c = chart(0, q);
    for (unsigned i = 0; i < q; ++i) {
      for (unsigned j = 0; j < q; ++j) {
        const auto a = rep(mul_xi(c, i));
        const auto b = rep(d_xi(c, j));
        const FockMatrix expected = i == j ? FockMatrix::identity(q) : FockMatrix(q);
        EXPECT_EQ(a * b + b * a, expected);
        EXPECT_EQ(scommutator(a, b), expected);
      }
    }
  }
}

TEST(Rep, AlgebraHomomorphism) {
  for (unsigned q = 1; q <= 3; ++q) {
    const Chart c = chart(0, q);
    RandomSource rng(81, RandomShape{3, 2, 3});
    for (int t = 0; t < 30; ++t) {
      const auto e1 = rng.expr(c, 3);
      const auto e2 = rng.expr(c, 3);
      const auto d = normal_form(OperatorExpr::compose(e1, e2));
      ASSERT_EQ(rep(d), rep(normal_form(e1)) * rep(normal_form(e2)));
      const auto a = rng.op(c, 2, rng.parity());
      const auto b = rng.op(c, 2, rng.parity());
      ASSERT_EQ(rep(scommutator(a, b)), scommutator(rep(a), rep(b)));
    }
  }
}

TEST(Span, FullEndomorphismAlgebra) {
  EXPECT_TRUE(spans_full_endomorphisms(1));
  EXPECT_TRUE(spans_full_endomorphisms(2));
  EXPECT_TRUE(spans_full_endomorphisms(3));
  EXPECT_EQ(endomorphism_rank(2), 16U);
  EXPECT_THROW(spans_full_endomorphisms(0), DomainError);
  EXPECT_THROW(fock_basis(11), IndexError);
}

TEST(Rep, RejectsEvenCoordinates) { EXPECT_THROW(rep(SuperDiffOp::identity(chart(1, 1))), DomainError); }

TEST(Swap, BreaksFiltration) {
  const Chart c = chart(0, 2);
  EXPECT_EQ(swap_automorphism(mul_xi(c, 0)), d_xi(c, 0));
  EXPECT_EQ(mul_xi(c, 0).order(), 0);
  EXPECT_EQ(swap_automorphism(mul_xi(c, 0)).order(), 1);
  EXPECT_EQ(swap_automorphism(d_xi(c, 1)), mul_xi(c, 1));
}

TEST(Swap, InvolutionAndBracketPreserving) {
  for (unsigned q = 1; q <= 3; ++q) {
    const Chart c = chart(0, q);
    RandomSource rng(82, RandomShape{3, 2, 3});
    for (int t = 0; t < 40; ++t) {
      const auto a = rng.op(c, rng.integer(0, 2), rng.parity());
      const auto b = rng.op(c, rng.integer(0, 2), rng.parity());
      ASSERT_EQ(swap_automorphism(swap_automorphism(a)), a);
      ASSERT_EQ(rep(swap_automorphism(scommutator(a, b))),
                scommutator(rep(swap_automorphism(a)), rep(swap_automorphism(b))));
      ASSERT_EQ(swap_automorphism(compose(a, b)), compose(swap_automorphism(a), swap_automorphism(b)));
    }
  }
  EXPECT_THROW(swap_automorphism(SuperDiffOp::identity(chart(1, 1))), DomainError);
}

TEST(FockMatrixType, Parity) {
  const Chart c = chart(0, 2);
  EXPECT_EQ(rep(mul_xi(c, 0)).parity(), Parity::Odd);
  EXPECT_EQ(rep(compose(mul_xi(c, 0), d_xi(c, 1))).parity(), Parity::Even);
  EXPECT_FALSE((rep(mul_xi(c, 0)) + FockMatrix::identity(2)).parity().has_value());
}

}  // namespace
