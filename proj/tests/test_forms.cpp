#include <gtest/gtest.h>

#include "superdop/errors.hpp"
#include "support.hpp"

using namespace support;

namespace {

const Chart c02 = chart(0, 2);

SuperOneForm form(const Chart& c, std::vector<std::pair<std::string, Superfunction>> terms) {
  std::vector<Superfunction> comps(c.dimension(), Superfunction(c));
  for (auto& [name, f] : terms) comps[idx(c, name)] += f;
  return SuperOneForm(c, std::move(comps));
}

TEST(DeRham, Examples) {
  const Chart c = chart(1, 2);
  const auto x = coord(c, "x");
  EXPECT_EQ(de_rham(x), SuperOneForm::basis(c, 0));
  EXPECT_EQ(pair(de_rham(x), SuperVectorField::partial(c, 0)), Superfunction(c, 1));

  const auto xi1 = coord(c02, "xi1");
  const auto xi2 = coord(c02, "xi2");
  const auto d = de_rham(xi1 * xi2);
  EXPECT_EQ(pair(d, SuperVectorField::partial(c02, 0)), xi2);
  EXPECT_EQ(pair(d, SuperVectorField::partial(c02, 1)), -xi1);
  EXPECT_TRUE(de_rham(Superfunction(c02, 1)).is_zero());
}

TEST(DeRham, PairingIdentityForEvenFunctions) {
  for (const auto& c : property_charts()) {
    RandomSource rng(41);
    for (int t = 0; t < 200; ++t) {
      const auto f = rng.function(c, Parity::Even);
      const auto x = rng.field(c);
      ASSERT_EQ(pair(de_rham(f), x), x(f)) << format(f) << " / " << format(x);
    }
  }
}

TEST(DeRham, PairingIdentityBreaksForOddFunctions) {
  // X -> X(f) is right-linear only up to (-1)^{|f||h|}; with f = xi1 and
  // X = d_xi1 . xi2 the two sides differ by a sign.
  const auto xi1 = coord(c02, "xi1");
  const auto xi2 = coord(c02, "xi2");
  const auto x = right_mul(SuperVectorField::partial(c02, 0), xi2);
  EXPECT_EQ(pair(de_rham(xi1), x), -x(xi1));
}

TEST(DeRham, LinearAndClosed) {
  for (const auto& c : property_charts()) {
    RandomSource rng(42);
    for (int t = 0; t < 50; ++t) {
      const auto f = rng.function(c);
      const auto g = rng.function(c);
      ASSERT_EQ(de_rham(f + Rational(3) * g), de_rham(f) + Rational(3) * de_rham(g));
      ASSERT_TRUE(is_closed(de_rham(f.part(Parity::Even))));
    }
  }
}

TEST(Pair, Examples) {
  const Chart c = chart(1, 1);
  EXPECT_EQ(pair(SuperOneForm::basis(c, 0), SuperVectorField::partial(c, 0)), Superfunction(c, 1));
  const auto xi = coord(c, "xi1");
  EXPECT_EQ(pair(form(c, {{"xi1", xi}}), SuperVectorField::partial(c, 1)), xi);
}

TEST(Pair, RightLinear) {
  for (const auto& c : property_charts()) {
    RandomSource rng(43);
    for (int t = 0; t < 100; ++t) {
      const auto omega = rng.closed_even_form(c) + de_rham(rng.function(c, Parity::Even));
      const auto x = rng.field(c, rng.parity());
      const auto f = rng.function(c, rng.parity());
      ASSERT_EQ(pair(omega, right_mul(x, f)), pair(omega, x) * f);
    }
  }
}

TEST(Closed, Examples) {
  const Chart c = chart(2, 1);
  const auto x2 = coord(c, "x2");
  EXPECT_FALSE(is_closed(form(c, {{"x1", x2}})));
  EXPECT_TRUE(is_closed(SuperOneForm(c)));
  // the odd diagonal condition 2 d_i omega_i = 0
  const auto xi = coord(c, "xi1");
  EXPECT_FALSE(is_closed(form(c, {{"xi1", xi}})));
}

TEST(Primitive, Examples) {
  const Chart c = chart(1, 0);
  const auto x = coord(c, "x");
  EXPECT_EQ(poincare_primitive(form(c, {{"x", Rational(2) * x}})), x * x);
  const auto xi1 = coord(c02, "xi1");
  const auto xi2 = coord(c02, "xi2");
  EXPECT_EQ(poincare_primitive(de_rham(xi1 * xi2)), xi1 * xi2);
  EXPECT_TRUE(poincare_primitive(SuperOneForm(c02)).is_zero());
}

TEST(Primitive, RoundTripOnClosedForms) {
  for (const auto& c : property_charts()) {
    RandomSource rng(44);
    for (int t = 0; t < 100; ++t) {
      const auto omega = rng.closed_even_form(c);
      const auto f = poincare_primitive(omega);
      ASSERT_EQ(de_rham(f), omega);
      ASSERT_EQ(f.constant_term(), 0);
      ASSERT_EQ(f.parity(), Parity::Even);
    }
  }
}

TEST(Primitive, Errors) {
  const Chart c = chart(2, 1);
  EXPECT_THROW(poincare_primitive(form(c, {{"x1", coord(c, "x2")}})), DomainError);
  EXPECT_THROW(poincare_primitive(form(c, {{"x1", coord(c, "xi1")}})), DomainError);
}

TEST(Forms, ParityQueries) {
  const Chart c = chart(1, 1);
  EXPECT_TRUE(form(c, {{"xi1", coord(c, "xi1")}}).is_even());
  EXPECT_FALSE(form(c, {{"x", coord(c, "xi1")}}).is_even());
  EXPECT_EQ(form(c, {{"x", coord(c, "xi1")}}).parity(), Parity::Odd);
}

}  // namespace
