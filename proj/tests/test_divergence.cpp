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

/// exp(g) for nilpotent even g.
Superfunction exp_nilpotent(const Superfunction& g) {
  Superfunction sum(g.chart(), 1);
  Superfunction term(g.chart(), 1);
  for (int n = 1; n <= 40; ++n) {
    term = term * g * (Rational(1) / n);
    if (term.is_zero()) return sum;
    sum += term;
  }
  ADD_FAILURE() << "exponent series did not terminate";
  return sum;
}

TEST(Candiv, Examples) {
  const Chart c = chart(1, 1);
  EXPECT_EQ(candiv(field(c, {{coord(c, "x"), "x"}})), Superfunction(c, 1));
  EXPECT_EQ(candiv(euler_field(c02)), Superfunction(c02, -2));
  EXPECT_TRUE(candiv(SuperVectorField::partial(c02, 0)).is_zero());
}

TEST(ApplyGd, Examples) {
  const Chart c = chart(1, 1);
  RandomSource rng(51);
  const auto x = rng.field(c);
  EXPECT_EQ(apply_gd(GeneralizedDivergence::canonical(c), x), candiv(x));
  const auto f = coord(c, "xi1") * coord(c, "x");
  EXPECT_EQ(apply_gd(GeneralizedDivergence(0, SuperOneForm::basis(c, 0)), field(c, {{f, "x"}})), f);
  // dxi1 . xi1 fails the odd diagonal closedness condition, so only the
  // unchecked form can carry it; the formula still evaluates.
  const auto xi = coord(c, "xi1");
  const auto gamma = GeneralizedDivergence::unchecked(2, form(c, {{"xi1", xi}}));
  EXPECT_EQ(apply_gd(gamma, SuperVectorField::partial(c, 1)), xi);
  EXPECT_THROW(GeneralizedDivergence(2, form(c, {{"xi1", xi}})), DomainError);
}

TEST(ApplyGd, PreservesParity) {
  RandomSource rng(52);
  const Chart c = chart(2, 2);
  const GeneralizedDivergence gamma(Rational(5, 2), rng.closed_even_form(c));
  for (int t = 0; t < 50; ++t) {
    const Parity p = rng.parity();
    const auto value = apply_gd(gamma, rng.field(c, p));
    if (!value.is_zero()) {
      ASSERT_EQ(value.parity(), p);
    }
  }
}

TEST(Construction, RejectsBadForms) {
  const Chart c = chart(2, 1);
  EXPECT_THROW(GeneralizedDivergence(1, form(c, {{"x1", coord(c, "x2")}})), DomainError);
  EXPECT_THROW(GeneralizedDivergence(1, form(c, {{"x1", coord(c, "xi1")}})), ParityError);
}

TEST(Cocycle, Examples) {
  const Chart c = chart(1, 1);
  const auto canonical = GeneralizedDivergence::canonical(c);
  EXPECT_TRUE(verify_cocycle(canonical, field(c, {{coord(c, "x"), "x"}}), SuperVectorField::partial(c, 0)));
  RandomSource rng(53);
  const Chart c22 = chart(2, 2);
  const GeneralizedDivergence exact(0, de_rham(rng.function(c22, Parity::Even)));
  for (int t = 0; t < 20; ++t) {
    EXPECT_TRUE(verify_cocycle(exact, rng.field(c22, rng.parity()), rng.field(c22, rng.parity())));
  }
}

TEST(Cocycle, HoldsForConstructedDivergences) {
  for (const auto& c : property_charts()) {
    RandomSource rng(54);
    for (int g = 0; g < 4; ++g) {
      const GeneralizedDivergence gamma(rng.integer(-3, 3), rng.closed_even_form(c));
      for (int t = 0; t < 50; ++t) {
        const auto x = rng.field(c, rng.parity());
        const auto y = rng.field(c, rng.parity());
        ASSERT_TRUE(verify_cocycle(gamma, x, y)) << format(gamma) << " " << format(x) << " " << format(y);
        ASSERT_TRUE(verify_gdiv_law(gamma, x, rng.function(c, rng.parity())));
      }
    }
  }
}

TEST(Cocycle, NonClosedFormIsFalsified) {
  const Chart c = chart(2, 0);
  const auto bad = GeneralizedDivergence::unchecked(0, form(c, {{"x1", coord(c, "x2")}}));
  std::optional<std::pair<SuperVectorField, SuperVectorField>> witness;
  const auto basis = field_basis(c, 1);
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      if (!witness && !verify_cocycle(bad, x, y)) witness.emplace(x, y);
    }
  }
  ASSERT_TRUE(witness.has_value());
  EXPECT_FALSE(verify_cocycle(bad, witness->first, witness->second));
}

TEST(GdivLaw, Examples) {
  const Chart c = chart(1, 1);
  const auto canonical = GeneralizedDivergence::canonical(c);
  EXPECT_TRUE(verify_gdiv_law(canonical, SuperVectorField::partial(c, 0), coord(c, "x")));
  RandomSource rng(55);
  const GeneralizedDivergence pure(0, rng.closed_even_form(c));
  for (int t = 0; t < 20; ++t) {
    EXPECT_TRUE(verify_gdiv_law(pure, rng.field(c, rng.parity()), rng.function(c, rng.parity())));
  }
  EXPECT_TRUE(verify_gdiv_law(canonical, rng.field(c, Parity::Odd), Superfunction(c, 1)));
}

TEST(Classify, Examples) {
  const Chart c = chart(1, 1);
  EXPECT_EQ(classify_cocycle(c, [](const SuperVectorField& x) { return candiv(x); }),
            GeneralizedDivergence::canonical(c));

  const auto xi = coord(c, "xi1");
  const auto not_closed = GeneralizedDivergence::unchecked(3, form(c, {{"xi1", xi}}));
  EXPECT_THROW(classify_cocycle(c, [&](const SuperVectorField& x) { return apply_gd(not_closed, x); }), DomainError);
  const GeneralizedDivergence three(3, de_rham(coord(c02, "xi1") * coord(c02, "xi2")));
  EXPECT_EQ(classify_cocycle(c02, [&](const SuperVectorField& x) { return apply_gd(three, x); }), three);

  const Chart c22 = chart(2, 2);
  RandomSource rng(56);
  const auto f0 = rng.function(c22, Parity::Even);
  const auto classified = classify_cocycle(c22, [&](const SuperVectorField& x) { return x(f0); });
  EXPECT_EQ(classified.a(), 0);
  EXPECT_EQ(classified.omega(), de_rham(f0));
  EXPECT_EQ(poincare_primitive(classified.omega()), f0 - Superfunction(c22, f0.constant_term()));
}

TEST(Classify, RoundTripsRandomDivergences) {
  for (const auto& c : property_charts()) {
    RandomSource rng(57);
    for (int t = 0; t < 20; ++t) {
      const GeneralizedDivergence gamma(rng.integer(-3, 3), rng.closed_even_form(c));
      ASSERT_EQ(classify_cocycle(c, [&](const SuperVectorField& x) { return apply_gd(gamma, x); }), gamma);
    }
  }
}

TEST(Classify, RejectsInconsistentProbes) {
  const Chart c = chart(2, 0);
  // a depends on the coordinate
  const FieldFunctional lopsided = [](const SuperVectorField& x) {
    return partial(x.coefficient(0), 0) + Rational(2) * partial(x.coefficient(1), 1);
  };
  EXPECT_THROW(classify_cocycle(c, lopsided), DomainError);
  // a is not constant
  const FieldFunctional scaled = [&](const SuperVectorField& x) { return coord(c, "x1") * candiv(x); };
  EXPECT_THROW(classify_cocycle(c, scaled), DomainError);
}

TEST(Coboundary, Examples) {
  const Chart c = chart(1, 2);
  const auto f = coord(c, "x") * coord(c, "xi1") * coord(c, "xi2");
  const auto recovered = is_coboundary(GeneralizedDivergence(0, de_rham(f)));
  ASSERT_TRUE(recovered.has_value());
  EXPECT_EQ(*recovered, f);
  EXPECT_FALSE(is_coboundary(GeneralizedDivergence::canonical(c)).has_value());
  const auto zero = is_coboundary(GeneralizedDivergence(0, SuperOneForm(c)));
  ASSERT_TRUE(zero.has_value());
  EXPECT_TRUE(zero->is_zero());
}

TEST(Berezinian, CoordinateVolumeGivesCandiv) {
  for (const auto& c : property_charts()) {
    RandomSource rng(58);
    const auto unit = BerezinianSection::coordinate_volume(c);
    const BerezinianSection two(Superfunction(c, 2));
    const BerezinianSection minus(Superfunction(c, -1));
    for (int t = 0; t < 100; ++t) {
      const auto x = rng.field(c, rng.parity());
      ASSERT_EQ(div_from_berezinian(unit, x), candiv(x));
      ASSERT_EQ(div_from_berezinian(two, x), candiv(x));
      ASSERT_EQ(div_from_berezinian(minus, x), candiv(x));
    }
  }
  const Chart c10 = chart(1, 0);
  EXPECT_EQ(div_from_berezinian(BerezinianSection::coordinate_volume(c10), field(c10, {{coord(c10, "x"), "x"}})),
            Superfunction(c10, 1));
}

TEST(Berezinian, SignInsensitive) {
  const Chart c = chart(2, 2);
  RandomSource rng(59);
  for (int t = 0; t < 30; ++t) {
    const auto n = rng.function(c, Parity::Even) * coord(c, "xi1") * coord(c, "xi2");
    const BerezinianSection s(Superfunction(c, rng.integer(1, 3)) + n);
    const BerezinianSection neg(-s.rho());
    const auto x = rng.field(c, rng.parity());
    ASSERT_EQ(div_from_berezinian(s, x), div_from_berezinian(neg, x));
  }
}

TEST(Berezinian, PureOddOperatorReading) {
  // With no even coordinates the section is the operator T o m_rho, T the
  // full odd word, and -s o X = s . gamma_s(X) holds as an operator identity.
  for (const auto& c : {chart(0, 2), chart(0, 3)}) {
    RandomSource rng(60);
    const SuperDiffOp top = SuperDiffOp::word(Superfunction(c, 1), MultiIndex({}, (OddMask{1} << c.odd_count()) - 1));
    for (int t = 0; t < 40; ++t) {
      const Superfunction rho = Superfunction(c, rng.integer(1, 3)) + rng.function(c, Parity::Even) * coord(c, "xi1") * coord(c, "xi2");
      const BerezinianSection s(rho);
      const auto x = rng.field(c, rng.parity());
      const auto s_op = compose(top, SuperDiffOp::multiplication(rho));
      const auto lhs = -compose(s_op, x.to_operator());
      const auto rhs = compose(s_op, SuperDiffOp::multiplication(div_from_berezinian(s, x)));
      ASSERT_EQ(lhs, rhs) << format(rho) << " / " << format(x);
    }
  }
}

TEST(Berezinian, ExponentialRescaling) {
  const Chart c = chart(1, 2);
  RandomSource rng(61);
  for (int t = 0; t < 30; ++t) {
    const auto g = rng.function(c, Parity::Even) * coord(c, "xi1") * coord(c, "xi2");
    const BerezinianSection s(exp_nilpotent(g));
    const auto shifted = rescale_divergence(GeneralizedDivergence::canonical(c), g);
    EXPECT_EQ(shifted.omega(), de_rham(g));
    const auto x = rng.field(c, rng.parity());
    ASSERT_EQ(div_from_berezinian(s, x), apply_gd(shifted, x));
  }
}

TEST(Berezinian, RejectsNonVolumes) {
  const Chart c = chart(1, 1);
  EXPECT_THROW(div_from_berezinian(BerezinianSection(coord(c, "x")), SuperVectorField::partial(c, 0)), DomainError);
  EXPECT_THROW(div_from_berezinian(BerezinianSection(coord(c, "xi1")), SuperVectorField::partial(c, 0)), DomainError);
  EXPECT_FALSE(BerezinianSection(Superfunction(c)).is_volume());
  EXPECT_TRUE(BerezinianSection(Superfunction(c, 3)).is_volume());
}

TEST(Rescale, Examples) {
  const Chart c = chart(2, 1);
  const auto canonical = GeneralizedDivergence::canonical(c);
  EXPECT_EQ(rescale_divergence(canonical, Superfunction(c)), canonical);
  EXPECT_EQ(rescale_divergence(canonical, coord(c, "x1")), GeneralizedDivergence(1, SuperOneForm::basis(c, 0)));
  RandomSource rng(62);
  const auto g = rng.function(c, Parity::Even);
  EXPECT_EQ(rescale_divergence(rescale_divergence(canonical, g), -g), canonical);
  EXPECT_THROW(rescale_divergence(GeneralizedDivergence(2, SuperOneForm(c)), g), DomainError);
  EXPECT_THROW(rescale_divergence(canonical, coord(c, "xi1")), ParityError);
}

TEST(Transform, Examples) {
  const Chart c = chart(1, 1);
  const auto x = coord(c, "x");
  const auto xi = coord(c, "xi1");
  RandomSource rng(63);
  const BerezinianSection s(Superfunction(c, 5) + rng.function(c, Parity::Even));
  EXPECT_EQ(berezinian_transform(s, ChartMorphism::identity(c)), s);

  const BerezinianSection unit(Superfunction(c, 1));
  const ChartMorphism stretch(c, c, {Rational(2) * x, xi}, {Rational(1, 2) * x, xi});
  EXPECT_EQ(berezinian_transform(unit, stretch).rho(), Superfunction(c, 2));
  const ChartMorphism odd_scale(c, c, {x, Rational(3) * xi}, {x, Rational(1, 3) * xi});
  EXPECT_EQ(berezinian_transform(unit, odd_scale).rho(), Superfunction(c, Rational(1, 3)));
}

TEST(Transform, ChainRule) {
  const Chart c = chart(2, 2);
  const auto x1 = coord(c, "x1");
  const auto x2 = coord(c, "x2");
  const auto xi1 = coord(c, "xi1");
  const auto xi2 = coord(c, "xi2");
  const ChartMorphism shear(c, c, {x1 + x2 * x2, x2, xi1 + x2 * xi2, xi2}, {x1 - x2 * x2, x2, xi1 - x2 * xi2, xi2});
  const ChartMorphism swap(c, c, {x2, Rational(2) * x1, Rational(-1) * xi2, xi1},
                           {Rational(1, 2) * x2, x1, xi2, Rational(-1) * xi1});
  RandomSource rng(64);
  for (int t = 0; t < 10; ++t) {
    const BerezinianSection s(Superfunction(c, 1) + rng.function(c, Parity::Even));
    EXPECT_EQ(berezinian_transform(berezinian_transform(s, swap), shear), berezinian_transform(s, compose(shear, swap)));
  }
}

TEST(Transform, Errors) {
  const Chart c = chart(1, 2);
  const auto x = coord(c, "x");
  const auto xi1 = coord(c, "xi1");
  const auto xi2 = coord(c, "xi2");
  const ChartMorphism mixed(c, c, {x + xi1 * xi2, xi1, xi2}, {x - xi1 * xi2, xi1, xi2});
  EXPECT_FALSE(mixed.is_bundle_type());
  EXPECT_THROW(berezinian_transform(BerezinianSection(Superfunction(c, 1)), mixed), DomainError);
  const Chart other = chart(1, 1);
  EXPECT_THROW(berezinian_transform(BerezinianSection(Superfunction(other, 1)), mixed), ChartMismatch);
}

}  // namespace
