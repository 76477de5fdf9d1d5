#include "superdop/automorphism.hpp"

#include "superdop/errors.hpp"
#include "superdop/format.hpp"
#include "superdop/random.hpp"

namespace superdop {

D1Automorphism::D1Automorphism(ChartMorphism phi, Rational kappa, Rational a, SuperOneForm omega)
    : D1Automorphism(std::move(phi), std::move(kappa), std::move(a), std::move(omega), true) {}

D1Automorphism D1Automorphism::unchecked(ChartMorphism phi, Rational kappa, Rational a, SuperOneForm omega) {
  return D1Automorphism(std::move(phi), std::move(kappa), std::move(a), std::move(omega), false);
}

D1Automorphism::D1Automorphism(ChartMorphism phi, Rational kappa, Rational a, SuperOneForm omega, bool check)
    : phi_(std::move(phi)), kappa_(std::move(kappa)), a_(std::move(a)), omega_(std::move(omega)) {
  require_same_chart(phi_.source(), phi_.target(), "D1 automorphism");
  require_same_chart(phi_.source(), omega_.chart(), "D1 automorphism");
  if (!check) return;
  if (kappa_ == 0) throw DomainError("D1 automorphism: kappa must be nonzero");
  if (!omega_.is_even()) throw ParityError("D1 automorphism: omega must be even");
  if (!is_closed(omega_)) throw DomainError("D1 automorphism: omega is not closed");
}

D1Element D1Automorphism::operator()(const D1Element& e) const {
  require_same_chart(e.chart(), chart(), "D1 automorphism");
  Superfunction s = kappa_ * e.scalar + a_ * candiv(e.field) + pair(omega_, e.field);
  return D1Element(phi_.pullback(s), pushforward_field(phi_, e.field));
}

D1Automorphism D1Automorphism::inverse() const {
  if (kappa_ == 0) throw DomainError("D1 automorphism: kappa = 0 has no inverse");
  const ChartMorphism psi = phi_.inverse();
  const Rational k = Rational(1) / kappa_;
  const auto gamma = GeneralizedDivergence::unchecked(a_, omega_);
  const FieldFunctional shifted = [&](const SuperVectorField& y) {
    return -k * phi_.pullback(apply_gd(gamma, pushforward_field(psi, y)));
  };
  const auto classified = classify_cocycle(chart(), shifted);
  return D1Automorphism(psi, k, classified.a(), classified.omega());
}

D1Element d1_auto_apply(const D1Automorphism& phi, const D1Element& e) { return phi(e); }

std::optional<std::string> bracket_witness(const D1Map& map, const D1Element& a, const D1Element& b) {
  const D1Element lhs = map(bracket(a, b));
  const D1Element rhs = bracket(map(a), map(b));
  if (lhs == rhs) return std::nullopt;
  return "[" + format(a) + ", " + format(b) + "]: image of bracket " + format(lhs) + " but bracket of images " +
         format(rhs);
}

std::optional<std::string> bracket_witness(const FieldMap& map, const SuperVectorField& x, const SuperVectorField& y) {
  const SuperVectorField lhs = map(bracket(x, y));
  const SuperVectorField rhs = bracket(map(x), map(y));
  if (lhs == rhs) return std::nullopt;
  return "[" + format(x) + ", " + format(y) + "]: image of bracket " + format(lhs) + " but bracket of images " +
         format(rhs);
}

std::vector<D1Element> d1_probes(const Chart& chart) {
  std::vector<D1Element> out;
  const SuperVectorField zero(chart);
  out.emplace_back(Superfunction(chart, 1), zero);
  for (std::size_t j = 0; j < chart.dimension(); ++j) out.emplace_back(Superfunction::coordinate(chart, j), zero);
  for (const auto& x : field_basis(chart, 1)) out.emplace_back(Superfunction(chart), x);
  return out;
}

std::vector<SuperVectorField> field_basis(const Chart& chart, unsigned max_degree) {
  std::vector<SuperVectorField> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    for (const auto& m : multi_indices_of_degree(chart, d)) {
      for (std::size_t k = 0; k < chart.dimension(); ++k) {
        std::vector<Superfunction> c(chart.dimension(), Superfunction(chart));
        c[k] = Superfunction::monomial(chart, m);
        out.emplace_back(chart, std::move(c));
      }
    }
  }
  return out;
}

AutomorphismReport verify_d1_automorphism(const D1Automorphism& phi, unsigned trials, std::uint64_t seed) {
  AutomorphismReport report;
  const Chart& chart = phi.chart();
  const D1Map map = [&](const D1Element& e) { return phi(e); };
  auto fail = [&](std::string why) {
    report.passed = false;
    report.witness = std::move(why);
    return report;
  };

  const auto probes = d1_probes(chart);
  for (const auto& e : probes) {
    const auto image = phi(e);
    if (!image.is_zero() && image.parity() != e.parity()) return fail("parity not preserved on " + format(e));
  }
  for (const auto& a : probes) {
    for (const auto& b : probes) {
      ++report.pairs_checked;
      if (auto w = bracket_witness(map, a, b)) return fail(*w);
    }
  }
  RandomSource rng(seed, RandomShape{3, 2, 3});
  for (unsigned t = 0; t < trials; ++t) {
    const auto a = rng.d1(chart, rng.parity());
    const auto b = rng.d1(chart, rng.parity());
    ++report.pairs_checked;
    if (auto w = bracket_witness(map, a, b)) return fail(*w);
  }

  if (phi.kappa() == 0) return fail("kappa = 0: the image of 1 is 0, so the map is not injective");
  std::optional<D1Automorphism> inv;
  try {
    inv = phi.inverse();
  } catch (const Error& e) {
    return fail(std::string("no inverse: ") + e.what());
  }
  for (const auto& e : probes) {
    if ((*inv)(phi(e)) != e || phi((*inv)(e)) != e) return fail("inverse does not undo " + format(e));
  }
  return report;
}

D1Element exceptional_0_1(const D1Element& e) {
  const Chart& chart = e.chart();
  if (chart.even_count() != 0 || chart.odd_count() != 1) throw ChartMismatch("exceptional map needs chart 0|1");
  const MultiIndex one(0);
  const MultiIndex xi({}, 1);
  // e = c0 + c1 xi + c2 d_xi + c3 xi d_xi
  const Rational c0 = e.scalar.coefficient(one);
  const Rational c1 = e.scalar.coefficient(xi);
  const Rational c2 = e.field.coefficient(0).coefficient(one);
  const Rational c3 = e.field.coefficient(0).coefficient(xi);
  Superfunction scalar(chart, c0);
  scalar.add(xi, c2);
  Superfunction coefficient(chart, c1);
  coefficient.add(xi, -c3);
  return D1Element(scalar, SuperVectorField(chart, {coefficient}));
}

SuperVectorField exceptional_1_1(const SuperVectorField& x) {
  const Chart& chart = x.chart();
  if (chart.even_count() != 1 || chart.odd_count() != 1) throw ChartMismatch("exceptional map needs chart 1|1");
  const Superfunction xi = Superfunction::coordinate(chart, 1);
  // Split each coefficient into xi-free and xi-linear parts: c = c0 + xi c1.
  auto split = [&](const Superfunction& c) {
    Superfunction c0 = c.body();
    Superfunction c1(chart);
    for (const auto& [index, r] : c.terms()) {
      if (index.odd != 0) c1.add(MultiIndex(index.powers, 0), r);
    }
    return std::pair{c0, c1};
  };
  const auto [h, b] = split(x.coefficient(0));  // h d_t + b xi d_t
  const auto [c, f] = split(x.coefficient(1));  // c d_xi + f xi d_xi
  Superfunction dt = h + xi * c;
  Superfunction dxi = b + xi * (partial(h, 0) - f);
  return SuperVectorField(chart, {dt, dxi});
}

SuperVectorField exceptional_0_2(const SuperVectorField& x) {
  const Chart& chart = x.chart();
  if (chart.even_count() != 0 || chart.odd_count() != 2) throw ChartMismatch("exceptional map needs chart 0|2");
  const MultiIndex one(0);
  const MultiIndex x1({}, 1);
  const MultiIndex x2({}, 2);
  const MultiIndex x12({}, 3);
  const auto& f1 = x.coefficient(0);
  const auto& f2 = x.coefficient(1);
  // E_ab = xi^a d_b. E12, E21 fixed; E11 -> -E22, E22 -> -E11;
  // d_c <-> xi1 xi2 d_c.
  Superfunction g1(chart);
  Superfunction g2(chart);
  g1.add(x12, f1.coefficient(one));
  g2.add(x12, f2.coefficient(one));
  g1.add(one, f1.coefficient(x12));
  g2.add(one, f2.coefficient(x12));
  g1.add(x1, -f2.coefficient(x2));
  g2.add(x2, -f1.coefficient(x1));
  g2.add(x1, f2.coefficient(x1));
  g1.add(x2, f1.coefficient(x2));
  return SuperVectorField(chart, {g1, g2});
}

}  // namespace superdop
