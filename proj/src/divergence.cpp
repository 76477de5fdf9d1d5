#include "superdop/divergence.hpp"

#include "superdop/errors.hpp"
#include "superdop/random.hpp"

namespace superdop {

bool BerezinianSection::is_volume() const {
  return rho_.parity() == Parity::Even && !rho_.is_zero() && inverse(rho_).has_value();
}

GeneralizedDivergence::GeneralizedDivergence(Rational a, SuperOneForm omega) : a_(std::move(a)), omega_(std::move(omega)) {
  if (!omega_.is_even()) throw ParityError("generalized divergence: omega must be even");
  if (!is_closed(omega_)) throw DomainError("generalized divergence: omega is not closed");
}

GeneralizedDivergence GeneralizedDivergence::unchecked(Rational a, SuperOneForm omega) {
  return GeneralizedDivergence(std::move(a), std::move(omega), Unchecked{});
}

Superfunction GeneralizedDivergence::operator()(const SuperVectorField& x) const { return apply_gd(*this, x); }

Superfunction candiv(const SuperVectorField& x) {
  Superfunction out(x.chart());
  const auto g = x.right_coefficients();
  for (std::size_t k = 0; k < g.size(); ++k) out += partial(g[k], k);
  return out;
}

Superfunction apply_gd(const GeneralizedDivergence& gamma, const SuperVectorField& x) {
  require_same_chart(gamma.chart(), x.chart(), "generalized divergence");
  return gamma.a() * candiv(x) + pair(gamma.omega(), x);
}

bool verify_cocycle(const FieldFunctional& gamma, const SuperVectorField& x, const SuperVectorField& y) {
  const auto px = x.parity();
  const auto py = y.parity();
  if (!px || !py) throw ParityError("cocycle check needs homogeneous fields");
  Superfunction rhs = x(gamma(y));
  Superfunction yx = y(gamma(x));
  rhs -= Rational(koszul(*px, *py)) * yx;
  return gamma(bracket(x, y)) == rhs;
}

bool verify_cocycle(const GeneralizedDivergence& gamma, const SuperVectorField& x, const SuperVectorField& y) {
  return verify_cocycle([&](const SuperVectorField& z) { return apply_gd(gamma, z); }, x, y);
}

bool verify_gdiv_law(const GeneralizedDivergence& gamma, const SuperVectorField& x, const Superfunction& f) {
  if (!x.is_zero() && !x.parity()) throw ParityError("gdiv law needs a homogeneous field");
  if (!f.parity()) throw ParityError("gdiv law needs a homogeneous function");
  return apply_gd(gamma, right_mul(x, f)) == apply_gd(gamma, x) * f + gamma.a() * x(f);
}

GeneralizedDivergence classify_cocycle(const Chart& chart, const FieldFunctional& gamma, ClassifyOptions options) {
  std::vector<Superfunction> omega;
  for (std::size_t k = 0; k < chart.dimension(); ++k) omega.push_back(gamma(SuperVectorField::partial(chart, k)));

  std::optional<Rational> a;
  for (std::size_t k = 0; k < chart.dimension(); ++k) {
    std::vector<Superfunction> right(chart.dimension(), Superfunction(chart));
    right[k] = Superfunction::coordinate(chart, k);
    const auto probe = SuperVectorField::from_right_coefficients(chart, right);
    const Superfunction ak = gamma(probe) - omega[k] * right[k];
    if (!ak.is_constant()) {
      throw DomainError("classify: probe along " + chart.name(k) + " gives a non-constant a");
    }
    if (a && *a != ak.constant_term()) throw DomainError("classify: a depends on the coordinate");
    a = ak.constant_term();
  }

  SuperOneForm form(chart, std::move(omega));
  if (!form.is_even()) throw DomainError("classify: gamma is not even");
  if (!is_closed(form)) throw DomainError("classify: recovered omega is not closed");
  GeneralizedDivergence result(a.value_or(Rational(0)), std::move(form));

  RandomSource rng(options.seed, RandomShape{3, 2, 3});
  for (unsigned t = 0; t < options.validation_trials; ++t) {
    const auto x = rng.field(chart);
    if (apply_gd(result, x) != gamma(x)) throw DomainError("classify: recovered divergence disagrees on a test field");
  }
  return result;
}

std::optional<Superfunction> is_coboundary(const GeneralizedDivergence& gamma) {
  if (gamma.a() != 0) return std::nullopt;
  return poincare_primitive(gamma.omega());
}

Superfunction div_from_berezinian(const BerezinianSection& s, const SuperVectorField& x) {
  require_same_chart(s.chart(), x.chart(), "berezinian divergence");
  if (!s.is_volume()) throw DomainError("berezinian divergence: section is not a volume");
  return *inverse(s.rho()) * candiv(left_mul(s.rho(), x));
}

GeneralizedDivergence rescale_divergence(const GeneralizedDivergence& gamma, const Superfunction& g) {
  if (!gamma.is_divergence()) throw DomainError("rescale: only divergences (a = 1) can be rescaled");
  if (g.parity() != Parity::Even) throw ParityError("rescale: g must be even");
  return GeneralizedDivergence(gamma.a(), gamma.omega() + de_rham(g));
}

Superfunction determinant(const Chart& chart, const std::vector<std::vector<Superfunction>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Superfunction(chart, 1);
  // Laplace expansion along the first row; the matrices here are tiny.
  Superfunction det(chart);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Superfunction>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Superfunction> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[i][c]);
      }
      minor.push_back(std::move(row));
    }
    Superfunction term = m[0][j] * determinant(chart, minor);
    if (j % 2 == 1) term *= Rational(-1);
    det += term;
  }
  return det;
}

BerezinianSection berezinian_transform(const BerezinianSection& s, const ChartMorphism& phi) {
  require_same_chart(s.chart(), phi.source(), "berezinian transform");
  if (!phi.is_bundle_type()) throw DomainError("berezinian transform: morphism is not of bundle type");
  const Chart& target = phi.target();
  const std::size_t p = target.even_count();
  const std::size_t q = target.odd_count();

  std::vector<std::vector<Superfunction>> jacobian;
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<Superfunction> row;
    for (std::size_t j = 0; j < p; ++j) row.push_back(partial(phi.images()[i], j));
    jacobian.push_back(std::move(row));
  }
  std::vector<std::vector<Superfunction>> odd_block;
  for (std::size_t a = 0; a < q; ++a) {
    std::vector<Superfunction> row;
    for (std::size_t b = 0; b < q; ++b) row.push_back(partial(phi.images()[p + a], p + b));
    odd_block.push_back(std::move(row));
  }
  const Superfunction det_a = determinant(target, odd_block);
  if (!det_a.is_constant() || det_a.is_zero()) {
    throw DomainError("berezinian transform: odd block determinant must be a nonzero constant");
  }
  const Superfunction det_j = determinant(target, jacobian);
  return BerezinianSection(det_j * phi.pullback(s.rho()) * (Rational(1) / det_a.constant_term()));
}

}  // namespace superdop
