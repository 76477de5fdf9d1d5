#include "superdop/one_form.hpp"

#include "superdop/errors.hpp"

namespace superdop {

SuperOneForm::SuperOneForm(Chart chart) : chart_(std::move(chart)) {
  components_.assign(chart_.dimension(), Superfunction(chart_));
}

SuperOneForm::SuperOneForm(Chart chart, std::vector<Superfunction> components)
    : chart_(std::move(chart)), components_(std::move(components)) {
  if (components_.size() != chart_.dimension()) {
    throw IndexError("1-form needs one component per coordinate of " + chart_.to_string());
  }
  for (const auto& c : components_) require_same_chart(chart_, c.chart(), "1-form");
}

SuperOneForm SuperOneForm::basis(const Chart& chart, std::size_t k) {
  chart.check_index(k);
  SuperOneForm omega(chart);
  omega.components_[k] = Superfunction(chart, Rational(1));
  return omega;
}

bool SuperOneForm::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::optional<Parity> SuperOneForm::parity() const {
  std::optional<Parity> result;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (components_[k].is_zero()) continue;
    const auto cp = components_[k].parity();
    if (!cp) return std::nullopt;
    const Parity p = *cp + chart_.parity(k);
    if (result && *result != p) return std::nullopt;
    result = p;
  }
  return result.value_or(Parity::Even);
}

bool SuperOneForm::is_even() const { return parity() == Parity::Even; }

SuperOneForm SuperOneForm::part(Parity p) const {
  SuperOneForm out(chart_);
  for (std::size_t k = 0; k < components_.size(); ++k) {
    out.components_[k] = components_[k].part(p + chart_.parity(k));
  }
  return out;
}

SuperOneForm& SuperOneForm::operator+=(const SuperOneForm& other) {
  require_same_chart(chart_, other.chart_, "1-form sum");
  for (std::size_t k = 0; k < components_.size(); ++k) components_[k] += other.components_[k];
  return *this;
}

SuperOneForm& SuperOneForm::operator-=(const SuperOneForm& other) {
  require_same_chart(chart_, other.chart_, "1-form difference");
  for (std::size_t k = 0; k < components_.size(); ++k) components_[k] -= other.components_[k];
  return *this;
}

SuperOneForm& SuperOneForm::operator*=(const Rational& c) {
  for (auto& component : components_) component *= c;
  return *this;
}

SuperOneForm right_mul(const SuperOneForm& omega, const Superfunction& f) {
  require_same_chart(omega.chart(), f.chart(), "1-form right multiplication");
  std::vector<Superfunction> c;
  for (const auto& component : omega.components()) c.push_back(component * f);
  return SuperOneForm(omega.chart(), std::move(c));
}

SuperOneForm left_mul(const Superfunction& f, const SuperOneForm& omega) {
  require_same_chart(omega.chart(), f.chart(), "1-form left multiplication");
  const Chart& chart = omega.chart();
  std::vector<Superfunction> c;
  for (std::size_t k = 0; k < chart.dimension(); ++k) {
    Superfunction moved = f.part(Parity::Even);
    const Superfunction odd = f.part(Parity::Odd);
    moved += chart.is_odd(k) ? -odd : odd;
    c.push_back(moved * omega.component(k));
  }
  return SuperOneForm(chart, std::move(c));
}

SuperOneForm de_rham(const Superfunction& f) {
  const Chart& chart = f.chart();
  std::vector<Superfunction> c;
  for (std::size_t k = 0; k < chart.dimension(); ++k) c.push_back(partial(f, k));
  return SuperOneForm(chart, std::move(c));
}

Superfunction pair(const SuperOneForm& omega, const SuperVectorField& x) {
  require_same_chart(omega.chart(), x.chart(), "pairing");
  const std::vector<Superfunction> g = x.right_coefficients();
  Superfunction out(omega.chart());
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (omega.component(k).is_zero() || g[k].is_zero()) continue;
    out += omega.component(k) * g[k];
  }
  return out;
}

bool is_closed(const SuperOneForm& omega) {
  const Chart& chart = omega.chart();
  const std::size_t n = chart.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (i == j && !chart.is_odd(i)) continue;
      Superfunction lhs = partial(omega.component(j), i);
      const Superfunction rhs = partial(omega.component(i), j);
      if (koszul(chart.parity(i), chart.parity(j)) > 0) {
        lhs -= rhs;
      } else {
        lhs += rhs;
      }
      if (!lhs.is_zero()) return false;
    }
  }
  return true;
}

Superfunction poincare_primitive(const SuperOneForm& omega) {
  if (!omega.is_even()) throw DomainError("poincare_primitive needs an even 1-form");
  if (!is_closed(omega)) throw DomainError("poincare_primitive needs a closed 1-form");
  const Chart& chart = omega.chart();
  // Contract with the total Euler field sum_k u^k d_k; on exact forms this is
  // the total degree operator applied to the primitive.
  std::vector<Superfunction> euler;
  for (std::size_t k = 0; k < chart.dimension(); ++k) euler.push_back(Superfunction::coordinate(chart, k));
  const Superfunction h = pair(omega, SuperVectorField(chart, std::move(euler)));
  Superfunction f(chart);
  for (const auto& [index, c] : h.terms()) {
    const unsigned w = index.total_degree();
    if (w == 0) throw DomainError("closed form has a contraction with a constant term");
    f.add(index, c / Rational(w));
  }
  if (!(de_rham(f) == omega)) throw DomainError("poincare_primitive postcondition d(f) = omega failed");
  return f;
}

}  // namespace superdop
