#include "superdop/vector_field.hpp"

#include <bit>

#include "superdop/errors.hpp"

namespace superdop {

SuperVectorField::SuperVectorField(Chart chart) : chart_(std::move(chart)) {
  coefficients_.assign(chart_.dimension(), Superfunction(chart_));
}

SuperVectorField::SuperVectorField(Chart chart, std::vector<Superfunction> coefficients)
    : chart_(std::move(chart)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != chart_.dimension()) {
    throw IndexError("vector field needs one coefficient per coordinate of " + chart_.to_string());
  }
  for (const auto& c : coefficients_) require_same_chart(chart_, c.chart(), "vector field");
}

SuperVectorField SuperVectorField::partial(const Chart& chart, std::size_t k) {
  chart.check_index(k);
  SuperVectorField x(chart);
  x.coefficients_[k] = Superfunction(chart, Rational(1));
  return x;
}

SuperVectorField SuperVectorField::from_right_coefficients(const Chart& chart,
                                                           std::vector<Superfunction> right) {
  if (right.size() != chart.dimension()) {
    throw IndexError("vector field needs one coefficient per coordinate of " + chart.to_string());
  }
  for (std::size_t k = 0; k < right.size(); ++k) right[k] = flip_for_coordinate(chart, k, right[k]);
  return SuperVectorField(chart, std::move(right));
}

SuperVectorField SuperVectorField::from_operator(const SuperDiffOp& d) {
  const Chart& chart = d.chart();
  SuperVectorField x(chart);
  for (const auto& [w, c] : d.terms()) {
    if (w.total_degree() != 1) {
      throw DomainError(w.total_degree() == 0 ? "operator does not annihilate 1"
                                              : "operator has order greater than 1");
    }
    std::size_t k = 0;
    if (w.odd != 0) {
      k = chart.odd_coordinate(static_cast<unsigned>(std::countr_zero(w.odd)));
    } else {
      while (w.powers[k] == 0) ++k;
    }
    x.coefficients_[k] = c;
  }
  return x;
}

std::vector<Superfunction> SuperVectorField::right_coefficients() const {
  std::vector<Superfunction> out;
  out.reserve(coefficients_.size());
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    out.push_back(flip_for_coordinate(chart_, k, coefficients_[k]));
  }
  return out;
}

bool SuperVectorField::is_zero() const {
  for (const auto& c : coefficients_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::optional<Parity> SuperVectorField::parity() const {
  std::optional<Parity> result;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k].is_zero()) continue;
    const auto cp = coefficients_[k].parity();
    if (!cp) return std::nullopt;
    const Parity p = *cp + chart_.parity(k);
    if (result && *result != p) return std::nullopt;
    result = p;
  }
  return result.value_or(Parity::Even);
}

SuperVectorField SuperVectorField::part(Parity p) const {
  SuperVectorField out(chart_);
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    out.coefficients_[k] = coefficients_[k].part(p + chart_.parity(k));
  }
  return out;
}

SuperDiffOp SuperVectorField::to_operator() const {
  SuperDiffOp d(chart_);
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k].is_zero()) continue;
    d += left_multiply(coefficients_[k], SuperDiffOp::partial(chart_, k));
  }
  return d;
}

Superfunction SuperVectorField::operator()(const Superfunction& f) const {
  require_same_chart(chart_, f.chart(), "vector field application");
  Superfunction out(chart_);
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    if (coefficients_[k].is_zero()) continue;
    out += coefficients_[k] * superdop::partial(f, k);
  }
  return out;
}

SuperVectorField& SuperVectorField::operator+=(const SuperVectorField& other) {
  require_same_chart(chart_, other.chart_, "vector field sum");
  for (std::size_t k = 0; k < coefficients_.size(); ++k) coefficients_[k] += other.coefficients_[k];
  return *this;
}

SuperVectorField& SuperVectorField::operator-=(const SuperVectorField& other) {
  require_same_chart(chart_, other.chart_, "vector field difference");
  for (std::size_t k = 0; k < coefficients_.size(); ++k) coefficients_[k] -= other.coefficients_[k];
  return *this;
}

SuperVectorField& SuperVectorField::operator*=(const Rational& c) {
  for (auto& coefficient : coefficients_) coefficient *= c;
  return *this;
}

Superfunction flip_for_coordinate(const Chart& chart, std::size_t k, const Superfunction& f) {
  if (!chart.is_odd(k)) return f;
  return f.part(Parity::Even) - f.part(Parity::Odd);
}

SuperVectorField bracket(const SuperVectorField& x, const SuperVectorField& y) {
  require_same_chart(x.chart(), y.chart(), "vector field bracket");
  const Chart& chart = x.chart();
  SuperVectorField out(chart);
  for (Parity px : kParities) {
    const SuperVectorField xp = x.part(px);
    if (xp.is_zero()) continue;
    for (Parity py : kParities) {
      const SuperVectorField yp = y.part(py);
      if (yp.is_zero()) continue;
      std::vector<Superfunction> c(chart.dimension(), Superfunction(chart));
      for (std::size_t j = 0; j < chart.dimension(); ++j) {
        c[j] = xp(yp.coefficient(j));
        const Superfunction back = yp(xp.coefficient(j));
        if (koszul(px, py) > 0) {
          c[j] -= back;
        } else {
          c[j] += back;
        }
      }
      out += SuperVectorField(chart, std::move(c));
    }
  }
  return out;
}

SuperVectorField left_mul(const Superfunction& f, const SuperVectorField& x) {
  require_same_chart(f.chart(), x.chart(), "left multiplication");
  std::vector<Superfunction> c;
  c.reserve(x.coefficients().size());
  for (const auto& coefficient : x.coefficients()) c.push_back(f * coefficient);
  return SuperVectorField(x.chart(), std::move(c));
}

SuperVectorField right_mul(const SuperVectorField& x, const Superfunction& f) {
  require_same_chart(f.chart(), x.chart(), "right multiplication");
  SuperVectorField out(x.chart());
  for (Parity px : kParities) {
    const SuperVectorField xp = x.part(px);
    if (xp.is_zero()) continue;
    for (Parity pf : kParities) {
      const Superfunction fp = f.part(pf);
      if (fp.is_zero()) continue;
      SuperVectorField term = left_mul(fp, xp);
      if (koszul(px, pf) < 0) term *= Rational(-1);
      out += term;
    }
  }
  return out;
}

}  // namespace superdop
