#include "superdop/first_order.hpp"

#include <bit>
#include <map>

#include "superdop/errors.hpp"

namespace superdop {

D1Element::D1Element(Superfunction f, SuperVectorField x) : scalar(std::move(f)), field(std::move(x)) {
  require_same_chart(scalar.chart(), field.chart(), "D1 element");
}

D1Element::D1Element(const Chart& chart) : scalar(chart), field(chart) {}

std::optional<Parity> D1Element::parity() const {
  const auto pf = scalar.parity();
  const auto px = field.parity();
  if (!pf || !px) return std::nullopt;
  if (scalar.is_zero()) return px;
  if (field.is_zero()) return pf;
  if (*pf != *px) return std::nullopt;
  return pf;
}

D1Element& D1Element::operator+=(const D1Element& other) {
  scalar += other.scalar;
  field += other.field;
  return *this;
}

D1Element& D1Element::operator*=(const Rational& c) {
  scalar *= c;
  field *= c;
  return *this;
}

D1Element split_d1(const SuperDiffOp& d) {
  if (d.order() > 1) throw DomainError("split_d1 requires an operator of order at most 1");
  const Chart& chart = d.chart();
  Superfunction f = apply(d, Superfunction(chart, Rational(1)));
  SuperVectorField x = SuperVectorField::from_operator(d - SuperDiffOp::multiplication(f));
  return D1Element(std::move(f), std::move(x));
}

D1Element bracket(const D1Element& a, const D1Element& b) {
  return split_d1(scommutator(a.to_operator(), b.to_operator()));
}

bool check_first_order_leibniz(const SuperDiffOp& d, const Superfunction& f, const Superfunction& g) {
  const auto pd = d.parity();
  const auto pf = f.parity();
  if (!pd || !pf) throw ParityError("first-order Leibniz check needs homogeneous D and f");
  const Superfunction one(d.chart(), Rational(1));
  const Superfunction lhs = apply(d, f * g);
  Superfunction rhs = apply(d, f) * g - apply(d, one) * f * g;
  const Superfunction middle = f * apply(d, g);
  if (koszul(*pd, *pf) > 0) {
    rhs += middle;
  } else {
    rhs -= middle;
  }
  return lhs == rhs;
}

SuperVectorField euler_field(const Chart& chart) {
  if (chart.odd_count() == 0) throw DomainError("Euler field needs at least one odd coordinate");
  std::vector<Superfunction> c(chart.dimension(), Superfunction(chart));
  for (std::size_t k = chart.even_count(); k < chart.dimension(); ++k) {
    c[k] = Superfunction::coordinate(chart, k);
  }
  return SuperVectorField(chart, std::move(c));
}

std::vector<std::pair<int, SuperVectorField>> z_grading_decompose(const SuperVectorField& x) {
  const Chart& chart = x.chart();
  if (chart.odd_count() == 0) throw DomainError("Z-grading needs at least one odd coordinate");
  std::map<int, std::vector<Superfunction>> parts;
  for (std::size_t j = 0; j < chart.dimension(); ++j) {
    const int shift = chart.is_odd(j) ? 1 : 0;
    for (const auto& [index, c] : x.coefficient(j).terms()) {
      const int k = static_cast<int>(index.odd_degree()) - shift;
      auto it = parts.try_emplace(k, chart.dimension(), Superfunction(chart)).first;
      it->second[j].add(index, c);
    }
  }
  std::vector<std::pair<int, SuperVectorField>> out;
  for (auto& [k, coefficients] : parts) out.emplace_back(k, SuperVectorField(chart, std::move(coefficients)));
  return out;
}

namespace {

// X^0 on a purely odd chart is gl(q): sum c_{ab} xi^a d_b. Diagonal terms
// use xi^b d_b = [d_a, xi^a xi^b d_b] (a != b), off-diagonal terms use
// xi^a d_b = [xi^a d_a, xi^a d_b].
void decompose_pure_odd_weight_zero(const SuperVectorField& x,
                                    std::vector<std::pair<SuperVectorField, SuperVectorField>>& out) {
  const Chart& chart = x.chart();
  for (std::size_t j = 0; j < chart.dimension(); ++j) {
    const unsigned b = chart.odd_slot(j);
    for (const auto& [index, c] : x.coefficient(j).terms()) {
      const unsigned a = static_cast<unsigned>(std::countr_zero(index.odd));
      const std::size_t ka = chart.odd_coordinate(a);
      const Superfunction xi_a = Superfunction::coordinate(chart, ka);
      if (a == b) {
        const unsigned other = (b == 0) ? 1U : 0U;
        const std::size_t ko = chart.odd_coordinate(other);
        std::vector<Superfunction> yc(chart.dimension(), Superfunction(chart));
        yc[j] = c * (Superfunction::coordinate(chart, ko) * Superfunction::coordinate(chart, j));
        out.emplace_back(SuperVectorField::partial(chart, ko), SuperVectorField(chart, std::move(yc)));
      } else {
        std::vector<Superfunction> diag(chart.dimension(), Superfunction(chart));
        diag[ka] = xi_a;
        std::vector<Superfunction> off(chart.dimension(), Superfunction(chart));
        off[j] = c * xi_a;
        out.emplace_back(SuperVectorField(chart, std::move(diag)), SuperVectorField(chart, std::move(off)));
      }
    }
  }
}

}  // namespace

std::vector<std::pair<SuperVectorField, SuperVectorField>> commutator_decompose(const SuperVectorField& x) {
  const Chart& chart = x.chart();
  const std::size_t p = chart.even_count();
  const std::size_t q = chart.odd_count();
  if (p == 0 && q <= 1) {
    throw DomainError("chart " + chart.dimension_string() +
                      " has a proper derived algebra; no commutator decomposition");
  }
  std::vector<std::pair<int, SuperVectorField>> graded;
  if (q == 0) {
    graded.emplace_back(0, x);
  } else {
    graded = z_grading_decompose(x);
  }

  std::vector<std::pair<SuperVectorField, SuperVectorField>> out;
  for (const auto& [k, component] : graded) {
    if (component.is_zero()) continue;
    if (k != 0) {
      out.emplace_back((Rational(1) / k) * euler_field(chart), component);
    } else if (p >= 1) {
      std::vector<Superfunction> primitive;
      for (const auto& c : component.coefficients()) primitive.push_back(antiderivative(c, 0));
      out.emplace_back(SuperVectorField::partial(chart, 0), SuperVectorField(chart, std::move(primitive)));
    } else {
      decompose_pure_odd_weight_zero(component, out);
    }
  }
  return out;
}

bool check_ad_nilpotent_functions(const Superfunction& f, const Superfunction& g, const SuperDiffOp& d) {
  const SuperDiffOp inner = scommutator(SuperDiffOp::multiplication(g), d);
  return scommutator(SuperDiffOp::multiplication(f), inner).is_zero();
}

}  // namespace superdop
