#include "superdop/random.hpp"

#include <algorithm>

namespace superdop {

int RandomSource::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

Rational RandomSource::coefficient() {
  int c = 0;
  while (c == 0) c = integer(-shape_.coefficient_bound, shape_.coefficient_bound);
  return Rational(c);
}

MultiIndex RandomSource::monomial(const Chart& chart, std::optional<Parity> parity, unsigned max_degree) {
  const std::size_t p = chart.even_count();
  const std::size_t q = chart.odd_count();
  MultiIndex index(p);
  for (;;) {
    index.odd = 0;
    for (unsigned a = 0; a < q; ++a) {
      if (coin()) index.odd |= odd_bit(a);
    }
    if (!parity || index.parity() == *parity) break;
    if (q == 0) break;
  }
  const unsigned odd = index.odd_degree();
  unsigned budget = max_degree > odd ? max_degree - odd : 0;
  if (p > 0 && budget > 0) {
    unsigned even_total = static_cast<unsigned>(integer(0, static_cast<int>(budget)));
    while (even_total-- > 0) index.powers[static_cast<std::size_t>(integer(0, static_cast<int>(p) - 1))] += 1;
  }
  return index;
}

Superfunction RandomSource::function(const Chart& chart, std::optional<Parity> parity) {
  return function(chart, parity, shape_.max_degree);
}

Superfunction RandomSource::function(const Chart& chart, std::optional<Parity> parity, unsigned max_degree) {
  Superfunction f(chart);
  if (parity == Parity::Odd && chart.odd_count() == 0) return f;
  const int terms = integer(1, static_cast<int>(shape_.max_terms));
  for (int t = 0; t < terms; ++t) f.add(monomial(chart, parity, max_degree), coefficient());
  return f;
}

SuperVectorField RandomSource::field(const Chart& chart, std::optional<Parity> parity) {
  return field(chart, parity, shape_.max_degree);
}

SuperVectorField RandomSource::field(const Chart& chart, std::optional<Parity> parity, unsigned max_degree) {
  std::vector<Superfunction> c;
  const Parity whole = parity.value_or(this->parity());
  for (std::size_t k = 0; k < chart.dimension(); ++k) {
    // Leave roughly a third of the components empty.
    if (integer(0, 2) == 0) {
      c.emplace_back(chart);
      continue;
    }
    const std::optional<Parity> want =
        parity ? std::optional<Parity>(whole + chart.parity(k)) : std::nullopt;
    c.push_back(function(chart, want, max_degree));
  }
  return SuperVectorField(chart, std::move(c));
}

SuperDiffOp RandomSource::op(const Chart& chart, int order, std::optional<Parity> parity) {
  SuperDiffOp d(chart);
  if (order < 0) return d;
  const unsigned coefficient_degree = std::max(1U, shape_.max_degree > 1 ? shape_.max_degree - 1 : 1U);
  for (int attempt = 0; attempt < 8 && d.order() < order; ++attempt) {
    const int terms = integer(1, static_cast<int>(shape_.max_terms));
    for (int t = 0; t < terms; ++t) {
      const int want = (t == 0) ? order : integer(0, order);
      const auto words = multi_indices_of_degree(chart, static_cast<unsigned>(want));
      if (words.empty()) continue;
      const MultiIndex& w = words[static_cast<std::size_t>(integer(0, static_cast<int>(words.size()) - 1))];
      const std::optional<Parity> cp = parity ? std::optional<Parity>(*parity + w.parity()) : std::nullopt;
      d.add(w, function(chart, cp, coefficient_degree));
    }
  }
  return d;
}

D1Element RandomSource::d1(const Chart& chart, std::optional<Parity> parity) {
  const Parity whole = parity.value_or(this->parity());
  return D1Element(function(chart, whole, 2), field(chart, whole, 2));
}

OperatorExpr RandomSource::expr(const Chart& chart, unsigned depth) {
  if (depth <= 1 || integer(0, 3) == 0) {
    if (coin()) {
      return OperatorExpr::partial(chart, static_cast<std::size_t>(integer(0, static_cast<int>(chart.dimension()) - 1)));
    }
    return OperatorExpr::multiply(function(chart, std::nullopt, 2));
  }
  switch (integer(0, 2)) {
    case 0:
      return OperatorExpr::sum(expr(chart, depth - 1), expr(chart, depth - 1));
    case 1:
      return OperatorExpr::scale(coefficient(), expr(chart, depth - 1));
    default:
      return OperatorExpr::compose(expr(chart, depth - 1), expr(chart, depth - 1));
  }
}

SuperOneForm RandomSource::closed_even_form(const Chart& chart) {
  SuperOneForm omega = de_rham(function(chart, Parity::Even));
  for (std::size_t k = 0; k < chart.even_count(); ++k) {
    if (coin()) omega += coefficient() * SuperOneForm::basis(chart, k);
  }
  return omega;
}

}  // namespace superdop
