#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "superdop/first_order.hpp"
#include "superdop/one_form.hpp"
#include "superdop/operator_expr.hpp"

namespace superdop {

/// Bounds for random instances: integer coefficients in
/// [-coefficient_bound, coefficient_bound] and total degree <= max_degree.
struct RandomShape {
  int coefficient_bound = 3;
  unsigned max_degree = 3;
  unsigned max_terms = 4;
};

/// Seeded generator of random algebraic objects for property checks.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, RandomShape shape = {}) : engine_(seed), shape_(shape) {}

  std::mt19937_64& engine() { return engine_; }
  const RandomShape& shape() const { return shape_; }

  int integer(int lo, int hi);
  bool coin() { return integer(0, 1) == 1; }
  Parity parity() { return coin() ? Parity::Odd : Parity::Even; }
  /// Nonzero integer coefficient from the box.
  Rational coefficient();

  MultiIndex monomial(const Chart& chart, std::optional<Parity> parity, unsigned max_degree);

  /// Random superfunction; homogeneous when `parity` is set. May be zero
  /// when no monomial of the requested parity exists.
  Superfunction function(const Chart& chart, std::optional<Parity> parity = std::nullopt);
  Superfunction function(const Chart& chart, std::optional<Parity> parity, unsigned max_degree);

  SuperVectorField field(const Chart& chart, std::optional<Parity> parity = std::nullopt);
  SuperVectorField field(const Chart& chart, std::optional<Parity> parity, unsigned max_degree);

  /// Operator of order exactly `order` (when the chart allows it).
  SuperDiffOp op(const Chart& chart, int order, std::optional<Parity> parity = std::nullopt);

  D1Element d1(const Chart& chart, std::optional<Parity> parity = std::nullopt);

  OperatorExpr expr(const Chart& chart, unsigned depth);

  /// Random closed even 1-form: an exact form d f plus constant multiples
  /// of du^k for even coordinates.
  SuperOneForm closed_even_form(const Chart& chart);

 private:
  std::mt19937_64 engine_;
  RandomShape shape_;
};

}  // namespace superdop
