#pragma once

#include <utility>
#include <vector>

#include "superdop/diff_op.hpp"
#include "superdop/vector_field.hpp"

namespace superdop {

/// Element f + X of D^1 = A (+) X under the canonical splitting.
struct D1Element {
  Superfunction scalar;
  SuperVectorField field;

  D1Element(Superfunction f, SuperVectorField x);
  explicit D1Element(const Chart& chart);

  const Chart& chart() const { return scalar.chart(); }
  SuperDiffOp to_operator() const { return SuperDiffOp::multiplication(scalar) + field.to_operator(); }
  std::optional<Parity> parity() const;
  D1Element part(Parity p) const { return {scalar.part(p), field.part(p)}; }
  bool is_zero() const { return scalar.is_zero() && field.is_zero(); }

  D1Element& operator+=(const D1Element& other);
  D1Element& operator*=(const Rational& c);
  friend D1Element operator+(D1Element a, const D1Element& b) { return a += b; }
  friend D1Element operator-(D1Element a, D1Element b) { return a += (b *= Rational(-1)); }
  friend D1Element operator*(const Rational& c, D1Element a) { return a *= c; }
  friend bool operator==(const D1Element&, const D1Element&) = default;
};

/// D -> (D1, D - D1); requires order(D) <= 1.
D1Element split_d1(const SuperDiffOp& d);

/// Supercommutator in D^1, computed on operators and re-split.
D1Element bracket(const D1Element& a, const D1Element& b);

/// D(fg) == (Df)g + (-1)^{|D||f|} f(Dg) - (D1)fg for homogeneous D and f.
bool check_first_order_leibniz(const SuperDiffOp& d, const Superfunction& f, const Superfunction& g);

/// epsilon = sum_a xi^a d_{xi^a}; requires q >= 1.
SuperVectorField euler_field(const Chart& chart);

/// Components X^k with [epsilon, X^k] = k X^k, ascending in k.
std::vector<std::pair<int, SuperVectorField>> z_grading_decompose(const SuperVectorField& x);

/// Pairs (X_i, Y_i) with sum_i [X_i, Y_i] = X. Fails on charts 0|0 and 0|1.
std::vector<std::pair<SuperVectorField, SuperVectorField>> commutator_decompose(const SuperVectorField& x);

/// [m_f, [m_g, D]] == 0.
bool check_ad_nilpotent_functions(const Superfunction& f, const Superfunction& g, const SuperDiffOp& d);

}  // namespace superdop
