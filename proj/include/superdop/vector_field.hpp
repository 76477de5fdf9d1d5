#pragma once

#include <optional>
#include <vector>

#include "superdop/diff_op.hpp"
#include "superdop/superfunction.hpp"

namespace superdop {

/// Supervector field X = sum_k f_k d_k with left coefficients f_k.
/// The right-coefficient form X = sum_k d_k . g^k is available through
/// right_coefficients(); the two differ by the sign (-1)^{|u^k||g^k|}.
class SuperVectorField {
 public:
  explicit SuperVectorField(Chart chart);
  SuperVectorField(Chart chart, std::vector<Superfunction> coefficients);

  static SuperVectorField partial(const Chart& chart, std::size_t k);
  static SuperVectorField from_right_coefficients(const Chart& chart,
                                                  std::vector<Superfunction> right);
  /// Throws DomainError unless D has order <= 1 and D(1) = 0.
  static SuperVectorField from_operator(const SuperDiffOp& d);

  const Chart& chart() const { return chart_; }
  const Superfunction& coefficient(std::size_t k) const { return coefficients_.at(k); }
  const std::vector<Superfunction>& coefficients() const { return coefficients_; }
  std::vector<Superfunction> right_coefficients() const;

  bool is_zero() const;
  std::optional<Parity> parity() const;
  SuperVectorField part(Parity p) const;

  SuperDiffOp to_operator() const;
  Superfunction operator()(const Superfunction& f) const;

  SuperVectorField& operator+=(const SuperVectorField& other);
  SuperVectorField& operator-=(const SuperVectorField& other);
  SuperVectorField& operator*=(const Rational& c);

  friend SuperVectorField operator+(SuperVectorField a, const SuperVectorField& b) { return a += b; }
  friend SuperVectorField operator-(SuperVectorField a, const SuperVectorField& b) { return a -= b; }
  friend SuperVectorField operator-(SuperVectorField a) { return a *= Rational(-1); }
  friend SuperVectorField operator*(const Rational& c, SuperVectorField a) { return a *= c; }
  friend bool operator==(const SuperVectorField& a, const SuperVectorField& b) {
    return a.chart_ == b.chart_ && a.coefficients_ == b.coefficients_;
  }

 private:
  Chart chart_;
  std::vector<Superfunction> coefficients_;
};

/// Right coefficient g of d_k . g from a left coefficient, and back: the
/// odd part changes sign when u^k is odd.
Superfunction flip_for_coordinate(const Chart& chart, std::size_t k, const Superfunction& f);

/// [X, Y] computed on coefficients.
SuperVectorField bracket(const SuperVectorField& x, const SuperVectorField& y);

/// m_f o X as a field.
SuperVectorField left_mul(const Superfunction& f, const SuperVectorField& x);

/// Right module action X . f = (-1)^{|X||f|} m_f o X, bilinear over parity parts.
SuperVectorField right_mul(const SuperVectorField& x, const Superfunction& f);

}  // namespace superdop
