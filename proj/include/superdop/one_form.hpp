#pragma once

#include <optional>
#include <vector>

#include "superdop/vector_field.hpp"

namespace superdop {

/// Superdifferential 1-form omega = sum_k du^k omega_k with the
/// coefficients written to the right of du^k. d has parity 0, so du^k has
/// the parity of u^k and omega is even iff |omega_k| = |u^k| for all k.
class SuperOneForm {
 public:
  explicit SuperOneForm(Chart chart);
  SuperOneForm(Chart chart, std::vector<Superfunction> components);

  static SuperOneForm basis(const Chart& chart, std::size_t k);

  const Chart& chart() const { return chart_; }
  const Superfunction& component(std::size_t k) const { return components_.at(k); }
  const std::vector<Superfunction>& components() const { return components_; }

  bool is_zero() const;
  bool is_even() const;
  std::optional<Parity> parity() const;
  SuperOneForm part(Parity p) const;

  SuperOneForm& operator+=(const SuperOneForm& other);
  SuperOneForm& operator-=(const SuperOneForm& other);
  SuperOneForm& operator*=(const Rational& c);

  friend SuperOneForm operator+(SuperOneForm a, const SuperOneForm& b) { return a += b; }
  friend SuperOneForm operator-(SuperOneForm a, const SuperOneForm& b) { return a -= b; }
  friend SuperOneForm operator-(SuperOneForm a) { return a *= Rational(-1); }
  friend SuperOneForm operator*(const Rational& c, SuperOneForm a) { return a *= c; }
  friend bool operator==(const SuperOneForm& a, const SuperOneForm& b) {
    return a.chart_ == b.chart_ && a.components_ == b.components_;
  }

 private:
  Chart chart_;
  std::vector<Superfunction> components_;
};

/// omega . f: every component multiplied by f on the right.
SuperOneForm right_mul(const SuperOneForm& omega, const Superfunction& f);

/// f omega, moving f past each du^k with the Koszul sign.
SuperOneForm left_mul(const Superfunction& f, const SuperOneForm& omega);

/// df with components d_k f. For even f, pair(df, X) = X(f) for every X.
SuperOneForm de_rham(const Superfunction& f);

/// i_omega(X) = sum_k omega_k g^k for X = sum_k d_k . g^k.
Superfunction pair(const SuperOneForm& omega, const SuperVectorField& x);

/// d_i omega_j - (-1)^{|u^i||u^j|} d_j omega_i == 0 for all i, j.
bool is_closed(const SuperOneForm& omega);

/// Even f with df = omega and zero constant term, by the Euler homotopy.
/// Throws DomainError if omega is odd or not closed.
Superfunction poincare_primitive(const SuperOneForm& omega);

}  // namespace superdop
