#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "superdop/morphism.hpp"
#include "superdop/one_form.hpp"

namespace superdop {

/// Section s = d^{p|q}u . rho of the Berezinian module.
class BerezinianSection {
 public:
  explicit BerezinianSection(Superfunction rho) : rho_(std::move(rho)) {}
  static BerezinianSection coordinate_volume(const Chart& chart) { return BerezinianSection(Superfunction(chart, 1)); }

  const Chart& chart() const { return rho_.chart(); }
  const Superfunction& rho() const { return rho_; }
  /// rho even and invertible.
  bool is_volume() const;

  friend bool operator==(const BerezinianSection&, const BerezinianSection&) = default;

 private:
  Superfunction rho_;
};

/// gamma(X) = a candiv(X) + pair(omega, X).
class GeneralizedDivergence {
 public:
  /// Throws ParityError if omega is not even, DomainError if not closed.
  GeneralizedDivergence(Rational a, SuperOneForm omega);
  /// No checks; for falsification experiments.
  static GeneralizedDivergence unchecked(Rational a, SuperOneForm omega);
  static GeneralizedDivergence canonical(const Chart& chart) { return {Rational(1), SuperOneForm(chart)}; }

  const Chart& chart() const { return omega_.chart(); }
  const Rational& a() const { return a_; }
  const SuperOneForm& omega() const { return omega_; }
  bool is_divergence() const { return a_ == 1; }

  Superfunction operator()(const SuperVectorField& x) const;

  friend bool operator==(const GeneralizedDivergence& a, const GeneralizedDivergence& b) {
    return a.a_ == b.a_ && a.omega_ == b.omega_;
  }

 private:
  struct Unchecked {};
  GeneralizedDivergence(Rational a, SuperOneForm omega, Unchecked) : a_(std::move(a)), omega_(std::move(omega)) {}

  Rational a_;
  SuperOneForm omega_;
};

using FieldFunctional = std::function<Superfunction(const SuperVectorField&)>;

/// Sum_k d_k g^k for X = sum_k d_k . g^k.
Superfunction candiv(const SuperVectorField& x);

Superfunction apply_gd(const GeneralizedDivergence& gamma, const SuperVectorField& x);

/// gamma([X,Y]) == X(gamma(Y)) - (-1)^{|X||Y|} Y(gamma(X)) for homogeneous X, Y.
bool verify_cocycle(const FieldFunctional& gamma, const SuperVectorField& x, const SuperVectorField& y);
bool verify_cocycle(const GeneralizedDivergence& gamma, const SuperVectorField& x, const SuperVectorField& y);

/// gamma(X . f) == gamma(X) f + a X(f).
bool verify_gdiv_law(const GeneralizedDivergence& gamma, const SuperVectorField& x, const Superfunction& f);

struct ClassifyOptions {
  unsigned validation_trials = 20;
  std::uint64_t seed = 1;
};

/// Recovers (a, omega) from an even cocycle known only through its values:
/// omega_k = gamma(d_k), a = gamma(d_k . u^k) - omega_k u^k for every k.
/// Throws DomainError when the probes are inconsistent or the recovered
/// divergence disagrees with gamma on a random field.
GeneralizedDivergence classify_cocycle(const Chart& chart, const FieldFunctional& gamma, ClassifyOptions options = {});

/// f with gamma(X) = X(f) when a = 0; nullopt otherwise.
std::optional<Superfunction> is_coboundary(const GeneralizedDivergence& gamma);

/// gamma_s(X) = rho^{-1} candiv(rho X), the solution of -s o X = s . gamma_s(X).
/// Throws DomainError if s is not a volume.
Superfunction div_from_berezinian(const BerezinianSection& s, const SuperVectorField& x);

/// (1, omega + dg); requires a = 1 and g even.
GeneralizedDivergence rescale_divergence(const GeneralizedDivergence& gamma, const Superfunction& g);

/// s on phi's source chart, transported to the target chart: the coefficient
/// becomes det(dy/dx) det(A)^{-1} phi*(rho) where y^i are the even images and
/// A the matrix of the odd images. Requires a bundle-type phi and constant
/// invertible det(A).
BerezinianSection berezinian_transform(const BerezinianSection& s, const ChartMorphism& phi);

/// Determinant of a square matrix of even superfunctions.
Superfunction determinant(const Chart& chart, const std::vector<std::vector<Superfunction>>& m);

}  // namespace superdop
