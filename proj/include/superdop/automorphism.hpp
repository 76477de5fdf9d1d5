#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "superdop/divergence.hpp"
#include "superdop/first_order.hpp"

namespace superdop {

/// Phi(f + X) = phi_*(X) + phi*(kappa f + a candiv(X) + pair(omega, X)),
/// phi a morphism of a chart to itself.
class D1Automorphism {
 public:
  /// Throws DomainError if kappa = 0 or omega is not closed, ParityError
  /// if omega is odd, ChartMismatch if phi does not map the chart to itself.
  D1Automorphism(ChartMorphism phi, Rational kappa, Rational a, SuperOneForm omega);
  static D1Automorphism unchecked(ChartMorphism phi, Rational kappa, Rational a, SuperOneForm omega);

  const Chart& chart() const { return phi_.source(); }
  const ChartMorphism& phi() const { return phi_; }
  const Rational& kappa() const { return kappa_; }
  const Rational& a() const { return a_; }
  const SuperOneForm& omega() const { return omega_; }

  D1Element operator()(const D1Element& e) const;

  /// Explicit inverse: (phi^{-1}, 1/kappa, gamma') where gamma'(Y) is
  /// -(1/kappa) phi*(gamma(phi^{-1}_* Y)) reclassified as (a', omega').
  D1Automorphism inverse() const;

 private:
  D1Automorphism(ChartMorphism phi, Rational kappa, Rational a, SuperOneForm omega, bool check);

  ChartMorphism phi_;
  Rational kappa_;
  Rational a_;
  SuperOneForm omega_;
};

D1Element d1_auto_apply(const D1Automorphism& phi, const D1Element& e);

struct AutomorphismReport {
  bool passed = true;
  unsigned pairs_checked = 0;
  /// Human-readable description of the first failure.
  std::string witness;
};

/// Bracket preservation on basis probes and `trials` random homogeneous
/// pairs, then bijectivity through the explicit inverse on the probes.
AutomorphismReport verify_d1_automorphism(const D1Automorphism& phi, unsigned trials, std::uint64_t seed = 1);

using D1Map = std::function<D1Element(const D1Element&)>;
using FieldMap = std::function<SuperVectorField(const SuperVectorField&)>;

/// Chart 0|1: xi d_xi -> -xi d_xi, d_xi <-> xi, 1 -> 1 on D^1.
D1Element exceptional_0_1(const D1Element& e);

/// Chart 1|1 (t | xi): h d_t + f xi d_xi -> h d_t + (h' - f) xi d_xi,
/// h xi d_t <-> h d_xi.
SuperVectorField exceptional_1_1(const SuperVectorField& x);

/// Chart 0|2: fixes sl(2), negates epsilon, exchanges d_c and xi1 xi2 d_c.
SuperVectorField exceptional_0_2(const SuperVectorField& x);

/// Brackets of a D^1 element computed on operators.
std::optional<std::string> bracket_witness(const D1Map& map, const D1Element& a, const D1Element& b);
std::optional<std::string> bracket_witness(const FieldMap& map, const SuperVectorField& x, const SuperVectorField& y);

/// The basis of D^1 used as deterministic probes: 1, coordinates, partials,
/// and u^j d_k.
std::vector<D1Element> d1_probes(const Chart& chart);

/// Basis of fields with monomial coefficients of degree <= max_degree.
std::vector<SuperVectorField> field_basis(const Chart& chart, unsigned max_degree);

}  // namespace superdop
