#pragma once

#include <vector>

#include "superdop/diff_op.hpp"
#include "superdop/vector_field.hpp"

namespace superdop {

/// Invertible polynomial change of coordinates given by its pullback
/// phi*: A(source) -> A(target), u^k |-> images[k]. The inverse pullback is
/// supplied as inverse_images (one function on the source chart per target
/// coordinate) and the round trip is checked at construction.
class ChartMorphism {
 public:
  ChartMorphism(Chart source, Chart target, std::vector<Superfunction> images,
                std::vector<Superfunction> inverse_images);

  static ChartMorphism identity(const Chart& chart);

  const Chart& source() const { return source_; }
  const Chart& target() const { return target_; }
  const std::vector<Superfunction>& images() const { return images_; }
  const std::vector<Superfunction>& inverse_images() const { return inverse_images_; }

  ChartMorphism inverse() const;

  /// Even images depend on the even target coordinates only and odd images
  /// are linear in the odd target coordinates.
  bool is_bundle_type() const;

  /// f on the source chart, result on the target chart.
  Superfunction pullback(const Superfunction& f) const;
  /// g on the target chart, result on the source chart.
  Superfunction pullback_inverse(const Superfunction& g) const;

  friend bool operator==(const ChartMorphism& a, const ChartMorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
  }

 private:
  Chart source_;
  Chart target_;
  std::vector<Superfunction> images_;
  std::vector<Superfunction> inverse_images_;
};

/// Pullback of the composite: (phi o psi)* = phi* psi*. Requires
/// phi.source() == psi.target().
ChartMorphism compose(const ChartMorphism& phi, const ChartMorphism& psi);

Superfunction pullback(const ChartMorphism& phi, const Superfunction& f);

/// Transport phi* o D o (phi*)^{-1} of an operator on the source chart,
/// in normal form on the target chart.
SuperDiffOp pushforward_op(const ChartMorphism& phi, const SuperDiffOp& d);

/// Same transport for a field, by its values on the target coordinates.
SuperVectorField pushforward_field(const ChartMorphism& phi, const SuperVectorField& x);

}  // namespace superdop
