#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "superdop/chart.hpp"
#include "superdop/multi_index.hpp"
#include "superdop/rational.hpp"

namespace superdop {

/// Element of Q[x^1..x^p] (x) Lambda(xi^1..xi^q) on a chart: a finite sum
/// of terms c * x^alpha * xi^beta with the xi factors in increasing order.
/// Zero coefficients are never stored.
class Superfunction {
 public:
  using Terms = std::map<MultiIndex, Rational, MultiIndexLess>;

  explicit Superfunction(Chart chart) : chart_(std::move(chart)) {}
  Superfunction(Chart chart, const Rational& constant);

  static Superfunction coordinate(const Chart& chart, std::size_t k);
  static Superfunction monomial(const Chart& chart, MultiIndex index, const Rational& c = 1);

  const Chart& chart() const { return chart_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Parity if homogeneous (zero counts as even), nullopt otherwise.
  std::optional<Parity> parity() const;
  bool is_homogeneous() const { return parity().has_value(); }
  Superfunction part(Parity p) const;

  Rational constant_term() const;
  /// The xi-free part.
  Superfunction body() const;
  bool is_constant() const;
  Rational coefficient(const MultiIndex& index) const;

  void add(const MultiIndex& index, const Rational& c);

  Superfunction& operator+=(const Superfunction& other);
  Superfunction& operator-=(const Superfunction& other);
  Superfunction& operator*=(const Rational& c);

  friend Superfunction operator+(Superfunction a, const Superfunction& b) { return a += b; }
  friend Superfunction operator-(Superfunction a, const Superfunction& b) { return a -= b; }
  friend Superfunction operator-(Superfunction a) { return a *= Rational(-1); }
  friend Superfunction operator*(const Rational& c, Superfunction a) { return a *= c; }
  friend Superfunction operator*(Superfunction a, const Rational& c) { return a *= c; }
  friend Superfunction operator*(const Superfunction& a, const Superfunction& b);
  friend bool operator==(const Superfunction& a, const Superfunction& b);

 private:
  Chart chart_;
  Terms terms_;
};

/// Left derivative d/du^k.
Superfunction partial(const Superfunction& f, std::size_t k);

/// Polynomial antiderivative in the even coordinate k with zero constant of
/// integration on every monomial.
Superfunction antiderivative(const Superfunction& f, std::size_t k);

Superfunction power(const Superfunction& f, unsigned n);

/// Algebra homomorphism sending coordinate k of f's chart to images[k];
/// images live on `target` and carry the parity of the coordinate they
/// replace.
Superfunction substitute(const Superfunction& f, const Chart& target,
                         std::span<const Superfunction> images);

/// Components by xi-degree, ascending, zero components omitted.
std::vector<std::pair<unsigned, Superfunction>> n_degree_decompose(const Superfunction& f);

/// Inverse in the chart algebra. Exists iff the body of f is a nonzero
/// constant; then f = c + n with n nilpotent and the geometric series in
/// n/c terminates.
std::optional<Superfunction> inverse(const Superfunction& f);

}  // namespace superdop
