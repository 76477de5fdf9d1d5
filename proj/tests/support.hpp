#pragma once

#include <string>
#include <vector>

#include "superdop/format.hpp"
#include "superdop/random.hpp"

namespace support {

using namespace superdop;

inline Chart chart(std::size_t p, std::size_t q) { return Chart::standard(p, q); }

/// The three charts the property suites sweep.
inline std::vector<Chart> property_charts() { return {chart(1, 1), chart(2, 2), chart(0, 3)}; }

inline Superfunction coord(const Chart& c, const std::string& name) {
  return Superfunction::coordinate(c, *c.index_of(name));
}

inline std::size_t idx(const Chart& c, const std::string& name) { return *c.index_of(name); }

inline SuperVectorField field(const Chart& c, std::vector<std::pair<Superfunction, std::string>> terms) {
  std::vector<Superfunction> coefficients(c.dimension(), Superfunction(c));
  for (auto& [f, name] : terms) coefficients[idx(c, name)] += f;
  return SuperVectorField(c, std::move(coefficients));
}

inline Superfunction constant(const Chart& c, const Rational& r) { return Superfunction(c, r); }

/// Drops every term that involves coordinate k.
inline Superfunction without(const Superfunction& f, std::size_t k) {
  const Chart& c = f.chart();
  Superfunction out(c);
  for (const auto& [index, coefficient] : f.terms()) {
    const bool uses = c.is_odd(k) ? (index.odd >> c.odd_slot(k)) & 1U : index.powers[k] != 0;
    if (!uses) out.add(index, coefficient);
  }
  return out;
}

/// Composite of three elementary invertible maps (scaling, even shift,
/// triangular shear) with their inverses written out.
inline ChartMorphism random_morphism(RandomSource& rng, const Chart& c) {
  ChartMorphism phi = ChartMorphism::identity(c);
  for (int step = 0; step < 3; ++step) {
    std::vector<Superfunction> there;
    std::vector<Superfunction> back;
    for (std::size_t k = 0; k < c.dimension(); ++k) {
      there.push_back(Superfunction::coordinate(c, k));
      back.push_back(Superfunction::coordinate(c, k));
    }
    const std::size_t k = static_cast<std::size_t>(rng.integer(0, static_cast<int>(c.dimension()) - 1));
    const int kind = rng.integer(0, 2);
    if (kind == 0) {
      const Rational s = rng.coefficient();
      there[k] *= s;
      back[k] *= Rational(1) / s;
    } else if (kind == 1 && !c.is_odd(k)) {
      const Rational s = rng.coefficient();
      there[k] += constant(c, s);
      back[k] -= constant(c, s);
    } else {
      const Superfunction g = without(rng.function(c, c.parity(k), 2), k);
      there[k] += g;
      back[k] -= g;
    }
    phi = compose(phi, ChartMorphism(c, c, std::move(there), std::move(back)));
  }
  return phi;
}

inline ChartMorphism shift_x(const Chart& c) {
  const auto x = Superfunction::coordinate(c, 0);
  std::vector<Superfunction> there;
  std::vector<Superfunction> back;
  for (std::size_t k = 0; k < c.dimension(); ++k) {
    there.push_back(Superfunction::coordinate(c, k));
    back.push_back(Superfunction::coordinate(c, k));
  }
  there[0] = x + Superfunction(c, 1);
  back[0] = x - Superfunction(c, 1);
  return ChartMorphism(c, c, there, back);
}

/// A few invertible morphisms per chart, mixing even and odd coordinates.
inline std::vector<ChartMorphism> sample_morphisms(const Chart& c) {
  std::vector<ChartMorphism> out{ChartMorphism::identity(c)};
  const std::size_t p = c.even_count();
  const std::size_t q = c.odd_count();
  std::vector<Superfunction> u;
  for (std::size_t k = 0; k < c.dimension(); ++k) u.push_back(Superfunction::coordinate(c, k));
  if (p >= 1) out.push_back(shift_x(c));
  if (p >= 1 && q >= 2) {
    auto there = u;
    auto back = u;
    there[0] = u[0] + u[p] * u[p + 1];
    back[0] = u[0] - u[p] * u[p + 1];
    there[p] = u[p] + u[0] * u[p + 1];
    back[p] = u[p] - (u[0] - u[p] * u[p + 1]) * u[p + 1];
    out.emplace_back(c, c, there, back);
  }
  if (q >= 2) {
    auto there = u;
    auto back = u;
    there[p] = Rational(2) * u[p + 1];
    there[p + 1] = u[p] + u[p + 1];
    back[p] = u[p + 1] - Rational(1, 2) * u[p];
    back[p + 1] = Rational(1, 2) * u[p];
    out.emplace_back(c, c, there, back);
  }
  if (p >= 2) {
    auto there = u;
    auto back = u;
    there[0] = u[0] + u[1] * u[1];
    back[0] = u[0] - u[1] * u[1];
    out.emplace_back(c, c, there, back);
  }
  if (p == 1 && q == 1) {
    auto there = u;
    auto back = u;
    there[0] = Rational(2) * u[0];
    there[1] = Rational(3) * u[1];
    back[0] = Rational(1, 2) * u[0];
    back[1] = Rational(1, 3) * u[1];
    out.emplace_back(c, c, there, back);
  }
  return out;
}

}  // namespace support
