#include "superdop/superfunction.hpp"

#include <string>

#include "superdop/errors.hpp"

namespace superdop {

Superfunction::Superfunction(Chart chart, const Rational& constant) : chart_(std::move(chart)) {
  add(MultiIndex(chart_.even_count()), constant);
}

Superfunction Superfunction::coordinate(const Chart& chart, std::size_t k) {
  chart.check_index(k);
  MultiIndex index(chart.even_count());
  if (chart.is_odd(k)) {
    index.odd = odd_bit(chart.odd_slot(k));
  } else {
    index.powers[k] = 1;
  }
  return monomial(chart, std::move(index));
}

Superfunction Superfunction::monomial(const Chart& chart, MultiIndex index, const Rational& c) {
  if (index.powers.size() != chart.even_count()) {
    throw IndexError("monomial exponent vector does not match chart " + chart.dimension_string());
  }
  if (chart.odd_count() < kMaxOdd && (index.odd >> chart.odd_count()) != 0) {
    throw IndexError("monomial odd slots exceed chart " + chart.dimension_string());
  }
  Superfunction f(chart);
  f.add(index, c);
  return f;
}

std::optional<Parity> Superfunction::parity() const {
  std::optional<Parity> result;
  for (const auto& [index, c] : terms_) {
    const Parity p = index.parity();
    if (result && *result != p) return std::nullopt;
    result = p;
  }
  return result.value_or(Parity::Even);
}

Superfunction Superfunction::part(Parity p) const {
  Superfunction out(chart_);
  for (const auto& [index, c] : terms_) {
    if (index.parity() == p) out.terms_.emplace_hint(out.terms_.end(), index, c);
  }
  return out;
}

Rational Superfunction::constant_term() const {
  return coefficient(MultiIndex(chart_.even_count()));
}

Superfunction Superfunction::body() const {
  Superfunction out(chart_);
  for (const auto& [index, c] : terms_) {
    if (index.odd == 0) out.terms_.emplace_hint(out.terms_.end(), index, c);
  }
  return out;
}

bool Superfunction::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Superfunction::coefficient(const MultiIndex& index) const {
  const auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Superfunction::add(const MultiIndex& index, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Superfunction& Superfunction::operator+=(const Superfunction& other) {
  require_same_chart(chart_, other.chart_, "superfunction sum");
  for (const auto& [index, c] : other.terms_) add(index, c);
  return *this;
}

Superfunction& Superfunction::operator-=(const Superfunction& other) {
  require_same_chart(chart_, other.chart_, "superfunction difference");
  for (const auto& [index, c] : other.terms_) add(index, -c);
  return *this;
}

Superfunction& Superfunction::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [index, value] : terms_) value *= c;
  return *this;
}

Superfunction operator*(const Superfunction& a, const Superfunction& b) {
  require_same_chart(a.chart_, b.chart_, "superfunction product");
  Superfunction out(a.chart_);
  const std::size_t p = a.chart_.even_count();
  for (const auto& [ia, ca] : a.terms_) {
    for (const auto& [ib, cb] : b.terms_) {
      const int sign = reorder_sign(ia.odd, ib.odd);
      if (sign == 0) continue;
      MultiIndex index(p);
      for (std::size_t i = 0; i < p; ++i) index.powers[i] = ia.powers[i] + ib.powers[i];
      index.odd = ia.odd | ib.odd;
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      out.add(index, c);
    }
  }
  return out;
}

bool operator==(const Superfunction& a, const Superfunction& b) {
  return a.chart_ == b.chart_ && a.terms_ == b.terms_;
}

Superfunction partial(const Superfunction& f, std::size_t k) {
  const Chart& chart = f.chart();
  chart.check_index(k);
  Superfunction out(chart);
  if (chart.is_odd(k)) {
    const unsigned slot = chart.odd_slot(k);
    const OddMask bit = odd_bit(slot);
    for (const auto& [index, c] : f.terms()) {
      if ((index.odd & bit) == 0) continue;
      // Move xi^slot to the front past the generators below it.
      const unsigned below = transposition_count(bit, index.odd & ~bit);
      MultiIndex reduced = index;
      reduced.odd &= ~bit;
      out.add(reduced, (below & 1U) ? Rational(-c) : c);
    }
  } else {
    for (const auto& [index, c] : f.terms()) {
      const unsigned e = index.powers[k];
      if (e == 0) continue;
      MultiIndex reduced = index;
      reduced.powers[k] = e - 1;
      out.add(reduced, c * e);
    }
  }
  return out;
}

Superfunction antiderivative(const Superfunction& f, std::size_t k) {
  const Chart& chart = f.chart();
  chart.check_index(k);
  if (chart.is_odd(k)) throw DomainError("antiderivative requires an even coordinate");
  Superfunction out(chart);
  for (const auto& [index, c] : f.terms()) {
    MultiIndex raised = index;
    raised.powers[k] += 1;
    out.add(raised, c / Rational(raised.powers[k]));
  }
  return out;
}

Superfunction power(const Superfunction& f, unsigned n) {
  Superfunction result(f.chart(), Rational(1));
  Superfunction base = f;
  while (n != 0) {
    if (n & 1U) result = result * base;
    n >>= 1;
    if (n != 0) base = base * base;
  }
  return result;
}

Superfunction substitute(const Superfunction& f, const Chart& target,
                         std::span<const Superfunction> images) {
  const Chart& chart = f.chart();
  if (images.size() != chart.dimension()) {
    throw IndexError("substitution needs one image per coordinate of " + chart.to_string());
  }
  for (std::size_t k = 0; k < images.size(); ++k) {
    require_same_chart(images[k].chart(), target, "substitution image");
    const auto parity = images[k].parity();
    if (!images[k].is_zero() && parity != chart.parity(k)) {
      throw ParityError("image of " + std::string(to_string(chart.parity(k))) +
                        " coordinate '" + chart.name(k) + "' is not " +
                        std::string(to_string(chart.parity(k))));
    }
  }

  const std::size_t p = chart.even_count();
  // powers_cache[i][e] = images[i]^e
  std::vector<std::vector<Superfunction>> powers_cache(p);
  auto even_power = [&](std::size_t i, unsigned e) -> const Superfunction& {
    auto& cache = powers_cache[i];
    if (cache.empty()) cache.emplace_back(target, Rational(1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  Superfunction out(target);
  for (const auto& [index, c] : f.terms()) {
    Superfunction term(target, c);
    for (std::size_t i = 0; i < p; ++i) {
      if (index.powers[i] != 0) term = term * even_power(i, index.powers[i]);
    }
    for (OddMask rest = index.odd; rest != 0; rest &= rest - 1) {
      const unsigned slot = static_cast<unsigned>(std::countr_zero(rest));
      term = term * images[chart.odd_coordinate(slot)];
    }
    out += term;
  }
  return out;
}

std::vector<std::pair<unsigned, Superfunction>> n_degree_decompose(const Superfunction& f) {
  std::map<unsigned, Superfunction> parts;
  for (const auto& [index, c] : f.terms()) {
    auto it = parts.try_emplace(index.odd_degree(), f.chart()).first;
    it->second.add(index, c);
  }
  return {parts.begin(), parts.end()};
}

std::optional<Superfunction> inverse(const Superfunction& f) {
  const Superfunction body = f.body();
  if (!body.is_constant() || body.is_zero()) return std::nullopt;
  const Rational c = body.constant_term();
  // f = c (1 + n), n nilpotent of order at most q + 1.
  const Superfunction n = (f - body) * (Rational(1) / c);
  Superfunction result(f.chart(), Rational(1));
  Superfunction term(f.chart(), Rational(1));
  for (std::size_t j = 1; j <= f.chart().odd_count(); ++j) {
    term = term * (-n);
    if (term.is_zero()) break;
    result += term;
  }
  return result * (Rational(1) / c);
}

}  // namespace superdop
