#include "superdop/diff_op.hpp"

#include <algorithm>
#include <bit>

#include "superdop/errors.hpp"

namespace superdop {
namespace {

struct WordProduct {
  MultiIndex word;
  int sign = 0;
};

// d_k o d^word, reordered into normal form. The odd block is kept in
// decreasing slot order, so d_{xi^a} has to travel past every slot above a.
WordProduct compose_partial_word(const Chart& chart, std::size_t k, const MultiIndex& word) {
  WordProduct out{word, 1};
  if (!chart.is_odd(k)) {
    out.word.powers[k] += 1;
    return out;
  }
  const OddMask bit = odd_bit(chart.odd_slot(k));
  if ((word.odd & bit) != 0) {
    out.sign = 0;
    return out;
  }
  out.word.odd |= bit;
  out.sign = (transposition_count(word.odd, bit) & 1U) ? -1 : 1;
  return out;
}

}  // namespace

SuperDiffOp SuperDiffOp::identity(const Chart& chart) {
  return multiplication(Superfunction(chart, Rational(1)));
}

SuperDiffOp SuperDiffOp::multiplication(const Superfunction& f) {
  SuperDiffOp d(f.chart());
  d.add(MultiIndex(f.chart().even_count()), f);
  return d;
}

SuperDiffOp SuperDiffOp::partial(const Chart& chart, std::size_t k) {
  chart.check_index(k);
  MultiIndex w(chart.even_count());
  if (chart.is_odd(k)) {
    w.odd = odd_bit(chart.odd_slot(k));
  } else {
    w.powers[k] = 1;
  }
  SuperDiffOp d(chart);
  d.add(w, Superfunction(chart, Rational(1)));
  return d;
}

SuperDiffOp SuperDiffOp::word(const Superfunction& coefficient, const MultiIndex& w) {
  SuperDiffOp d(coefficient.chart());
  d.add(w, coefficient);
  return d;
}

int SuperDiffOp::order() const {
  int order = -1;
  for (const auto& [w, c] : terms_) order = std::max(order, static_cast<int>(w.total_degree()));
  return order;
}

std::optional<Parity> SuperDiffOp::parity() const {
  std::optional<Parity> result;
  for (const auto& [w, c] : terms_) {
    const auto cp = c.parity();
    if (!cp) return std::nullopt;
    const Parity p = *cp + w.parity();
    if (result && *result != p) return std::nullopt;
    result = p;
  }
  return result.value_or(Parity::Even);
}

SuperDiffOp SuperDiffOp::part(Parity p) const {
  SuperDiffOp out(chart_);
  for (const auto& [w, c] : terms_) out.add(w, c.part(p + w.parity()));
  return out;
}

Superfunction SuperDiffOp::coefficient(const MultiIndex& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Superfunction(chart_) : it->second;
}

void SuperDiffOp::add(const MultiIndex& w, const Superfunction& coefficient) {
  require_same_chart(chart_, coefficient.chart(), "operator coefficient");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperDiffOp& SuperDiffOp::operator+=(const SuperDiffOp& other) {
  require_same_chart(chart_, other.chart_, "operator sum");
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

SuperDiffOp& SuperDiffOp::operator-=(const SuperDiffOp& other) {
  require_same_chart(chart_, other.chart_, "operator difference");
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

SuperDiffOp& SuperDiffOp::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coef] : terms_) coef *= c;
  return *this;
}

Superfunction apply_word(const MultiIndex& word, const Superfunction& f) {
  const Chart& chart = f.chart();
  Superfunction out = f;
  for (OddMask rest = word.odd; rest != 0 && !out.is_zero(); rest &= rest - 1) {
    const unsigned slot = static_cast<unsigned>(std::countr_zero(rest));
    out = partial(out, chart.odd_coordinate(slot));
  }
  for (std::size_t i = 0; i < word.powers.size(); ++i) {
    for (unsigned e = 0; e < word.powers[i] && !out.is_zero(); ++e) out = partial(out, i);
  }
  return out;
}

Superfunction apply(const SuperDiffOp& d, const Superfunction& f) {
  require_same_chart(d.chart(), f.chart(), "operator application");
  Superfunction out(f.chart());
  for (const auto& [w, c] : d.terms()) {
    const Superfunction inner = apply_word(w, f);
    if (!inner.is_zero()) out += c * inner;
  }
  return out;
}

SuperDiffOp left_partial(std::size_t k, const SuperDiffOp& d) {
  const Chart& chart = d.chart();
  chart.check_index(k);
  const Parity pk = chart.parity(k);
  SuperDiffOp out(chart);
  for (const auto& [w, c] : d.terms()) {
    out.add(w, partial(c, k));
    const WordProduct moved = compose_partial_word(chart, k, w);
    if (moved.sign == 0) continue;
    for (Parity p : kParities) {
      Superfunction cp = c.part(p);
      if (cp.is_zero()) continue;
      const int sign = moved.sign * koszul(pk, p);
      out.add(moved.word, sign < 0 ? -cp : cp);
    }
  }
  return out;
}

SuperDiffOp left_multiply(const Superfunction& f, const SuperDiffOp& d) {
  require_same_chart(f.chart(), d.chart(), "left multiplication");
  SuperDiffOp out(d.chart());
  if (f.is_zero()) return out;
  for (const auto& [w, c] : d.terms()) out.add(w, f * c);
  return out;
}

SuperDiffOp compose(const SuperDiffOp& d, const SuperDiffOp& e) {
  require_same_chart(d.chart(), e.chart(), "operator composition");
  const Chart& chart = d.chart();
  SuperDiffOp out(chart);
  for (const auto& [w, a] : d.terms()) {
    SuperDiffOp inner = e;
    for (OddMask rest = w.odd; rest != 0 && !inner.is_zero(); rest &= rest - 1) {
      const unsigned slot = static_cast<unsigned>(std::countr_zero(rest));
      inner = left_partial(chart.odd_coordinate(slot), inner);
    }
    for (std::size_t i = 0; i < w.powers.size(); ++i) {
      for (unsigned n = 0; n < w.powers[i] && !inner.is_zero(); ++n) inner = left_partial(i, inner);
    }
    out += left_multiply(a, inner);
  }
  return out;
}

SuperDiffOp scommutator(const SuperDiffOp& d, const SuperDiffOp& e) {
  require_same_chart(d.chart(), e.chart(), "supercommutator");
  SuperDiffOp out(d.chart());
  for (Parity pd : kParities) {
    const SuperDiffOp dp = d.part(pd);
    if (dp.is_zero()) continue;
    for (Parity pe : kParities) {
      const SuperDiffOp ep = e.part(pe);
      if (ep.is_zero()) continue;
      out += compose(dp, ep);
      SuperDiffOp back = compose(ep, dp);
      if (koszul(pd, pe) > 0) {
        out -= back;
      } else {
        out += back;
      }
    }
  }
  return out;
}

int order_by_commutators(const SuperDiffOp& d) {
  const Chart& chart = d.chart();
  std::vector<SuperDiffOp> coordinates;
  for (std::size_t k = 0; k < chart.dimension(); ++k) {
    coordinates.push_back(SuperDiffOp::multiplication(Superfunction::coordinate(chart, k)));
  }
  std::vector<SuperDiffOp> level;
  if (!d.is_zero()) level.push_back(d);
  int k = -1;
  while (!level.empty()) {
    std::vector<SuperDiffOp> next;
    for (const auto& t : level) {
      for (const auto& u : coordinates) {
        SuperDiffOp c = scommutator(t, u);
        if (!c.is_zero() && std::find(next.begin(), next.end(), c) == next.end()) {
          next.push_back(std::move(c));
        }
      }
    }
    level = std::move(next);
    ++k;
  }
  return k;
}

Superfunction test_monomial(const Chart& chart, const MultiIndex& index) {
  Rational factorial(1);
  for (unsigned e : index.powers) {
    for (unsigned j = 2; j <= e; ++j) factorial *= j;
  }
  return Superfunction::monomial(chart, index, Rational(1) / factorial);
}

std::vector<MultiIndex> multi_indices_of_degree(const Chart& chart, unsigned degree) {
  const std::size_t p = chart.even_count();
  const std::size_t q = chart.odd_count();
  std::vector<MultiIndex> out;
  const OddMask subsets = OddMask{1} << q;
  for (OddMask beta = 0; beta < subsets; ++beta) {
    const unsigned ob = odd_degree(beta);
    if (ob > degree) continue;
    const unsigned rest = degree - ob;
    if (p == 0) {
      if (rest == 0) out.emplace_back(std::vector<unsigned>{}, beta);
      continue;
    }
    // Compositions of `rest` into p parts.
    std::vector<unsigned> alpha(p, 0U);
    auto emit = [&](auto&& self, std::size_t i, unsigned left) -> void {
      if (i + 1 == p) {
        alpha[i] = left;
        out.emplace_back(alpha, beta);
        return;
      }
      for (unsigned e = 0; e <= left; ++e) {
        alpha[i] = left - e;
        self(self, i + 1, e);
      }
    };
    emit(emit, 0, rest);
  }
  return out;
}

SuperDiffOp extract_normal_form(const Chart& chart, int order_bound,
                                const std::function<Superfunction(const Superfunction&)>& action) {
  SuperDiffOp out(chart);
  for (int i = 0; i <= order_bound; ++i) {
    for (const MultiIndex& index : multi_indices_of_degree(chart, static_cast<unsigned>(i))) {
      const Superfunction m = test_monomial(chart, index);
      Superfunction coefficient = action(m);
      require_same_chart(coefficient.chart(), chart, "extracted coefficient");
      coefficient -= apply(out, m);
      out.add(index, coefficient);
    }
  }
  return out;
}

}  // namespace superdop
