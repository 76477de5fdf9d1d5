#pragma once

#include <functional>
#include <map>
#include <optional>

#include "superdop/superfunction.hpp"

namespace superdop {

/// Superdifferential operator in normal form
///
///   D = sum_{alpha, beta} D_{alpha beta}(x, xi) d_x^alpha d_xi^beta,
///
/// coefficients on the left, the odd block composed in decreasing slot
/// order d_{xi^q} ... d_{xi^1} restricted to beta. The derivative word is
/// stored as a MultiIndex; zero coefficients are never stored.
class SuperDiffOp {
 public:
  using Terms = std::map<MultiIndex, Superfunction, MultiIndexLess>;

  explicit SuperDiffOp(Chart chart) : chart_(std::move(chart)) {}

  static SuperDiffOp identity(const Chart& chart);
  static SuperDiffOp multiplication(const Superfunction& f);
  static SuperDiffOp partial(const Chart& chart, std::size_t k);
  static SuperDiffOp word(const Superfunction& coefficient, const MultiIndex& word);

  const Chart& chart() const { return chart_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// max |alpha| + |beta| over stored terms; -1 for the zero operator.
  int order() const;

  /// Parity if homogeneous (zero counts as even).
  std::optional<Parity> parity() const;
  SuperDiffOp part(Parity p) const;

  Superfunction coefficient(const MultiIndex& word) const;
  void add(const MultiIndex& word, const Superfunction& coefficient);

  SuperDiffOp& operator+=(const SuperDiffOp& other);
  SuperDiffOp& operator-=(const SuperDiffOp& other);
  SuperDiffOp& operator*=(const Rational& c);

  friend SuperDiffOp operator+(SuperDiffOp a, const SuperDiffOp& b) { return a += b; }
  friend SuperDiffOp operator-(SuperDiffOp a, const SuperDiffOp& b) { return a -= b; }
  friend SuperDiffOp operator-(SuperDiffOp a) { return a *= Rational(-1); }
  friend SuperDiffOp operator*(const Rational& c, SuperDiffOp a) { return a *= c; }
  friend bool operator==(const SuperDiffOp& a, const SuperDiffOp& b) {
    return a.chart_ == b.chart_ && a.terms_ == b.terms_;
  }

 private:
  Chart chart_;
  Terms terms_;
};

/// Parity of the word d_x^alpha d_xi^beta.
inline Parity word_parity(const MultiIndex& word) { return word.parity(); }

/// Apply the derivative word to f: the odd block first (lowest slot
/// innermost), then the even block.
Superfunction apply_word(const MultiIndex& word, const Superfunction& f);

Superfunction apply(const SuperDiffOp& d, const Superfunction& f);

/// d_k o D, rewritten into normal form with the Leibniz rule.
SuperDiffOp left_partial(std::size_t k, const SuperDiffOp& d);

/// m_f o D.
SuperDiffOp left_multiply(const Superfunction& f, const SuperDiffOp& d);

/// D o E in normal form by commuting partials past multiplications.
SuperDiffOp compose(const SuperDiffOp& d, const SuperDiffOp& e);

/// [D, E] = D E - (-1)^{|D||E|} E D, extended bilinearly over parity parts.
SuperDiffOp scommutator(const SuperDiffOp& d, const SuperDiffOp& e);

/// Least k such that every (k+1)-fold iterated commutator of D with
/// multiplications by coordinates vanishes; -1 for D = 0.
int order_by_commutators(const SuperDiffOp& d);

/// The test monomial m_{alpha beta} = x^alpha xi^beta / alpha!.
Superfunction test_monomial(const Chart& chart, const MultiIndex& index);

/// All multi-indices on the chart with |alpha| + |beta| == degree.
std::vector<MultiIndex> multi_indices_of_degree(const Chart& chart, unsigned degree);

/// Coefficients of an operator of order <= order_bound known only through
/// its action, via D_{alpha beta} = D m_{alpha beta} - sum_{j<i} D^j m_{alpha beta}.
SuperDiffOp extract_normal_form(const Chart& chart, int order_bound,
                                const std::function<Superfunction(const Superfunction&)>& action);

}  // namespace superdop
