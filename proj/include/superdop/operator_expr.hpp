#pragma once

#include <memory>

#include "superdop/diff_op.hpp"

namespace superdop {

/// Syntax tree over multiplication operators and coordinate partials,
/// closed under sum, rational scaling and composition. This is the input
/// form for normalization; it is immutable and cheap to copy.
class OperatorExpr {
 public:
  enum class Kind { Multiply, Partial, Sum, Scale, Compose };

  static OperatorExpr multiply(const Superfunction& f);
  static OperatorExpr partial(const Chart& chart, std::size_t k);
  static OperatorExpr sum(const OperatorExpr& a, const OperatorExpr& b);
  static OperatorExpr scale(const Rational& c, const OperatorExpr& a);
  /// a o b (b acts first).
  static OperatorExpr compose(const OperatorExpr& a, const OperatorExpr& b);
  /// Rebuilds a tree whose normal form is d.
  static OperatorExpr from_normal_form(const SuperDiffOp& d);

  Kind kind() const;
  const Chart& chart() const;
  const Superfunction& function() const;  // Multiply
  std::size_t coordinate() const;          // Partial
  const Rational& scalar() const;          // Scale
  const OperatorExpr& lhs() const;         // Sum, Scale, Compose
  const OperatorExpr& rhs() const;         // Sum, Compose

  /// Upper bound on the order read off the tree.
  int order_bound() const;
  std::size_t depth() const;

  Superfunction apply(const Superfunction& f) const;

 private:
  struct Node;
  explicit OperatorExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Normal form by recursive Leibniz rewriting.
SuperDiffOp normal_form_rewrite(const OperatorExpr& e);

/// Normal form by coefficient extraction on the test monomials m_{alpha beta}.
SuperDiffOp normal_form_extract(const OperatorExpr& e);

inline SuperDiffOp normal_form(const OperatorExpr& e) { return normal_form_rewrite(e); }

}  // namespace superdop
