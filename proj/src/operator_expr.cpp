#include "superdop/operator_expr.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "superdop/errors.hpp"

namespace superdop {

struct OperatorExpr::Node {
  Kind kind;
  Chart chart;
  std::optional<Superfunction> function;
  std::size_t coordinate = 0;
  Rational scalar;
  std::optional<OperatorExpr> lhs;
  std::optional<OperatorExpr> rhs;
};

OperatorExpr OperatorExpr::multiply(const Superfunction& f) {
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::Multiply, f.chart(), f, 0, 0, {}, {}}));
}

OperatorExpr OperatorExpr::partial(const Chart& chart, std::size_t k) {
  chart.check_index(k);
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::Partial, chart, {}, k, 0, {}, {}}));
}

OperatorExpr OperatorExpr::sum(const OperatorExpr& a, const OperatorExpr& b) {
  require_same_chart(a.chart(), b.chart(), "operator expression sum");
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::Sum, a.chart(), {}, 0, 0, a, b}));
}

OperatorExpr OperatorExpr::scale(const Rational& c, const OperatorExpr& a) {
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::Scale, a.chart(), {}, 0, c, a, {}}));
}

OperatorExpr OperatorExpr::compose(const OperatorExpr& a, const OperatorExpr& b) {
  require_same_chart(a.chart(), b.chart(), "operator expression composition");
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::Compose, a.chart(), {}, 0, 0, a, b}));
}

OperatorExpr OperatorExpr::from_normal_form(const SuperDiffOp& d) {
  const Chart& chart = d.chart();
  std::optional<OperatorExpr> total;
  for (const auto& [w, c] : d.terms()) {
    OperatorExpr term = multiply(c);
    for (std::size_t i = 0; i < w.powers.size(); ++i) {
      for (unsigned n = 0; n < w.powers[i]; ++n) term = compose(term, partial(chart, i));
    }
    // Decreasing slot order: the highest slot is composed first.
    for (int slot = static_cast<int>(chart.odd_count()) - 1; slot >= 0; --slot) {
      if (w.odd & odd_bit(static_cast<unsigned>(slot))) {
        term = compose(term, partial(chart, chart.odd_coordinate(static_cast<unsigned>(slot))));
      }
    }
    total = total ? sum(*total, term) : term;
  }
  return total ? *total : multiply(Superfunction(chart));
}

OperatorExpr::Kind OperatorExpr::kind() const { return node_->kind; }
const Chart& OperatorExpr::chart() const { return node_->chart; }
const Superfunction& OperatorExpr::function() const { return node_->function.value(); }
std::size_t OperatorExpr::coordinate() const { return node_->coordinate; }
const Rational& OperatorExpr::scalar() const { return node_->scalar; }
const OperatorExpr& OperatorExpr::lhs() const { return node_->lhs.value(); }
const OperatorExpr& OperatorExpr::rhs() const { return node_->rhs.value(); }

int OperatorExpr::order_bound() const {
  switch (kind()) {
    case Kind::Multiply:
      return 0;
    case Kind::Partial:
      return 1;
    case Kind::Sum:
      return std::max(lhs().order_bound(), rhs().order_bound());
    case Kind::Scale:
      return lhs().order_bound();
    case Kind::Compose:
      return lhs().order_bound() + rhs().order_bound();
  }
  return 0;
}

std::size_t OperatorExpr::depth() const {
  switch (kind()) {
    case Kind::Multiply:
    case Kind::Partial:
      return 1;
    case Kind::Scale:
      return 1 + lhs().depth();
    case Kind::Sum:
    case Kind::Compose:
      return 1 + std::max(lhs().depth(), rhs().depth());
  }
  return 1;
}

Superfunction OperatorExpr::apply(const Superfunction& f) const {
  require_same_chart(chart(), f.chart(), "operator expression application");
  switch (kind()) {
    case Kind::Multiply:
      return function() * f;
    case Kind::Partial:
      return superdop::partial(f, coordinate());
    case Kind::Sum:
      return lhs().apply(f) + rhs().apply(f);
    case Kind::Scale:
      return scalar() * lhs().apply(f);
    case Kind::Compose:
      return lhs().apply(rhs().apply(f));
  }
  return Superfunction(chart());
}

SuperDiffOp normal_form_rewrite(const OperatorExpr& e) {
  using Kind = OperatorExpr::Kind;
  switch (e.kind()) {
    case Kind::Multiply:
      return SuperDiffOp::multiplication(e.function());
    case Kind::Partial:
      return SuperDiffOp::partial(e.chart(), e.coordinate());
    case Kind::Sum:
      return normal_form_rewrite(e.lhs()) + normal_form_rewrite(e.rhs());
    case Kind::Scale:
      return e.scalar() * normal_form_rewrite(e.lhs());
    case Kind::Compose: {
      // Partials on the left act directly through the Leibniz rule.
      const OperatorExpr& left = e.lhs();
      if (left.kind() == Kind::Partial) return left_partial(left.coordinate(), normal_form_rewrite(e.rhs()));
      if (left.kind() == Kind::Multiply) return left_multiply(left.function(), normal_form_rewrite(e.rhs()));
      return compose(normal_form_rewrite(left), normal_form_rewrite(e.rhs()));
    }
  }
  return SuperDiffOp(e.chart());
}

SuperDiffOp normal_form_extract(const OperatorExpr& e) {
  return extract_normal_form(e.chart(), e.order_bound(),
                             [&e](const Superfunction& f) { return e.apply(f); });
}

}  // namespace superdop
