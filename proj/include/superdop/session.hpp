#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "superdop/automorphism.hpp"
#include "superdop/errors.hpp"
#include "superdop/operator_expr.hpp"

namespace superdop {

/// Malformed input text; carries the position and the tokens that would
/// have been accepted there.
class ParseError : public Error {
 public:
  ParseError(int line, int column, std::string message, std::set<std::string> expected = {});
  int line() const { return line_; }
  int column() const { return column_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::set<std::string> expected_;
};

/// Unknown identifier, duplicate binding, or an operand of the wrong kind.
class BindingError : public Error {
 public:
  using Error::Error;
};

using Value = std::variant<Superfunction, OperatorExpr, SuperOneForm, GeneralizedDivergence, BerezinianSection,
                           ChartMorphism, D1Automorphism>;

/// "function", "operator", "form", "gdiv", "berezinian", "morphism", "d1auto".
std::string kind_name(const Value& v);

/// Canonical text of a value; operators print their normal form.
std::string format_value(const Value& v);

/// Semantic equality: operators compare by normal form.
bool same_value(const Value& a, const Value& b);

/// A declared chart plus named bindings.
class Session {
 public:
  const std::optional<Chart>& chart() const { return chart_; }
  const std::string& chart_name() const { return chart_name_; }
  /// Throws ChartMismatch when a different chart is already declared.
  void declare_chart(const std::string& name, const Chart& chart);

  /// Throws BindingError on duplicates and on names taken by coordinates or
  /// built-in words.
  void bind(const std::string& name, Value value);
  const Value* lookup(const std::string& name) const;
  const std::vector<std::string>& names() const { return order_; }

 private:
  std::optional<Chart> chart_;
  std::string chart_name_;
  std::map<std::string, Value> bindings_;
  std::vector<std::string> order_;
};

/// Runs newline-separated declarations `chart M = (x | xi1)` and
/// `name = expr` against the session.
void load_declarations(Session& session, std::string_view text);

/// Evaluates one expression in the session.
Value evaluate(const Session& session, std::string_view text);

/// "(x | xi1, xi2)"
Chart parse_chart(std::string_view text);

Superfunction as_function(const Value& v);
SuperDiffOp as_operator(const Value& v);
SuperVectorField as_field(const Value& v);
SuperOneForm as_form(const Value& v);

}  // namespace superdop
