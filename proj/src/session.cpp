#include "superdop/session.hpp"

#include <cctype>

#include "superdop/format.hpp"

namespace superdop {

ParseError::ParseError(int line, int column, std::string message, std::set<std::string> expected)
    : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

const std::set<std::string> kReserved{"chart", "m", "d", "gdiv", "ber", "morphism", "d1auto"};

enum class Tok { Ident, Number, Plus, Minus, Star, Caret, LParen, RParen, Comma, Semicolon, Equals, Arrow, Bar, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Newline:
      return "end of line";
    case Tok::End:
      return "end of input";
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::string text, int col) { out.push_back({kind, std::move(text), line, col}); };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      push(Tok::Newline, "\\n", column);
      ++i;
      ++line;
      column = 1;
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++column;
      continue;
    }
    const int start = column;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      push(Tok::Ident, std::string(src.substr(i, j - i)), start);
      column += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j + 1 < src.size() && src[j] == '/' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      push(Tok::Number, std::string(src.substr(i, j - i)), start);
      column += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      push(Tok::Arrow, "->", start);
      i += 2;
      column += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case ';': kind = Tok::Semicolon; break;
      case '=': kind = Tok::Equals; break;
      case '|': kind = Tok::Bar; break;
      default:
        throw ParseError(line, start, std::string("unexpected character '") + c + "'");
    }
    push(kind, std::string(1, c), start);
    ++i;
    ++column;
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

Rational parse_rational(const Token& t) {
  Rational r(t.text);
  if (r.get_den() == 0) throw ParseError(t.line, t.column, "zero denominator in " + t.text);
  r.canonicalize();
  return r;
}

class Parser {
 public:
  Parser(std::string_view text, const Session& session) : tokens_(lex(text)), session_(session) {}

  bool at(Tok k) const { return tokens_[pos_].kind == k; }
  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    std::string list;
    for (const auto& e : expected) list += (list.empty() ? "" : ", ") + e;
    throw ParseError(t.line, t.column, "expected " + list + " but found " + describe(t), std::move(expected));
  }

  Token expect(Tok k, const std::string& name) {
    if (!at(k)) fail({name});
    return take();
  }

  void skip_newlines() {
    while (at(Tok::Newline)) take();
  }

  void finish_line() {
    if (at(Tok::Newline) || at(Tok::End)) return;
    fail({"'+'", "'-'", "'*'", "end of line"});
  }

  // statement := 'chart' IDENT '=' chart | IDENT '=' expr
  void statement(Session& target) {
    const Token head = expect(Tok::Ident, "identifier");
    if (head.text == "chart" && at(Tok::Ident)) {
      const Token name = take();
      expect(Tok::Equals, "'='");
      const Chart c = chart_spec();
      finish_line();
      target.declare_chart(name.text, c);
      return;
    }
    expect(Tok::Equals, "'='");
    Value v = expression();
    finish_line();
    target.bind(head.text, std::move(v));
  }

  Chart chart_spec() {
    const Token open = expect(Tok::LParen, "'('");
    std::vector<std::string> even;
    std::vector<std::string> odd;
    auto names = [&](std::vector<std::string>& into, Tok stop) {
      if (at(stop)) return;
      into.push_back(expect(Tok::Ident, "coordinate name").text);
      while (at(Tok::Comma)) {
        take();
        into.push_back(expect(Tok::Ident, "coordinate name").text);
      }
    };
    names(even, Tok::Bar);
    expect(Tok::Bar, "'|'");
    names(odd, Tok::RParen);
    expect(Tok::RParen, "')'");
    for (const auto& list : {even, odd}) {
      for (const auto& n : list) {
        if (kReserved.count(n) || n.rfind("d_", 0) == 0 || n.rfind("du_", 0) == 0) {
          throw ParseError(open.line, open.column, "'" + n + "' cannot name a coordinate");
        }
      }
    }
    try {
      return Chart(even, odd);
    } catch (const Error& e) {
      throw ParseError(open.line, open.column, e.what());
    }
  }

  // expr := term { ('+' | '-') term }
  Value expression() {
    Value v = term();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      const Token op = take();
      Value rhs = term();
      v = add(v, op.kind == Tok::Minus ? negate(rhs, op) : rhs, op);
    }
    return v;
  }

  // term := unary { '*' unary }
  Value term() {
    Value v = unary();
    while (at(Tok::Star)) {
      const Token op = take();
      v = multiply(v, unary(), op);
    }
    return v;
  }

  Value unary() {
    if (at(Tok::Minus)) {
      const Token op = take();
      return negate(unary(), op);
    }
    return power();
  }

  // power := primary [ '^' INT ], the base an even coordinate or its partial
  Value power() {
    if (at(Tok::Ident) && peek(1).kind == Tok::Caret) {
      const Token base = take();
      take();
      const Token exp = expect(Tok::Number, "positive integer");
      const Rational n = parse_rational(exp);
      if (n.get_den() != 1 || n <= 0 || n > 1000) throw ParseError(exp.line, exp.column, "exponent must be a positive integer");
      const unsigned e = static_cast<unsigned>(n.get_num().get_ui());
      const Chart& c = need_chart(base);
      if (auto k = c.index_of(base.text); k && !c.is_odd(*k)) {
        return superdop::power(Superfunction::coordinate(c, *k), e);
      }
      if (base.text.rfind("d_", 0) == 0) {
        if (auto k = c.index_of(base.text.substr(2)); k && !c.is_odd(*k)) {
          OperatorExpr out = OperatorExpr::partial(c, *k);
          for (unsigned i = 1; i < e; ++i) out = OperatorExpr::compose(OperatorExpr::partial(c, *k), out);
          return out;
        }
      }
      throw ParseError(base.line, base.column, "'^' applies only to even coordinates and their partials");
    }
    Value v = primary();
    if (at(Tok::Caret)) {
      const Token& t = peek();
      throw ParseError(t.line, t.column, "'^' applies only to even coordinates and their partials");
    }
    return v;
  }

  Value primary() {
    if (at(Tok::Number)) {
      const Token t = take();
      return Superfunction(need_chart(t), parse_rational(t));
    }
    if (at(Tok::LParen)) {
      take();
      Value v = expression();
      expect(Tok::RParen, "')'");
      return v;
    }
    if (!at(Tok::Ident)) fail({"number", "identifier", "'('", "'-'"});
    const Token t = take();
    if (at(Tok::LParen) && kReserved.count(t.text)) return call(t);
    return resolve(t);
  }

  Value call(const Token& name) {
    take();  // '('
    Value result = [&]() -> Value {
      if (name.text == "m") return OperatorExpr::multiply(function_arg(name));
      if (name.text == "d") return de_rham(function_arg(name));
      if (name.text == "ber") return BerezinianSection(function_arg(name));
      if (name.text == "gdiv") {
        const Rational a = constant_arg(name);
        expect(Tok::Comma, "','");
        SuperOneForm omega = form_arg(name);
        if (!omega.is_even()) throw ParityError("gdiv: omega must be even");
        return GeneralizedDivergence::unchecked(a, std::move(omega));
      }
      if (name.text == "morphism") return morphism_body(name);
      if (name.text == "d1auto") {
        const Value phi = expression();
        if (!std::holds_alternative<ChartMorphism>(phi)) type_error(name, "d1auto expects a morphism first");
        expect(Tok::Comma, "','");
        const Rational kappa = constant_arg(name);
        expect(Tok::Comma, "','");
        const Rational a = constant_arg(name);
        expect(Tok::Comma, "','");
        SuperOneForm omega = form_arg(name);
        if (kappa == 0) throw DomainError("d1auto: kappa must be nonzero");
        if (!omega.is_even()) throw ParityError("d1auto: omega must be even");
        return D1Automorphism::unchecked(std::get<ChartMorphism>(phi), kappa, a, std::move(omega));
      }
      type_error(name, "'" + name.text + "' is not callable");
    }();
    expect(Tok::RParen, "')'");
    return result;
  }

  Value morphism_body(const Token& name) {
    const Chart& c = need_chart(name);
    auto images = [&](Tok stop) {
      std::vector<Superfunction> out;
      std::vector<bool> seen(c.dimension(), false);
      for (std::size_t k = 0; k < c.dimension(); ++k) out.push_back(Superfunction::coordinate(c, k));
      if (at(stop)) return out;
      for (;;) {
        const Token coord = expect(Tok::Ident, "coordinate name");
        const auto k = c.index_of(coord.text);
        if (!k) throw BindingError("morphism: '" + coord.text + "' is not a coordinate");
        if (seen[*k]) throw BindingError("morphism: '" + coord.text + "' mapped twice");
        seen[*k] = true;
        expect(Tok::Arrow, "'->'");
        out[*k] = as_function(expression());
        if (!at(Tok::Comma)) break;
        take();
      }
      return out;
    };
    auto there = images(Tok::Semicolon);
    expect(Tok::Semicolon, "';'");
    auto back = images(Tok::RParen);
    return ChartMorphism(c, c, std::move(there), std::move(back));
  }

  Superfunction function_arg(const Token& name) {
    const Value v = expression();
    if (!std::holds_alternative<Superfunction>(v)) type_error(name, name.text + "(...) expects a function");
    return std::get<Superfunction>(v);
  }

  Rational constant_arg(const Token& name) {
    const Superfunction f = function_arg(name);
    if (!f.is_constant()) type_error(name, name.text + "(...) expects a rational constant");
    return f.constant_term();
  }

  SuperOneForm form_arg(const Token& name) {
    const Value v = expression();
    try {
      return as_form(v);
    } catch (const BindingError&) {
      type_error(name, name.text + "(...) expects a 1-form");
    }
  }

  const Chart& need_chart(const Token& at_token) const {
    if (!session_.chart()) {
      throw BindingError("line " + std::to_string(at_token.line) + ":" + std::to_string(at_token.column) +
                         ": no chart declared");
    }
    return *session_.chart();
  }

  Value resolve(const Token& t) const {
    if (const Value* bound = session_.lookup(t.text)) return *bound;
    if (session_.chart()) {
      const Chart& c = *session_.chart();
      if (auto k = c.index_of(t.text)) return Superfunction::coordinate(c, *k);
      if (t.text.rfind("d_", 0) == 0) {
        if (auto k = c.index_of(t.text.substr(2))) return OperatorExpr::partial(c, *k);
      }
      if (t.text.rfind("du_", 0) == 0) {
        if (auto k = c.index_of(t.text.substr(3))) return SuperOneForm::basis(c, *k);
      }
    }
    throw BindingError("line " + std::to_string(t.line) + ":" + std::to_string(t.column) + ": unknown identifier '" +
                       t.text + "'");
  }

  [[noreturn]] static void type_error(const Token& t, const std::string& what) {
    throw BindingError("line " + std::to_string(t.line) + ":" + std::to_string(t.column) + ": " + what);
  }

  static OperatorExpr to_expr(const Value& v) {
    if (const auto* f = std::get_if<Superfunction>(&v)) return OperatorExpr::multiply(*f);
    return std::get<OperatorExpr>(v);
  }

  static bool is_op(const Value& v) { return std::holds_alternative<OperatorExpr>(v); }
  static bool is_fn(const Value& v) { return std::holds_alternative<Superfunction>(v); }
  static bool is_form(const Value& v) { return std::holds_alternative<SuperOneForm>(v); }

  static Value add(const Value& a, const Value& b, const Token& op) {
    if (is_fn(a) && is_fn(b)) return std::get<Superfunction>(a) + std::get<Superfunction>(b);
    if ((is_op(a) || is_fn(a)) && (is_op(b) || is_fn(b))) return OperatorExpr::sum(to_expr(a), to_expr(b));
    if ((is_form(a) || is_fn(a)) && (is_form(b) || is_fn(b))) {
      try {
        return as_form(a) + as_form(b);
      } catch (const BindingError&) {
      }
    }
    type_error(op, "cannot add " + kind_name(a) + " and " + kind_name(b));
  }

  static Value negate(const Value& v, const Token& op) {
    if (is_fn(v)) return -std::get<Superfunction>(v);
    if (is_op(v)) return OperatorExpr::scale(-1, std::get<OperatorExpr>(v));
    if (is_form(v)) return -std::get<SuperOneForm>(v);
    type_error(op, "cannot negate a " + kind_name(v));
  }

  static Value multiply(const Value& a, const Value& b, const Token& op) {
    if (is_fn(a) && is_fn(b)) return std::get<Superfunction>(a) * std::get<Superfunction>(b);
    if (is_fn(a) && is_op(b)) {
      const auto& f = std::get<Superfunction>(a);
      if (f.is_constant()) return OperatorExpr::scale(f.constant_term(), std::get<OperatorExpr>(b));
      return OperatorExpr::compose(OperatorExpr::multiply(f), std::get<OperatorExpr>(b));
    }
    if (is_op(a) && (is_op(b) || is_fn(b))) return OperatorExpr::compose(std::get<OperatorExpr>(a), to_expr(b));
    if (is_fn(a) && is_form(b)) return left_mul(std::get<Superfunction>(a), std::get<SuperOneForm>(b));
    if (is_form(a) && is_fn(b)) return right_mul(std::get<SuperOneForm>(a), std::get<Superfunction>(b));
    type_error(op, "cannot multiply " + kind_name(a) + " by " + kind_name(b));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Session& session_;
};

}  // namespace

std::string kind_name(const Value& v) {
  static const char* names[] = {"function", "operator", "form", "gdiv", "berezinian", "morphism", "d1auto"};
  return names[v.index()];
}

std::string format_value(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        // zero operators and forms print in a form that parses back to their kind
        if constexpr (std::is_same_v<T, OperatorExpr>) {
          const SuperDiffOp d = normal_form(x);
          return d.is_zero() ? "m(0)" : format(d);
        } else if constexpr (std::is_same_v<T, SuperOneForm>) {
          return x.is_zero() && x.chart().dimension() ? "0*du_" + x.chart().name(0) : format(x);
        } else {
          return format(x);
        }
      },
      v);
}

bool same_value(const Value& a, const Value& b) {
  if (a.index() != b.index()) return false;
  if (const auto* e = std::get_if<OperatorExpr>(&a)) return normal_form(*e) == normal_form(std::get<OperatorExpr>(b));
  if (const auto* d = std::get_if<D1Automorphism>(&a)) {
    const auto& o = std::get<D1Automorphism>(b);
    return d->phi() == o.phi() && d->kappa() == o.kappa() && d->a() == o.a() && d->omega() == o.omega();
  }
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, OperatorExpr> || std::is_same_v<T, D1Automorphism>) {
          return false;
        } else {
          return x == std::get<T>(b);
        }
      },
      a);
}

void Session::declare_chart(const std::string& name, const Chart& chart) {
  if (chart_ && !(*chart_ == chart)) {
    throw ChartMismatch("chart " + chart.to_string() + " conflicts with declared chart " + chart_->to_string());
  }
  chart_ = chart;
  chart_name_ = name;
}

void Session::bind(const std::string& name, Value value) {
  if (kReserved.count(name)) throw BindingError("'" + name + "' is a reserved word");
  if (chart_ && (chart_->index_of(name) || name.rfind("d_", 0) == 0 || name.rfind("du_", 0) == 0)) {
    throw BindingError("'" + name + "' is taken by the chart");
  }
  if (bindings_.count(name)) throw BindingError("'" + name + "' is already bound");
  bindings_.emplace(name, std::move(value));
  order_.push_back(name);
}

const Value* Session::lookup(const std::string& name) const {
  const auto it = bindings_.find(name);
  return it == bindings_.end() ? nullptr : &it->second;
}

void load_declarations(Session& session, std::string_view text) {
  Parser parser(text, session);
  parser.skip_newlines();
  while (!parser.at(Tok::End)) {
    parser.statement(session);
    parser.skip_newlines();
  }
}

Value evaluate(const Session& session, std::string_view text) {
  Parser parser(text, session);
  Value v = parser.expression();
  if (!parser.at(Tok::End)) parser.fail({"'+'", "'-'", "'*'", "end of input"});
  return v;
}

Chart parse_chart(std::string_view text) {
  Session empty;
  Parser parser(text, empty);
  Chart c = parser.chart_spec();
  if (!parser.at(Tok::End)) parser.fail({"end of input"});
  return c;
}

Superfunction as_function(const Value& v) {
  if (const auto* f = std::get_if<Superfunction>(&v)) return *f;
  throw BindingError("expected a function, got a " + kind_name(v));
}

SuperDiffOp as_operator(const Value& v) {
  if (const auto* f = std::get_if<Superfunction>(&v)) return SuperDiffOp::multiplication(*f);
  if (const auto* e = std::get_if<OperatorExpr>(&v)) return normal_form(*e);
  throw BindingError("expected an operator, got a " + kind_name(v));
}

SuperVectorField as_field(const Value& v) {
  if (const auto* f = std::get_if<Superfunction>(&v); f && f->is_zero()) return SuperVectorField(f->chart());
  if (const auto* e = std::get_if<OperatorExpr>(&v)) {
    try {
      return SuperVectorField::from_operator(normal_form(*e));
    } catch (const DomainError& err) {
      throw BindingError(std::string("expected a vector field: ") + err.what());
    }
  }
  throw BindingError("expected a vector field, got a " + kind_name(v));
}

SuperOneForm as_form(const Value& v) {
  if (const auto* f = std::get_if<Superfunction>(&v); f && f->is_zero()) return SuperOneForm(f->chart());
  if (const auto* w = std::get_if<SuperOneForm>(&v)) return *w;
  throw BindingError("expected a 1-form, got a " + kind_name(v));
}

}  // namespace superdop
