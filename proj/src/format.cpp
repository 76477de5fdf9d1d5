#include "superdop/format.hpp"

#include <sstream>
#include <vector>

namespace superdop {

namespace {

struct Term {
  Rational c;
  std::vector<std::string> factors;
};

std::string join_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = t.c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(t.c);
    std::string body;
    for (const auto& f : t.factors) {
      if (!body.empty()) body += "*";
      body += f;
    }
    if (body.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += body;
    } else {
      out += magnitude.get_str() + "*" + body;
    }
  }
  return out;
}

std::vector<std::string> monomial_factors(const Chart& chart, const MultiIndex& index) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < index.powers.size(); ++i) {
    if (index.powers[i] == 0) continue;
    out.push_back(chart.name(i) + (index.powers[i] > 1 ? "^" + std::to_string(index.powers[i]) : ""));
  }
  for (unsigned a = 0; a < chart.odd_count(); ++a) {
    if (index.odd & odd_bit(a)) out.push_back(chart.name(chart.odd_coordinate(a)));
  }
  return out;
}

std::vector<std::string> word_factors(const Chart& chart, const MultiIndex& word) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < word.powers.size(); ++i) {
    if (word.powers[i] == 0) continue;
    out.push_back("d_" + chart.name(i) + (word.powers[i] > 1 ? "^" + std::to_string(word.powers[i]) : ""));
  }
  for (unsigned a = static_cast<unsigned>(chart.odd_count()); a-- > 0;) {
    if (word.odd & odd_bit(a)) out.push_back("d_" + chart.name(chart.odd_coordinate(a)));
  }
  return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string list(const std::vector<Superfunction>& images, const Chart& named) {
  std::string out;
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (k) out += ", ";
    out += named.name(k) + " -> " + format(images[k]);
  }
  return out;
}

}  // namespace

std::string format(const Rational& r) { return r.get_str(); }

std::string format_monomial(const Chart& chart, const MultiIndex& index) {
  std::string out;
  for (const auto& f : monomial_factors(chart, index)) out += (out.empty() ? "" : "*") + f;
  return out;
}

std::string format(const Superfunction& f) {
  std::vector<Term> terms;
  for (const auto& [index, c] : f.terms()) terms.push_back({c, monomial_factors(f.chart(), index)});
  return join_terms(terms);
}

std::string format(const SuperVectorField& x) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < x.chart().dimension(); ++k) {
    for (const auto& [index, c] : x.coefficient(k).terms()) {
      terms.push_back({c, concat(monomial_factors(x.chart(), index), {"d_" + x.chart().name(k)})});
    }
  }
  return join_terms(terms);
}

std::string format(const SuperDiffOp& d) {
  std::vector<Term> terms;
  for (const auto& [word, coefficient] : d.terms()) {
    for (const auto& [index, c] : coefficient.terms()) {
      if (word.is_unit()) {
        const std::string m = format_monomial(d.chart(), index);
        terms.push_back({c, {"m(" + (m.empty() ? std::string("1") : m) + ")"}});
      } else {
        terms.push_back({c, concat(monomial_factors(d.chart(), index), word_factors(d.chart(), word))});
      }
    }
  }
  return join_terms(terms);
}

std::string format(const OperatorExpr& e) {
  switch (e.kind()) {
    case OperatorExpr::Kind::Multiply:
      return "m(" + format(e.function()) + ")";
    case OperatorExpr::Kind::Partial:
      return "d_" + e.chart().name(e.coordinate());
    case OperatorExpr::Kind::Sum:
      return "(" + format(e.lhs()) + " + " + format(e.rhs()) + ")";
    case OperatorExpr::Kind::Scale:
      return "(" + format(e.scalar()) + ")*" + format(e.lhs());
    case OperatorExpr::Kind::Compose:
      return "(" + format(e.lhs()) + ")*(" + format(e.rhs()) + ")";
  }
  return {};
}

std::string format(const D1Element& e) { return format(e.to_operator()); }

std::string format(const SuperOneForm& omega) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < omega.chart().dimension(); ++k) {
    for (const auto& [index, c] : omega.component(k).terms()) {
      terms.push_back({c, concat({"du_" + omega.chart().name(k)}, monomial_factors(omega.chart(), index))});
    }
  }
  return join_terms(terms);
}

std::string format(const GeneralizedDivergence& gamma) {
  return "gdiv(" + format(gamma.a()) + ", " + format(gamma.omega()) + ")";
}

std::string format(const BerezinianSection& s) { return "ber(" + format(s.rho()) + ")"; }

std::string format(const ChartMorphism& phi) {
  return "morphism(" + list(phi.images(), phi.source()) + " ; " + list(phi.inverse_images(), phi.target()) + ")";
}

std::string format(const D1Automorphism& phi) {
  return "d1auto(" + format(phi.phi()) + ", " + format(phi.kappa()) + ", " + format(phi.a()) + ", " +
         format(phi.omega()) + ")";
}

std::string format(const FockMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < m.size(); ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.size(); ++c) out << (c ? ", " : "") << m.at(r, c).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

std::string format_chart(const std::string& name, const Chart& chart) { return "chart " + name + " = " + chart.to_string(); }

}  // namespace superdop
