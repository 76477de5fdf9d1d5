#pragma once

#include <string>

#include "superdop/automorphism.hpp"
#include "superdop/clifford.hpp"
#include "superdop/operator_expr.hpp"

namespace superdop {

// Canonical text forms. Every printer except the Fock matrix emits text
// the session grammar reads back to an equal object.

std::string format(const Rational& r);
std::string format(const Superfunction& f);
std::string format(const SuperVectorField& x);
/// Order-0 terms are written m(...), so an operator never reads back as a
/// function or a field.
std::string format(const SuperDiffOp& d);
std::string format(const OperatorExpr& e);
std::string format(const D1Element& e);
std::string format(const SuperOneForm& omega);
std::string format(const GeneralizedDivergence& gamma);
std::string format(const BerezinianSection& s);
std::string format(const ChartMorphism& phi);
std::string format(const D1Automorphism& phi);
std::string format(const FockMatrix& m);

/// "chart M = (x | xi1)"
std::string format_chart(const std::string& name, const Chart& chart);

/// x^2*xi1, or "" for the unit monomial.
std::string format_monomial(const Chart& chart, const MultiIndex& index);

}  // namespace superdop
