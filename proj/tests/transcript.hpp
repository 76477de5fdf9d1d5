#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "superdop/cli.hpp"

namespace golden {

/// One invocation of every command plus a few failure modes.
inline const std::vector<std::vector<std::string>> kTranscript{
    {"--chart", "(x | xi1, xi2)", "nf", "d_xi1 * m(xi1)"},
    {"--chart", "0|2", "order", "d_xi2*d_xi1"},
    {"--chart", "(x | xi1)", "bracket", "d_x", "m(x^2)"},
    {"--chart", "(x | xi1)", "split", "m(x) + xi1*d_x"},
    {"--chart", "(x | xi1)", "grade", "x*xi1*d_x + d_xi1"},
    {"--chart", "0|2", "decompose", "xi1*d_xi1"},
    {"--chart", "(x | xi1)", "div", "x^2*d_x + xi1*d_xi1"},
    {"--chart", "(x | xi1)", "div", "x^2*d_x + xi1*d_xi1", "gdiv(2, du_x)"},
    {"--chart", "1|1", "--trials", "30", "cocycle-check", "gdiv(2, d(x^3))"},
    {"--chart", "1|1", "--trials", "30", "cocycle-check", "gdiv(1, du_xi1*xi1)"},
    {"--chart", "1|1", "cocycle-classify", "G = gdiv(1, 0)", "G"},
    {"--chart", "1|1", "cocycle-classify", "x^2*xi1*0 + x^3"},
    {"--chart", "1|1", "coboundary", "gdiv(0, d(x^2 + 5))"},
    {"--chart", "1|1", "coboundary", "gdiv(1, 0)"},
    {"--chart", "(x | xi1)", "berezinian-div", "ber(2)", "x*d_x"},
    {"--chart", "(x | xi1)", "transform", "ber(1)", "morphism(x -> 2*x ; x -> 1/2*x)"},
    {"--chart", "(x | xi1)", "--trials", "20", "auto-check",
     "d1auto(morphism(x -> 2*x, xi1 -> 3*xi1 ; x -> 1/2*x, xi1 -> 1/3*xi1), 3, 1/2, du_x)"},
    {"--chart", "(x | xi1)", "--trials", "20", "auto-check", "d1auto(morphism( ; ), 1, 1, du_xi1*xi1)"},
    {"exceptional", "0|1"},
    {"--trials", "20", "exceptional", "1|1"},
    {"exceptional", "0|2"},
    {"--chart", "0|2", "exceptional", "0|2", "d_xi1"},
    {"--chart", "0|2", "clifford-rep", "m(xi1)"},
    {"clifford-span", "2"},
    {"--chart", "0|2", "swap", "m(xi1)"},
    {"--chart", "0|2", "swap", "xi1*d_xi2"},
    {"--json", "--chart", "(x | xi1)", "div", "x^2*d_x"},
    {"--chart", "(x | xi1)", "nf", "x^"},
};

inline std::string quote(const std::string& a) {
  if (a.find_first_of(" |*()>;$#") == std::string::npos && !a.empty()) return a;
  return "'" + a + "'";
}

inline std::string transcript() {
  std::string out;
  for (const auto& args : kTranscript) {
    out += "$ superdop";
    for (const auto& a : args) out += " " + quote(a);
    out += "\n";
    std::ostringstream o;
    std::ostringstream e;
    const int code = superdop::run_cli(args, o, e);
    out += o.str() + e.str() + "[exit " + std::to_string(code) + "]\n\n";
  }
  return out;
}

}  // namespace golden
