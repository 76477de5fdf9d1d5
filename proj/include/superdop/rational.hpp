#pragma once

#include <gmpxx.h>

#include <string>

namespace superdop {

using Rational = mpq_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace superdop
