#pragma once

#include <cstdint>
#include <string_view>

namespace superdop {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr bool is_odd(Parity p) { return p == Parity::Odd; }

constexpr Parity parity_of(unsigned n) { return (n & 1U) ? Parity::Odd : Parity::Even; }

/// Koszul sign (-1)^{|a||b|}.
constexpr int koszul(Parity a, Parity b) { return (is_odd(a) && is_odd(b)) ? -1 : 1; }

constexpr std::string_view to_string(Parity p) { return is_odd(p) ? "odd" : "even"; }

inline constexpr Parity kParities[] = {Parity::Even, Parity::Odd};

}  // namespace superdop
