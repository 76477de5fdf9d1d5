#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superdop/koszul.hpp"
#include "superdop/parity.hpp"

namespace superdop {

/// A coordinate chart of dimension p|q: p even coordinates followed by q
/// odd ones. Coordinates are addressed by a 0-based index k; the odd
/// coordinate with index k occupies odd slot k - p.
///
/// Charts are cheap to copy (shared immutable data) and compare by value.
class Chart {
 public:
  Chart(std::vector<std::string> even_names, std::vector<std::string> odd_names);

  /// Chart with generated names: x (or x1..xp) and xi1..xiq.
  static Chart standard(std::size_t p, std::size_t q);

  std::size_t even_count() const { return data_->p; }
  std::size_t odd_count() const { return data_->q; }
  std::size_t dimension() const { return data_->p + data_->q; }

  const std::string& name(std::size_t k) const;
  const std::vector<std::string>& names() const { return data_->names; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool is_odd(std::size_t k) const { return k >= data_->p; }
  Parity parity(std::size_t k) const { return is_odd(k) ? Parity::Odd : Parity::Even; }
  /// Odd slot of coordinate k; requires is_odd(k).
  unsigned odd_slot(std::size_t k) const { return static_cast<unsigned>(k - data_->p); }
  std::size_t odd_coordinate(unsigned slot) const { return data_->p + slot; }

  void check_index(std::size_t k) const;

  /// "(x, y | xi1, xi2)"
  std::string to_string() const;
  /// "p|q"
  std::string dimension_string() const;

  friend bool operator==(const Chart& a, const Chart& b);

 private:
  struct Data {
    std::size_t p = 0;
    std::size_t q = 0;
    std::vector<std::string> names;
  };
  std::shared_ptr<const Data> data_;
};

void require_same_chart(const Chart& a, const Chart& b, std::string_view context);

}  // namespace superdop
