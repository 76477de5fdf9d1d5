#include "superdop/chart.hpp"

#include <algorithm>
#include <set>

#include "superdop/errors.hpp"

namespace superdop {

Chart::Chart(std::vector<std::string> even_names, std::vector<std::string> odd_names) {
  if (odd_names.size() > kMaxOdd) {
    throw IndexError("at most " + std::to_string(kMaxOdd) + " odd coordinates are supported");
  }
  auto data = std::make_shared<Data>();
  data->p = even_names.size();
  data->q = odd_names.size();
  data->names = std::move(even_names);
  data->names.insert(data->names.end(), std::make_move_iterator(odd_names.begin()),
                     std::make_move_iterator(odd_names.end()));
  std::set<std::string> seen;
  for (const auto& n : data->names) {
    if (n.empty()) throw Error("empty coordinate name");
    if (!seen.insert(n).second) throw Error("duplicate coordinate name '" + n + "'");
  }
  data_ = std::move(data);
}

Chart Chart::standard(std::size_t p, std::size_t q) {
  std::vector<std::string> even;
  std::vector<std::string> odd;
  if (p == 1) {
    even.emplace_back("x");
  } else {
    for (std::size_t i = 1; i <= p; ++i) even.push_back("x" + std::to_string(i));
  }
  for (std::size_t a = 1; a <= q; ++a) odd.push_back("xi" + std::to_string(a));
  return Chart(std::move(even), std::move(odd));
}

const std::string& Chart::name(std::size_t k) const {
  check_index(k);
  return data_->names[k];
}

std::optional<std::size_t> Chart::index_of(std::string_view name) const {
  const auto& names = data_->names;
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

void Chart::check_index(std::size_t k) const {
  if (k >= dimension()) {
    throw IndexError("coordinate index " + std::to_string(k) + " out of range for chart " +
                     dimension_string());
  }
}

std::string Chart::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < data_->p; ++k) {
    if (k) out += ", ";
    out += data_->names[k];
  }
  out += data_->p ? " |" : "|";
  for (std::size_t k = data_->p; k < dimension(); ++k) {
    out += (k == data_->p) ? " " : ", ";
    out += data_->names[k];
  }
  out += ")";
  return out;
}

std::string Chart::dimension_string() const {
  return std::to_string(data_->p) + "|" + std::to_string(data_->q);
}

bool operator==(const Chart& a, const Chart& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->p == b.data_->p && a.data_->names == b.data_->names;
}

void require_same_chart(const Chart& a, const Chart& b, std::string_view context) {
  if (!(a == b)) {
    throw ChartMismatch(std::string(context) + ": chart mismatch " + a.to_string() + " vs " +
                        b.to_string());
  }
}

}  // namespace superdop
