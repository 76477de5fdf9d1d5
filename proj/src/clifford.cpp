#include "superdop/clifford.hpp"

#include <algorithm>

#include "superdop/errors.hpp"

namespace superdop {

namespace {

void check_q(unsigned q) {
  if (q > kMaxFockQ) throw IndexError("fock space: q = " + std::to_string(q) + " exceeds " + std::to_string(kMaxFockQ));
}

void check_pure_odd(const Chart& chart) {
  if (chart.even_count() != 0) throw DomainError("clifford: chart must have no even coordinates");
  check_q(static_cast<unsigned>(chart.odd_count()));
}

std::vector<unsigned> elements(OddMask m) {
  std::vector<unsigned> out;
  for (unsigned a = 0; m != 0; ++a, m >>= 1) {
    if (m & 1U) out.push_back(a);
  }
  return out;
}

std::size_t rank_of(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<OddMask> fock_basis(unsigned q) {
  check_q(q);
  std::vector<OddMask> out;
  for (OddMask m = 0; m < (OddMask{1} << q); ++m) out.push_back(m);
  std::sort(out.begin(), out.end(), [](OddMask a, OddMask b) {
    const unsigned da = odd_degree(a);
    const unsigned db = odd_degree(b);
    if (da != db) return da < db;
    return elements(a) < elements(b);
  });
  return out;
}

FockMatrix::FockMatrix(unsigned q) : q_(q), n_(std::size_t{1} << q), data_(n_ * n_) { check_q(q); }

FockMatrix FockMatrix::identity(unsigned q) {
  FockMatrix m(q);
  for (std::size_t i = 0; i < m.n_; ++i) m.at(i, i) = 1;
  return m;
}

bool FockMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r == 0; });
}

std::optional<Parity> FockMatrix::parity() const {
  const auto basis = fock_basis(q_);
  std::optional<Parity> seen;
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (at(r, c) == 0) continue;
      const Parity p = parity_of(odd_degree(basis[r]) + odd_degree(basis[c]));
      if (seen && *seen != p) return std::nullopt;
      seen = p;
    }
  }
  return seen.value_or(Parity::Even);
}

FockMatrix& FockMatrix::operator+=(const FockMatrix& other) {
  if (other.q_ != q_) throw ChartMismatch("fock matrices of different size");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

FockMatrix& FockMatrix::operator-=(const FockMatrix& other) {
  if (other.q_ != q_) throw ChartMismatch("fock matrices of different size");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

FockMatrix& FockMatrix::operator*=(const Rational& c) {
  for (auto& r : data_) r *= c;
  return *this;
}

FockMatrix operator*(const FockMatrix& a, const FockMatrix& b) {
  if (a.q_ != b.q_) throw ChartMismatch("fock matrices of different size");
  FockMatrix out(a.q_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  }
  return out;
}

namespace {

FockMatrix parity_part(const FockMatrix& m, Parity p) {
  const auto basis = fock_basis(m.q());
  FockMatrix out(m.q());
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) {
      if (parity_of(odd_degree(basis[r]) + odd_degree(basis[c])) == p) out.at(r, c) = m.at(r, c);
    }
  }
  return out;
}

}  // namespace

FockMatrix scommutator(const FockMatrix& a, const FockMatrix& b) {
  FockMatrix out(a.q());
  for (Parity pa : kParities) {
    const FockMatrix ap = parity_part(a, pa);
    for (Parity pb : kParities) {
      const FockMatrix bp = parity_part(b, pb);
      out += ap * bp;
      out -= Rational(koszul(pa, pb)) * (bp * ap);
    }
  }
  return out;
}

FockMatrix rep(const SuperDiffOp& d) {
  check_pure_odd(d.chart());
  const unsigned q = static_cast<unsigned>(d.chart().odd_count());
  const auto basis = fock_basis(q);
  std::vector<std::size_t> position(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) position[basis[i]] = i;
  FockMatrix m(q);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const Superfunction image = apply(d, Superfunction::monomial(d.chart(), MultiIndex({}, basis[c])));
    for (const auto& [index, r] : image.terms()) m.at(position[index.odd], c) = r;
  }
  return m;
}

std::size_t endomorphism_rank(unsigned q) {
  check_q(q);
  const Chart chart = Chart::standard(0, q);
  const auto basis = fock_basis(q);
  std::vector<std::vector<Rational>> rows;
  for (OddMask s : basis) {
    for (OddMask t : basis) {
      const FockMatrix m = rep(SuperDiffOp::word(Superfunction::monomial(chart, MultiIndex({}, s)), MultiIndex({}, t)));
      std::vector<Rational> row;
      for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m.at(r, c));
      }
      rows.push_back(std::move(row));
    }
  }
  return rank_of(std::move(rows));
}

bool spans_full_endomorphisms(unsigned q) {
  if (q == 0) throw DomainError("clifford span: q must be at least 1");
  const std::size_t n = std::size_t{1} << q;
  return endomorphism_rank(q) == n * n;
}

SuperDiffOp swap_automorphism(const SuperDiffOp& d) {
  const Chart& chart = d.chart();
  check_pure_odd(chart);
  SuperDiffOp out(chart);
  for (const auto& [word, coefficient] : d.terms()) {
    // d_xi^beta is d_top o ... o d_low; it becomes m_top o ... o m_low.
    SuperDiffOp tail = SuperDiffOp::identity(chart);
    for (unsigned a : elements(word.odd)) {
      tail = compose(SuperDiffOp::multiplication(Superfunction::coordinate(chart, chart.odd_coordinate(a))), tail);
    }
    for (const auto& [index, r] : coefficient.terms()) {
      // xi^{b1} ... xi^{bk}, increasing, becomes d_{b1} o ... o d_{bk}.
      SuperDiffOp head = SuperDiffOp::identity(chart);
      for (unsigned b : elements(index.odd)) head = compose(head, SuperDiffOp::partial(chart, chart.odd_coordinate(b)));
      out += r * compose(head, tail);
    }
  }
  return out;
}

}  // namespace superdop
