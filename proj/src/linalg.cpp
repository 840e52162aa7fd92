#include "flagcoh/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace flagcoh {

// ---------------------------------------------------------------------------
// PrimeFieldMatrix

PrimeFieldMatrix::PrimeFieldMatrix(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

PrimeFieldMatrix PrimeFieldMatrix::from_rows(Prime p,
                                             const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  PrimeFieldMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      m.set(r, c, rows[r][c]);
  }
  return m;
}

PrimeFieldMatrix PrimeFieldMatrix::identity(Prime p, std::size_t size) {
  PrimeFieldMatrix m(p, size, size);
  for (std::size_t i = 0; i < size; ++i)
    m.set(i, i, 1);
  return m;
}

PrimeFieldMatrix PrimeFieldMatrix::transpose() const {
  PrimeFieldMatrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t.data_[c * rows_ + r] = at(r, c);
  return t;
}

PrimeFieldMatrix PrimeFieldMatrix::stacked(const PrimeFieldMatrix& below) const {
  if (below.cols_ != cols_ || !(below.p_ == p_))
    throw std::invalid_argument("stacked: incompatible matrices");
  PrimeFieldMatrix s(p_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), s.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            s.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return s;
}

// ---------------------------------------------------------------------------
// SparseModMatrix

SparseModMatrix::SparseModMatrix(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), columns_(cols) {}

std::size_t SparseModMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& col : columns_)
    total += col.size();
  return total;
}

void SparseModMatrix::set_column(std::size_t c, std::vector<SparseEntry> entries) {
  std::erase_if(entries, [](const SparseEntry& e) { return e.value == 0; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].index >= rows_ || (i > 0 && entries[i - 1].index >= entries[i].index))
      throw std::invalid_argument("sparse column entries must have increasing in-range rows");
    if (entries[i].value >= p_.value())
      throw std::invalid_argument("sparse entry not reduced");
  }
  columns_.at(c) = std::move(entries);
}

PrimeFieldMatrix SparseModMatrix::to_dense() const {
  PrimeFieldMatrix m(p_, rows_, columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& e : columns_[c])
      m.set(e.index, c, e.value);
  return m;
}

SparseModMatrix SparseModMatrix::from_dense(const PrimeFieldMatrix& m) {
  SparseModMatrix s(m.prime(), m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<SparseEntry> col;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m.at(r, c) != 0)
        col.push_back({static_cast<std::uint32_t>(r), m.at(r, c)});
    s.columns_[c] = std::move(col);
  }
  return s;
}

// ---------------------------------------------------------------------------
// IntegerMatrix / SparseIntegerMatrix

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = static_cast<long>(rows[r][c]);
  }
  return m;
}

PrimeFieldMatrix IntegerMatrix::reduce(Prime p) const {
  PrimeFieldMatrix m(p, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      m.add_to(r, c, flagcoh::reduce(at(r, c), p));
  return m;
}

SparseIntegerMatrix::SparseIntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), columns_(cols) {}

void SparseIntegerMatrix::set_column(std::size_t c, std::vector<IntegerEntry> entries) {
  std::erase_if(entries, [](const IntegerEntry& e) { return e.value == 0; });
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].index >= rows_ || (i > 0 && entries[i - 1].index >= entries[i].index))
      throw std::invalid_argument("sparse column entries must have increasing in-range rows");
  columns_.at(c) = std::move(entries);
}

IntegerMatrix SparseIntegerMatrix::to_dense() const {
  IntegerMatrix m(rows_, columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& e : columns_[c])
      m.at(e.index, c) = e.value;
  return m;
}

SparseModMatrix SparseIntegerMatrix::reduce(Prime p) const {
  SparseModMatrix m(p, rows_, columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    std::vector<SparseEntry> col;
    col.reserve(columns_[c].size());
    for (const auto& e : columns_[c])
      col.push_back({e.index, flagcoh::reduce(e.value, p)});
    m.set_column(c, std::move(col));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Rank

namespace {

// row[j] -= factor * pivot[j] for j >= from.
void eliminate_row(std::span<Residue> row, std::span<const Residue> pivot, Residue factor,
                   std::size_t from, Prime p) {
  const std::uint64_t q = p.value();
  const std::uint64_t f = q - factor;
  for (std::size_t j = from; j < row.size(); ++j)
    if (pivot[j] != 0)
      row[j] = static_cast<Residue>((row[j] + f * pivot[j]) % q);
}

void swap_rows(PrimeFieldMatrix& m, std::size_t a, std::size_t b) {
  if (a == b)
    return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

std::size_t dense_rank(PrimeFieldMatrix m) {
  const Prime p = m.prime();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, c) == 0)
      ++pivot;
    if (pivot == m.rows())
      continue;
    swap_rows(m, rank, pivot);
    const Residue inv = inv_mod(m.at(rank, c), p);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      Residue a = m.at(r, c);
      if (a != 0)
        eliminate_row(m.row(r), m.row(rank), mul_mod(a, inv, p), c, p);
    }
    ++rank;
  }
  return rank;
}

// Echelon elimination on sparse vectors. Coordinates are relabelled so that
// the least populated ones lead, and vectors are fed shortest first; each
// incoming vector is reduced against the pivot with its current leading
// coordinate until it either vanishes or claims a new leading coordinate.
std::size_t sparse_rank(const SparseModMatrix& m) {
  const Prime p = m.prime();
  const std::uint64_t q = p.value();

  std::vector<std::size_t> count(m.rows(), 0);
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c))
      ++count[e.index];
  std::vector<std::uint32_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return count[a] < count[b]; });
  std::vector<std::uint32_t> label(m.rows());
  for (std::uint32_t i = 0; i < order.size(); ++i)
    label[order[i]] = i;

  std::vector<std::size_t> feed(m.cols());
  std::iota(feed.begin(), feed.end(), std::size_t{0});
  std::stable_sort(feed.begin(), feed.end(), [&](std::size_t a, std::size_t b) {
    return m.column(a).size() < m.column(b).size();
  });

  std::vector<std::int64_t> pivot_of(m.rows(), -1);
  std::vector<std::vector<SparseEntry>> pivots;
  std::vector<SparseEntry> v, scratch;

  for (std::size_t c : feed) {
    v.clear();
    for (const auto& e : m.column(c))
      v.push_back({label[e.index], e.value});
    std::sort(v.begin(), v.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });

    while (!v.empty()) {
      const std::int64_t slot = pivot_of[v.front().index];
      if (slot < 0) {
        const Residue inv = inv_mod(v.front().value, p);
        for (auto& e : v)
          e.value = mul_mod(e.value, inv, p);
        pivot_of[v.front().index] = static_cast<std::int64_t>(pivots.size());
        pivots.push_back(v);
        break;
      }
      // v -= v.front().value * pivot; pivot has leading coefficient 1.
      const auto& piv = pivots[static_cast<std::size_t>(slot)];
      const std::uint64_t f = q - v.front().value;
      scratch.clear();
      std::size_t i = 1, j = 1;
      while (i < v.size() || j < piv.size()) {
        if (j == piv.size() || (i < v.size() && v[i].index < piv[j].index)) {
          scratch.push_back(v[i++]);
        } else if (i == v.size() || piv[j].index < v[i].index) {
          scratch.push_back({piv[j].index, static_cast<Residue>(f * piv[j].value % q)});
          ++j;
        } else {
          auto val = static_cast<Residue>((v[i].value + f * piv[j].value) % q);
          if (val != 0)
            scratch.push_back({v[i].index, val});
          ++i;
          ++j;
        }
      }
      std::swap(v, scratch);
    }
  }
  return pivots.size();
}

} // namespace

std::size_t rank(const PrimeFieldMatrix& m) {
  // Eliminate along the shorter side.
  return m.rows() <= m.cols() ? dense_rank(m) : dense_rank(m.transpose());
}

std::size_t rank(const SparseModMatrix& m, RankOptions options) {
  if (m.cols() == 0 || m.rows() == 0)
    return 0;
  if (m.cols() < options.dense_column_limit)
    return rank(m.to_dense());
  return sparse_rank(m);
}

std::size_t kernel_dimension(const PrimeFieldMatrix& m) { return m.cols() - rank(m); }
std::size_t cokernel_dimension(const PrimeFieldMatrix& m) { return m.rows() - rank(m); }

std::size_t kernel_dimension(const SparseModMatrix& m, RankOptions options) {
  return m.cols() - rank(m, options);
}
std::size_t cokernel_dimension(const SparseModMatrix& m, RankOptions options) {
  return m.rows() - rank(m, options);
}

// ---------------------------------------------------------------------------
// RREF

RrefResult rref_with_order(const PrimeFieldMatrix& m, std::span<const std::size_t> column_order) {
  if (column_order.size() != m.cols())
    throw std::invalid_argument("column order has wrong length");
  std::vector<bool> seen(m.cols(), false);
  for (std::size_t c : column_order) {
    if (c >= m.cols() || seen[c])
      throw std::invalid_argument("column order is not a permutation");
    seen[c] = true;
  }

  const Prime p = m.prime();
  PrimeFieldMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t c : column_order) {
    if (next_row == a.rows())
      break;
    std::size_t pivot = next_row;
    while (pivot < a.rows() && a.at(pivot, c) == 0)
      ++pivot;
    if (pivot == a.rows())
      continue;
    swap_rows(a, next_row, pivot);
    const Residue inv = inv_mod(a.at(next_row, c), p);
    for (auto& x : a.row(next_row))
      x = mul_mod(x, inv, p);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == next_row)
        continue;
      Residue f = a.at(r, c);
      if (f != 0)
        eliminate_row(a.row(r), a.row(next_row), f, 0, p);
    }
    pivots.push_back(c);
    ++next_row;
  }
  return {std::move(a), std::move(pivots)};
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<mpz_class> smith_invariants(const IntegerMatrix& m) {
  if (m.rows() > kSmithSizeLimit || m.cols() > kSmithSizeLimit)
    throw std::length_error("Smith normal form limited to " + std::to_string(kSmithSizeLimit) +
                            "x" + std::to_string(kSmithSizeLimit) + " matrices");
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t n = std::min(rows, cols);
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      a[r][c] = m.at(r, c);

  std::vector<mpz_class> invariants(n, 0);
  mpz_class q;
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest non-zero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a[r][c] != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr == rows)
        return invariants; // trailing block is zero

      std::swap(a[t], a[pr]);
      for (auto& row : a)
        std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0)
          continue;
        mpz_tdiv_q(q.get_mpz_t(), a[r][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t c = t; c < cols; ++c)
          a[r][c] -= q * a[t][c];
        if (a[r][t] != 0)
          clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0)
          continue;
        mpz_tdiv_q(q.get_mpz_t(), a[t][c].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t r = t; r < rows; ++r)
          a[r][c] -= q * a[r][t];
        if (a[t][c] != 0)
          clean = false;
      }
      if (!clean)
        continue;

      // The pivot must divide the whole trailing block.
      std::size_t bad_row = rows;
      for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (!mpz_divisible_p(a[r][c].get_mpz_t(), a[t][t].get_mpz_t())) {
            bad_row = r;
            break;
          }
      if (bad_row == rows)
        break;
      for (std::size_t c = t; c < cols; ++c)
        a[t][c] += a[bad_row][c];
    }
    invariants[t] = abs(a[t][t]);
  }
  return invariants;
}

// ---------------------------------------------------------------------------
// Composition checks

bool composes_to_zero(const SparseModMatrix& first, const SparseModMatrix& second) {
  if (second.cols() != first.rows())
    throw std::invalid_argument("composes_to_zero: shape mismatch");
  const Prime p = first.prime();
  std::vector<Residue> acc(second.rows(), 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t c = 0; c < first.cols(); ++c) {
    touched.clear();
    for (const auto& e : first.column(c))
      for (const auto& f : second.column(e.index)) {
        acc[f.index] = add_mod(acc[f.index], mul_mod(e.value, f.value, p), p);
        touched.push_back(f.index);
      }
    bool zero = true;
    for (auto r : touched) {
      if (acc[r] != 0)
        zero = false;
      acc[r] = 0;
    }
    if (!zero)
      return false;
  }
  return true;
}

bool composes_to_zero(const SparseIntegerMatrix& first, const SparseIntegerMatrix& second) {
  if (second.cols() != first.rows())
    throw std::invalid_argument("composes_to_zero: shape mismatch");
  for (std::size_t c = 0; c < first.cols(); ++c) {
    std::map<std::uint32_t, mpz_class> acc;
    for (const auto& e : first.column(c))
      for (const auto& f : second.column(e.index))
        acc[f.index] += e.value * f.value;
    for (const auto& [row, value] : acc)
      if (value != 0)
        return false;
  }
  return true;
}

} // namespace flagcoh
