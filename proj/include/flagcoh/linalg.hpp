#pragma once

// Exact linear algebra over prime fields and the integers.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "flagcoh/modular.hpp"

namespace flagcoh {

/// Dense matrix over F_p, row-major. Entries are always kept in [0, p).
class PrimeFieldMatrix {
public:
  PrimeFieldMatrix(Prime p, std::size_t rows, std::size_t cols);

  /// Builds a matrix from signed integer rows, reducing every entry mod p.
  static PrimeFieldMatrix from_rows(Prime p,
                                    const std::vector<std::vector<std::int64_t>>& rows);
  static PrimeFieldMatrix identity(Prime p, std::size_t size);

  [[nodiscard]] Prime prime() const { return p_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  [[nodiscard]] Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t value) {
    data_[r * cols_ + c] = reduce(value, p_);
  }
  void add_to(std::size_t r, std::size_t c, Residue value) {
    Residue& slot = data_[r * cols_ + c];
    slot = add_mod(slot, value, p_);
  }

  [[nodiscard]] std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  [[nodiscard]] PrimeFieldMatrix transpose() const;
  /// Rows of `*this` followed by rows of `below`; column counts must match.
  [[nodiscard]] PrimeFieldMatrix stacked(const PrimeFieldMatrix& below) const;

  friend bool operator==(const PrimeFieldMatrix&, const PrimeFieldMatrix&) = default;

private:
  Prime p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

struct SparseEntry {
  std::uint32_t index;
  Residue value;
};

/// Sparse matrix over F_p stored by columns; each column is sorted by row.
class SparseModMatrix {
public:
  SparseModMatrix(Prime p, std::size_t rows, std::size_t cols);

  [[nodiscard]] Prime prime() const { return p_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return columns_.size(); }
  [[nodiscard]] std::size_t nonzeros() const;

  /// Replaces column c. Zero entries are dropped; rows must be increasing.
  void set_column(std::size_t c, std::vector<SparseEntry> entries);
  [[nodiscard]] const std::vector<SparseEntry>& column(std::size_t c) const { return columns_[c]; }

  [[nodiscard]] PrimeFieldMatrix to_dense() const;
  static SparseModMatrix from_dense(const PrimeFieldMatrix& m);

private:
  Prime p_;
  std::size_t rows_;
  std::vector<std::vector<SparseEntry>> columns_;
};

/// Dense matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
public:
  IntegerMatrix(std::size_t rows, std::size_t cols);
  static IntegerMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const mpz_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  mpz_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  [[nodiscard]] PrimeFieldMatrix reduce(Prime p) const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpz_class> data_;
};

struct IntegerEntry {
  std::uint32_t index;
  mpz_class value;
};

/// Sparse integer matrix stored by columns, sorted by row.
class SparseIntegerMatrix {
public:
  SparseIntegerMatrix(std::size_t rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return columns_.size(); }

  void set_column(std::size_t c, std::vector<IntegerEntry> entries);
  [[nodiscard]] const std::vector<IntegerEntry>& column(std::size_t c) const { return columns_[c]; }

  [[nodiscard]] IntegerMatrix to_dense() const;
  [[nodiscard]] SparseModMatrix reduce(Prime p) const;

private:
  std::size_t rows_;
  std::vector<std::vector<IntegerEntry>> columns_;
};

struct RankOptions {
  /// Matrices with at least this many columns go through sparse elimination.
  std::size_t dense_column_limit = 512;
};

[[nodiscard]] std::size_t rank(const PrimeFieldMatrix& m);
[[nodiscard]] std::size_t rank(const SparseModMatrix& m, RankOptions options = {});

[[nodiscard]] std::size_t kernel_dimension(const PrimeFieldMatrix& m);
[[nodiscard]] std::size_t cokernel_dimension(const PrimeFieldMatrix& m);
[[nodiscard]] std::size_t kernel_dimension(const SparseModMatrix& m, RankOptions options = {});
[[nodiscard]] std::size_t cokernel_dimension(const SparseModMatrix& m, RankOptions options = {});

struct RrefResult {
  PrimeFieldMatrix reduced;
  /// Pivot columns (original indices) in the order they were found.
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form where columns are visited in `column_order`,
/// which must be a permutation of 0..cols-1. Pivot rows come first, in pivot
/// order; the remaining rows are zero.
[[nodiscard]] RrefResult rref_with_order(const PrimeFieldMatrix& m,
                                         std::span<const std::size_t> column_order);

/// Largest matrix side accepted by smith_invariants.
inline constexpr std::size_t kSmithSizeLimit = 200;

/// Diagonal of the Smith normal form: min(rows, cols) non-negative values,
/// each dividing the next, zeros last. Throws std::length_error above
/// kSmithSizeLimit in either dimension.
[[nodiscard]] std::vector<mpz_class> smith_invariants(const IntegerMatrix& m);

/// True when every column of `second * first` vanishes, i.e. second∘first = 0.
[[nodiscard]] bool composes_to_zero(const SparseModMatrix& first, const SparseModMatrix& second);
[[nodiscard]] bool composes_to_zero(const SparseIntegerMatrix& first,
                                    const SparseIntegerMatrix& second);

} // namespace flagcoh
