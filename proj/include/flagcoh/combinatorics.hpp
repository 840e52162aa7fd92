#pragma once

// Number theory and enumeration: binomials mod p, path-graph interval data,
// p-indices, the sets A_{p,d}, nim-sums, ribbons and two-row tableaux.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "flagcoh/modular.hpp"

namespace flagcoh {

/// Weights w_0, ..., w_d on the vertices of a path with d edges. Only w_0 may
/// be negative, and only when the sequence is built with `allow_negative_first`.
class WeightSequence {
public:
  explicit WeightSequence(std::vector<std::int64_t> weights, bool allow_negative_first = false);

  /// Number of edges d.
  [[nodiscard]] int length() const { return static_cast<int>(w_.size()) - 1; }
  [[nodiscard]] std::int64_t operator[](std::size_t i) const { return w_[i]; }
  [[nodiscard]] std::span<const std::int64_t> values() const { return w_; }
  /// w_1 + ... + w_d.
  [[nodiscard]] std::int64_t tail_sum() const;
  [[nodiscard]] std::int64_t total() const;
  [[nodiscard]] std::string to_string() const;

  /// (w0, 1, ..., 1) with d ones.
  static WeightSequence hook(std::int64_t w0, int d);

  friend bool operator==(const WeightSequence&, const WeightSequence&) = default;

private:
  std::vector<std::int64_t> w_;
};

/// Edge subsets J of [d]: bit j-1 is set when edge j belongs to J.
using SubsetMask = std::uint32_t;

/// Largest number of edges the subset encoding supports.
inline constexpr int kMaxEdges = 26;

/// Subsets of [d] of size k in increasing numeric order. This order fixes
/// the basis of every chain group.
[[nodiscard]] std::vector<SubsetMask> subsets_of_size(int d, int k);

/// Binomial coefficient C(m, k), k >= 0, extended to negative m through
/// C(-a, k) = (-1)^k C(a + k - 1, k). Returns 0 for k < 0.
[[nodiscard]] mpz_class binomial(std::int64_t m, std::int64_t k);

/// C(m, k) mod p, via Lucas' theorem on base-p digits for m >= 0.
[[nodiscard]] Residue binom_mod_p(std::int64_t m, std::int64_t k, Prime p);

struct IntervalData {
  /// Weight of the interval that removing j splits.
  std::int64_t total;
  /// Weight of the right-hand piece, the one away from vertex 0.
  std::int64_t right;
  /// Number of edges i < j not in J.
  int sign_exponent;
};

/// Interval bookkeeping for the term e_{J \ {j}} of the boundary of e_J.
/// Requires j in J and J a subset of [d].
[[nodiscard]] IntervalData interval_data(const WeightSequence& w, SubsetMask J, int j);

/// Position of m in the list 0, 1, p, p+1, 2p, 2p+1, ...; throws
/// std::domain_error unless m is non-negative and congruent to 0 or 1 mod p.
[[nodiscard]] std::int64_t p_index(std::int64_t m, Prime p);

using DigitTuple = std::vector<std::int64_t>;

/// Sum of p-indices of the entries.
[[nodiscard]] std::int64_t p_index(const DigitTuple& alpha, Prime p);

/// All tuples (a_0, ..., a_k) with sum a_i p^i = d and every a_i congruent to
/// 0 or 1 mod p, without trailing zeros, sorted lexicographically.
[[nodiscard]] std::vector<DigitTuple> enumerate_A(Prime p, std::int64_t d);

[[nodiscard]] std::uint64_t nim_sum(std::span<const std::uint64_t> values);

using Partition = std::vector<int>;

/// Skew shape outer/inner. Row i spans columns inner[i]+1 .. outer[i].
struct RibbonShape {
  Partition outer;
  Partition inner;
  friend bool operator==(const RibbonShape&, const RibbonShape&) = default;
};

/// Column sizes of a connected ribbon, read left to right. Throws
/// std::domain_error for shapes containing a 2x2 square, disconnected or
/// empty shapes, and malformed partitions.
[[nodiscard]] WeightSequence ribbon_to_columns(const RibbonShape& shape);

/// The ribbon whose column sizes are w (all w_i >= 1), normalised so that
/// no row is empty and the first column is column 1.
[[nodiscard]] RibbonShape columns_to_ribbon(const WeightSequence& w);

/// Two-row filling: top row u_1..u_a, bottom row v_1..v_b, entries in 1..n.
struct TwoRowTableau {
  std::vector<int> top;
  std::vector<int> bottom;

  [[nodiscard]] int a() const { return static_cast<int>(top.size()); }
  [[nodiscard]] int b() const { return static_cast<int>(bottom.size()); }
  /// Exponent vector of t^T in n variables.
  [[nodiscard]] std::vector<int> content(int n) const;

  friend auto operator<=>(const TwoRowTableau&, const TwoRowTableau&) = default;
};

[[nodiscard]] bool is_semistandard(const TwoRowTableau& t);
[[nodiscard]] bool is_p_semistandard(const TwoRowTableau& t, Prime p);

/// Semi-standard tableaux of shape (a, b) with entries in 1..n, in
/// lexicographic order of the row words (top row first).
[[nodiscard]] std::vector<TwoRowTableau> enumerate_ssyt(int n, int a, int b);
/// p-semi-standard tableaux, same ordering.
[[nodiscard]] std::vector<TwoRowTableau> enumerate_pssyt(int n, int a, int b, Prime p);

} // namespace flagcoh
