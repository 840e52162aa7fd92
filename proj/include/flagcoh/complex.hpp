#pragma once

// The complexes C(w_0, ..., w_d) on subsets of the edges of a path, their
// homology over F_p, and the structural checks run on them.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "flagcoh/combinatorics.hpp"
#include "flagcoh/linalg.hpp"
#include "flagcoh/parallel.hpp"
#include "flagcoh/status.hpp"

namespace flagcoh {

/// Tag selecting integer coefficients.
struct Integers {};

/// A chain complex 0 -> C_d -> ... -> C_0 -> 0. differentials[k-1] is the
/// boundary map from C_k to C_{k-1}, a dims[k-1] x dims[k] matrix.
template <class Matrix>
struct ChainComplex {
  std::vector<std::size_t> dims;
  std::vector<Matrix> differentials;

  [[nodiscard]] int length() const { return static_cast<int>(dims.size()) - 1; }
  [[nodiscard]] const Matrix& boundary(int k) const {
    return differentials.at(static_cast<std::size_t>(k - 1));
  }
};

using ModComplex = ChainComplex<SparseModMatrix>;
using IntegerComplex = ChainComplex<SparseIntegerMatrix>;

/// Position of a subset within subsets_of_size(d, |J|).
[[nodiscard]] std::size_t subset_index(SubsetMask J);

/// Builds C(w) over F_p or Z and verifies that consecutive differentials
/// compose to zero (std::logic_error otherwise).
[[nodiscard]] ModComplex build_complex(const WeightSequence& w, Prime p);
[[nodiscard]] IntegerComplex build_complex(const WeightSequence& w, Integers);

/// Reduction of an integer complex mod p.
[[nodiscard]] ModComplex reduce(const IntegerComplex& c, Prime p);

/// Sum of h_i t^i.
struct PoincarePolynomial {
  std::vector<std::size_t> coefficients;

  [[nodiscard]] std::size_t operator[](std::size_t i) const {
    return i < coefficients.size() ? coefficients[i] : 0;
  }
  [[nodiscard]] bool is_zero() const;
  /// Drops trailing zeros so equal polynomials compare equal.
  [[nodiscard]] PoincarePolynomial normalized() const;
  /// Display form such as "1 + t + t^2".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const PoincarePolynomial& a, const PoincarePolynomial& b) {
    return a.normalized().coefficients == b.normalized().coefficients;
  }
};

/// Degreewise dimensions and ranks of a complex over a field.
struct RankTable {
  std::vector<std::size_t> dims;
  /// ranks[k-1] = rank of the boundary map out of C_k.
  std::vector<std::size_t> ranks;

  [[nodiscard]] PoincarePolynomial homology() const;
  friend bool operator==(const RankTable&, const RankTable&) = default;
};

[[nodiscard]] RankTable rank_table(const ModComplex& c, Parallelism parallel = Parallelism::serial());
[[nodiscard]] PoincarePolynomial homology_dims(const ModComplex& c,
                                               Parallelism parallel = Parallelism::serial());

/// Sum over alpha in A_{p,d+1} of t^{d+1-|alpha|_p}.
[[nodiscard]] PoincarePolynomial poincare_formula_all_ones(int d, Prime p);

/// Removes powers p^r from w_0 while p^r <= w_0 and p^r > w_1 + ... + w_d,
/// largest power first.
[[nodiscard]] WeightSequence lucas_reduce(const WeightSequence& w, Prime p);

struct InvolutionReport {
  std::int64_t w0 = 0;
  int d = 0;
  Prime p{2};
  /// -w0 - 2d.
  std::int64_t partner = 0;
  /// p^r - w0 - 2d for the least r with p^r > w0 + 2d.
  std::int64_t reduced_partner = 0;
  RankTable original;
  RankTable partner_table;
  RankTable reduced_table;
  bool field_agrees = false;
  /// Whether Smith invariants were compared; false when some differential
  /// exceeds kSmithSizeLimit.
  bool smith_checked = false;
  bool smith_agrees = false;
  Status status = Status::error;
  std::optional<std::string> witness;
};

/// Compares C(w0, 1^d) with C(-w0-2d, 1^d) and C(p^r-w0-2d, 1^d): ranks over
/// F_p, and Smith invariants of the integer differentials when small enough.
[[nodiscard]] InvolutionReport check_involution(std::int64_t w0, int d, Prime p);

/// Tensor product of complexes with the Koszul sign. Degree-k basis: pairs
/// (x, y) with deg x + deg y = k, ordered by deg x, then x, then y.
[[nodiscard]] ModComplex tensor_product(const ModComplex& a, const ModComplex& b);

struct SesReport {
  int split = 0;
  PoincarePolynomial whole;
  PoincarePolynomial sub;
  /// Homology of the merged complex C(w_0, ..., w_i + w_{i+1}, ..., w_d);
  /// the quotient complex is this one shifted up by one degree.
  PoincarePolynomial merged;
  bool dimensions_ok = false;
  bool euler_ok = false;
  bool subadditive_ok = false;
  Status status = Status::error;
  std::optional<std::string> witness;
};

/// Checks the short exact sequence
/// 0 -> C(w_0..w_i) (x) C(w_{i+1}..w_d) -> C(w) -> C(merged)[-1] -> 0
/// through dimensions, Euler characteristics and homology subadditivity.
[[nodiscard]] SesReport ses_dimension_check(const WeightSequence& w, int split, Prime p);

/// j -> dim H^j_st for the hook weights (w0, 1^d), using
/// H^j_st = H_{d + w0 - j}(C(w0, 1^d)). Contains every j in [w0, w0 + d].
[[nodiscard]] std::map<std::int64_t, std::size_t> stable_hook_cohomology(std::int64_t w0, int d,
                                                                         Prime p);

struct PeriodicityReport {
  std::int64_t q = 0;
  PoincarePolynomial base;
  PoincarePolynomial shifted;
  Status status = Status::error;
  std::optional<std::string> witness;
};

/// Compares homology of C(w0, 1^d) and C(w0 + p^r, 1^d). Requires p^r > d
/// (std::domain_error otherwise).
[[nodiscard]] PeriodicityReport check_stable_periodicity_hook(std::int64_t w0, int d, Prime p, int r);

} // namespace flagcoh
