#pragma once

// Bigraded pieces of the ideal I of 2x2 minors of the generic 2 x n matrix
// and of its powers, in k[x, y] and in the truncation
// k[x, y] / (x_1^p, ..., x_n^p, y_1^p, ..., y_n^p).

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "flagcoh/characters.hpp"
#include "flagcoh/combinatorics.hpp"
#include "flagcoh/linalg.hpp"
#include "flagcoh/parallel.hpp"
#include "flagcoh/status.hpp"

namespace flagcoh {

/// x^u y^v. The ordering compares u, then v, lexicographically, which on a
/// fixed bidegree is graded lex with x_1 > ... > x_n > y_1 > ... > y_n.
struct BigradedMonomial {
  Exponent u;
  Exponent v;

  [[nodiscard]] int a() const;
  [[nodiscard]] int b() const;
  /// Torus weight u + v.
  [[nodiscard]] Exponent multidegree() const;
  /// Display form such as "x1^2*y3"; "1" for the unit.
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const BigradedMonomial&, const BigradedMonomial&) = default;
};

using BigradedPolynomial = std::map<BigradedMonomial, mpz_class>;

/// Monomials of bidegree (a, b), largest first; with `truncated`, only those
/// with every exponent below p.
[[nodiscard]] std::vector<BigradedMonomial> bidegree_basis(int n, int a, int b, bool truncated,
                                                           Prime p);

struct SliceOptions {
  Parallelism parallel{};
  /// Shuffles the generators of every block before elimination.
  std::optional<std::uint64_t> shuffle_seed;
  /// Also extract pivot monomials of every block.
  bool leading = false;
};

/// One multidegree block of a slice.
struct SliceBlock {
  Exponent multidegree;
  /// Column labels, largest monomial first.
  std::vector<BigradedMonomial> monomials;
  /// Expanded generators, one per row.
  PrimeFieldMatrix generators{Prime(2), 0, 0};
  std::size_t rank = 0;
  /// Pivot monomials of the row-reduced generators (when requested).
  std::vector<BigradedMonomial> leading;
};

/// (I^i)_(a,b), or its image in the truncated ring, over F_p.
struct IdealPowerSlice {
  int n = 0;
  int a = 0;
  int b = 0;
  int i = 0;
  bool truncated = false;
  Prime p{2};
  /// Non-empty multidegree blocks in lexicographic order.
  std::vector<SliceBlock> blocks;

  [[nodiscard]] std::size_t dimension() const;
  /// Sum of rank(block m) t^m.
  [[nodiscard]] LaurentPolynomial character() const;
};

/// Spans (I^i)_(a,b) by products of i minors x_j y_k - x_k y_j (j < k, with
/// repetition) and monomials of bidegree (a-i, b-i), expanded and, when
/// truncated, stripped of terms with an exponent >= p.
[[nodiscard]] IdealPowerSlice ideal_power_slice(int n, int a, int b, int i, bool truncated,
                                                Prime p, const SliceOptions& options = {});

/// Sum over monomials of bidegree (a, b) of t^(u+v).
[[nodiscard]] LaurentPolynomial ring_character(int n, int a, int b, bool truncated, Prime p);

/// h^(p)_a h^(p)_b.
[[nodiscard]] LaurentPolynomial rbar_character(int n, int a, int b, Prime p);

/// [(I^i / I^{i+1})_(a,b)] from slice ranks.
[[nodiscard]] LaurentPolynomial filtration_character(int n, int a, int b, int i, bool truncated,
                                                     Prime p, const SliceOptions& options = {});

/// s_(a+b-i, i), or s^(p)_(a+b-i, i) when truncated; zero for i > min(a, b).
[[nodiscard]] LaurentPolynomial filtration_prediction(int n, int a, int b, int i, bool truncated,
                                                      Prime p);

/// Union of block pivots, largest first. The slice must carry leading data.
[[nodiscard]] std::vector<BigradedMonomial> leading_monomials(const IdealPowerSlice& slice);

/// M_T = x_{u_1} ... x_{u_a} y_{v_1} ... y_{v_b}.
[[nodiscard]] BigradedMonomial tableau_monomial(const TwoRowTableau& t, int n);
/// G_T = prod_i (x_{u_i} y_{v_i} - x_{v_i} y_{u_i}) x_{u_{b+1}} ... x_{u_a} over Z.
[[nodiscard]] BigradedPolynomial g_expansion(const TwoRowTableau& t, int n);
/// Largest monomial with nonzero coefficient; throws std::domain_error on 0.
[[nodiscard]] BigradedMonomial leading_monomial(const BigradedPolynomial& f);

struct FiltrationLevel {
  int i = 0;
  LaurentPolynomial computed{1};
  LaurentPolynomial predicted{1};
  std::optional<TermDifference> difference;
};

struct FiltrationReport {
  int n = 0;
  int a = 0;
  int b = 0;
  Prime p{2};
  bool truncated = false;
  /// a - b >= p - 1 (always true for the classical ring).
  bool hypothesis_holds = true;
  bool comparison_agrees = false;
  std::vector<FiltrationLevel> levels;
  Status status = Status::error;
  std::optional<std::string> witness;
};

/// Compares every filtration level i = 0..min(a,b)+1 with its prediction.
/// Outside the hypothesis the comparison still runs and the status is
/// outside-hypothesis.
[[nodiscard]] FiltrationReport check_filtration(int n, int a, int b, Prime p, bool truncated,
                                                const SliceOptions& options = {});
/// Truncated ring, hypothesis a - b >= p - 1.
[[nodiscard]] FiltrationReport check_iadic_conjecture(int n, int a, int b, Prime p,
                                                      const SliceOptions& options = {});

struct LeadTermsReport {
  int n = 0;
  int a = 0;
  int b = 0;
  Prime p{2};
  bool truncated = true;
  bool hypothesis_holds = true;
  /// Tab_n(a,b), or the p-semi-standard tableaux when truncated.
  std::vector<TwoRowTableau> tableaux;
  /// Pivot monomials of (I^b)_(a,b).
  std::vector<BigradedMonomial> leading;
  /// Tableaux whose M_T is not a pivot monomial.
  std::vector<TwoRowTableau> missing;
  /// Pivot set equals {M_T}.
  bool sets_equal = false;
  Status status = Status::error;
  std::optional<std::string> witness;
};

/// Checks that every M_T is a leading monomial of (I^b)_(a,b). Requires
/// a >= b >= 0 and n >= 2.
[[nodiscard]] LeadTermsReport check_lead_terms(int n, int a, int b, Prime p, bool truncated = true,
                                               const SliceOptions& options = {});

} // namespace flagcoh
