#pragma once

// Cohomology of divided powers D^d R(e) on P^{n-1} in characteristic p,
// computed from multiplication by w = x_1 y_1 + ... + x_n y_n on the local
// cohomology module M, one multidegree block at a time.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "flagcoh/characters.hpp"
#include "flagcoh/linalg.hpp"
#include "flagcoh/parallel.hpp"

namespace flagcoh {

/// The basis element x^b / y^(1+a) of M_{|a|,|b|}.
struct LocalCohElement {
  Exponent a;
  Exponent b;

  /// Torus weight a + b + (1, ..., 1).
  [[nodiscard]] Exponent multidegree() const;
  friend bool operator==(const LocalCohElement&, const LocalCohElement&) = default;
};

/// Basis of the multidegree-m part of M_{d,e}, ordered lexicographically by
/// a. Requires every m_i >= 1; empty unless sum(m) = d + e + n.
[[nodiscard]] std::vector<LocalCohElement> block_basis(int n, int d, int e, const Exponent& m);

/// Matrix of multiplication by w from block m of M_{d,e} to block m of
/// M_{d-1,e+1}, columns indexed by block_basis(n, d, e, m).
[[nodiscard]] PrimeFieldMatrix omega_block(int n, int d, int e, const Exponent& m, Prime p);

struct BlockRecord {
  Exponent multidegree;
  std::size_t domain_dim = 0;
  std::size_t codomain_dim = 0;
  std::size_t kernel = 0;
  std::size_t cokernel = 0;
};

struct IncidenceOptions {
  /// Compute one block per S_n-orbit of multidegrees and copy the result.
  bool symmetry_reduction = true;
  Parallelism parallel{};
};

struct IncidenceResult {
  int n = 0;
  int d = 0;
  int e = 0;
  Prime p{2};
  /// Characters of H^0 and H^1 of D^d R(e).
  LaurentPolynomial h0{1};
  LaurentPolynomial h1{1};
  /// Sum over blocks of (dim of block of M_{d,e}) t^m.
  LaurentPolynomial domain_character{1};
  /// Every block, in lexicographic order of multidegree.
  std::vector<BlockRecord> blocks;
  /// dim h0 - dim h1 == dim M_{d,e} - dim M_{d-1,e+1}, and the same
  /// identity inside every block.
  bool euler_ok = false;
};

/// dim M_{d,e} = C(n+d-1, d) C(n+e-1, e), zero when d or e is negative.
[[nodiscard]] mpz_class module_dimension(int n, int d, int e);

/// Requires n >= 2, d >= 0 and e >= -1 (std::domain_error for e <= -2).
[[nodiscard]] IncidenceResult compute_incidence(int n, int d, int e, Prime p,
                                                const IncidenceOptions& options = {});

/// s^(p)_(e+p, d-p); requires p <= d < 2p and e >= d - 1.
[[nodiscard]] LaurentPolynomial h1_theorem_char(int n, int d, int e, Prime p);

/// Sum over 1 <= b <= a <= t, 0 <= j <= a - b of
/// F^p(s_(a-b, j)) s^(p)_(e + (b-j)p, d - ap), where t = floor(d/p).
/// Requires 1 <= t < p and e >= d - 1.
[[nodiscard]] LaurentPolynomial small_weights_conjecture_char(int n, int d, int e, Prime p);

/// Sum over q = 2^r (r >= 1), m >= 0 with (2m+1)q <= d of
/// F^{2q}(N_m) s^(q)_(e - (2m-1)q, d - (2m+1)q). Requires e >= d - 1.
[[nodiscard]] LaurentPolynomial char2_conjecture_char(int n, int d, int e);

} // namespace flagcoh
