#pragma once

// The character ring Z[t_1^{±1}, ..., t_n^{±1}] and the symmetric functions
// built in it: complete and truncated complete symmetric polynomials,
// two-row Schur polynomials, Frobenius twists and Nim polynomials.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace flagcoh {

using Exponent = std::vector<int>;

/// Sparse Laurent polynomial in a fixed number of variables. Terms are kept
/// in lexicographic order of exponent vectors and never have zero coefficient.
class LaurentPolynomial {
public:
  using Terms = std::map<Exponent, mpz_class>;

  explicit LaurentPolynomial(int variables);

  static LaurentPolynomial constant(int variables, const mpz_class& c);
  static LaurentPolynomial monomial(Exponent exponent, const mpz_class& c = 1);

  [[nodiscard]] int variables() const { return n_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] mpz_class coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const mpz_class& c);

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial operator-() const;

  /// Multiplies by the monomial t^shift.
  [[nodiscard]] LaurentPolynomial shifted(const Exponent& shift) const;

  /// Human-readable form such as "t1^2*t2^-1 + 1 - 3*t3".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
  void check_compatible(const LaurentPolynomial& other) const;
  void check_exponent(const Exponent& e) const;

  int n_;
  Terms terms_;
};

/// Complete symmetric polynomial h_d in n variables; zero for d < 0.
[[nodiscard]] LaurentPolynomial h(int d, int n);
/// q-truncated h_d: only monomials with every exponent below q.
[[nodiscard]] LaurentPolynomial h_trunc(int d, int q, int n);

/// s_(a,b) = h_a h_b - h_{a+1} h_{b-1}.
[[nodiscard]] LaurentPolynomial schur2(int a, int b, int n);
/// s^(q)_(a,b), the same Jacobi-Trudi expression in truncated h's.
[[nodiscard]] LaurentPolynomial schur2_trunc(int a, int b, int q, int n);

/// Ring endomorphism t_i -> t_i^q.
[[nodiscard]] LaurentPolynomial frobenius(const LaurentPolynomial& f, int q);

/// Sum of t^i over i_1 + ... + i_n = 2m with i_1 xor ... xor i_n = 0.
[[nodiscard]] LaurentPolynomial nim_poly(int m, int n);

/// Value at t_1 = ... = t_n = 1.
[[nodiscard]] mpz_class dim_eval(const LaurentPolynomial& f);

/// Invariance under permutation of the variables.
[[nodiscard]] bool is_symmetric(const LaurentPolynomial& f);

/// Product t_1 ... t_n.
[[nodiscard]] Exponent all_ones(int n);

/// First term, in canonical order, where two polynomials differ.
struct TermDifference {
  Exponent exponent;
  mpz_class left;
  mpz_class right;
};
[[nodiscard]] std::optional<TermDifference> first_difference(const LaurentPolynomial& left,
                                                             const LaurentPolynomial& right);

} // namespace flagcoh
