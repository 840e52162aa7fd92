#include <doctest.h>

#include <numeric>
#include <random>

#include "flagcoh/characters.hpp"
#include "flagcoh/combinatorics.hpp"
#include "oracles.hpp"

using namespace flagcoh;

namespace {

LaurentPolynomial brute_h(int d, int q, int n) {
  LaurentPolynomial out(n);
  if (d < 0)
    return out;
  for (const auto& e : oracle::box(n, std::min(d, q - 1)))
    if (std::accumulate(e.begin(), e.end(), 0) == d)
      out.add_term(e, 1);
  return out;
}

LaurentPolynomial tableau_sum(int n, int a, int b) {
  LaurentPolynomial out(n);
  for (const auto& [top, bottom] : oracle::brute_ssyt(n, a, b)) {
    Exponent e(n, 0);
    for (int x : top)
      ++e[x - 1];
    for (int x : bottom)
      ++e[x - 1];
    out.add_term(e, 1);
  }
  return out;
}

LaurentPolynomial elementary2(int n) {
  LaurentPolynomial out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Exponent e(n, 0);
      e[i] = e[j] = 1;
      out.add_term(e, 1);
    }
  return out;
}

LaurentPolynomial power_sum(int k, int n) {
  LaurentPolynomial out(n);
  for (int i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = k;
    out.add_term(e, 1);
  }
  return out;
}

} // namespace

TEST_CASE("ring arithmetic") {
  auto x = LaurentPolynomial::monomial({1, -1});
  auto y = LaurentPolynomial::monomial({-1, 1});
  auto product = x * y;
  CHECK(product == LaurentPolynomial::constant(2, 1));
  CHECK((x - x).is_zero());
  CHECK((x + y).terms().size() == 2);
  CHECK_THROWS_AS(x + LaurentPolynomial(3), std::invalid_argument);
  CHECK(x.shifted({1, 1}) == LaurentPolynomial::monomial({2, 0}));
  CHECK(LaurentPolynomial::constant(2, 0).is_zero());
  CHECK(LaurentPolynomial::monomial({2, 0}, 3).to_string() == "3*t1^2");
}

TEST_CASE("complete symmetric polynomials") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(h(0, n) == LaurentPolynomial::constant(n, 1));
    CHECK(h(-1, n).is_zero());
    CHECK(h_trunc(-2, 3, n).is_zero());
    CHECK(h_trunc(2, 2, n) == elementary2(n));
    for (int d = 0; d <= 6; ++d) {
      CHECK(h(d, n) == brute_h(d, d + 1, n));
      CHECK(dim_eval(h(d, n)) == oracle::binomial(n + d - 1, d));
      for (int q = 2; q <= 4; ++q)
        CHECK(h_trunc(d, q, n) == brute_h(d, q, n));
      CHECK(h_trunc(d, d + 1, n) == h(d, n));
    }
  }
}

TEST_CASE("two-row Schur polynomials") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(schur2(2, 1, n) + power_sum(3, n) == schur2_trunc(2, 1, 3, n));
    CHECK(schur2(1, 1, n) == elementary2(n));
    for (int a = 0; a <= 5; ++a) {
      CHECK(schur2(a, 0, n) == h(a, n));
      for (int b = 0; b <= std::min(a, 3); ++b)
        CHECK(schur2(a, b, n) == tableau_sum(n, a, b));
    }
  }
}

TEST_CASE("truncated Schur polynomials are p-tableau sums") {
  for (std::int64_t p : {2, 3})
    for (int n = 1; n <= 4; ++n)
      for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= std::min(a, 3); ++b) {
          LaurentPolynomial sum(n);
          for (const auto& t : enumerate_pssyt(n, a, b, Prime(p)))
            sum.add_term(t.content(n), 1);
          CHECK(schur2_trunc(a, b, static_cast<int>(p), n) == sum);
        }
}

TEST_CASE("Frobenius twist") {
  const int n = 3;
  CHECK(frobenius(LaurentPolynomial::constant(n, 1), 5) == LaurentPolynomial::constant(n, 1));
  CHECK(frobenius(h(1, n), 4) == power_sum(4, n));
  LaurentPolynomial expected(n);
  const auto e2 = elementary2(n);
  for (const auto& [e, c] : e2.terms()) {
    Exponent scaled = e;
    for (auto& x : scaled)
      x *= 4;
    expected.add_term(scaled, c);
  }
  CHECK(frobenius(nim_poly(1, n), 4) == expected);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> exp(-2, 3), coeff(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPolynomial f(n), g(n);
    for (int k = 0; k < 4; ++k) {
      f.add_term({exp(rng), exp(rng), exp(rng)}, coeff(rng));
      g.add_term({exp(rng), exp(rng), exp(rng)}, coeff(rng));
    }
    for (int q : {2, 3})
      CHECK(frobenius(f * g, q) == frobenius(f, q) * frobenius(g, q));
  }
}

TEST_CASE("Nim polynomials") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(nim_poly(0, n) == LaurentPolynomial::constant(n, 1));
    CHECK(nim_poly(1, n) == schur2(1, 1, n));
  }
  CHECK(nim_poly(1, 1).is_zero());
  for (int m = 0; m <= 12; ++m) {
    CHECK(nim_poly(m, 2) == LaurentPolynomial::monomial({m, m}));
    for (int n = 3; n <= 4; ++n) {
      LaurentPolynomial brute(n);
      for (const auto& e : oracle::box(n, 2 * m)) {
        int sum = 0, x = 0;
        for (int v : e) {
          sum += v;
          x ^= v;
        }
        if (sum == 2 * m && x == 0)
          brute.add_term(e, 1);
      }
      CHECK(nim_poly(m, n) == brute);
    }
  }
}

TEST_CASE("symmetry and dimension") {
  CHECK_FALSE(is_symmetric(LaurentPolynomial::monomial({1, 0})));
  CHECK(is_symmetric(LaurentPolynomial::monomial({1})));
  LaurentPolynomial w(2);
  w.add_term({1, -1}, 1);
  w.add_term({0, 0}, 1);
  w.add_term({-1, 1}, 1);
  CHECK(is_symmetric(w));
  CHECK(dim_eval(w) == 3);
  LaurentPolynomial lopsided(3);
  lopsided.add_term({1, 0, 0}, 1);
  lopsided.add_term({0, 1, 0}, 2);
  lopsided.add_term({0, 0, 1}, 1);
  CHECK_FALSE(is_symmetric(lopsided));
  for (int n = 1; n <= 4; ++n)
    for (int a = 0; a <= 4; ++a)
      for (int b = -1; b <= a; ++b) {
        CHECK(is_symmetric(schur2(a, b, n)));
        CHECK(is_symmetric(schur2_trunc(a, b, 2, n)));
        CHECK(is_symmetric(nim_poly(a, n)));
        CHECK(is_symmetric(frobenius(h(a, n), 3)));
      }
}

TEST_CASE("first difference") {
  auto a = h(2, 2);
  auto b = a + LaurentPolynomial::monomial({0, 3});
  CHECK_FALSE(first_difference(a, a).has_value());
  auto diff = first_difference(a, b);
  REQUIRE(diff.has_value());
  CHECK(diff->exponent == Exponent{0, 3});
  CHECK(diff->left == 0);
  CHECK(diff->right == 1);
}
