#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "flagcoh/characters.hpp"
#include "flagcoh/combinatorics.hpp"
#include "oracles.hpp"

using namespace flagcoh;

TEST_CASE("binom_mod_p small values") {
  CHECK(binom_mod_p(4, 2, Prime(2)) == 0);
  CHECK(binom_mod_p(0, 0, Prime(3)) == 1);
  CHECK(binom_mod_p(-7, 0, Prime(3)) == 1);
  CHECK(binom_mod_p(-1, 3, Prime(5)) == 4);
  CHECK(binom_mod_p(3, 5, Prime(5)) == 0);
  CHECK(binomial(-3, 1) == -3);
  CHECK(binomial(-1, 4) == 1);
}

TEST_CASE("binom_mod_p against Pascal's triangle") {
  const auto t = oracle::pascal(40);
  for (std::int64_t p : {2, 3, 5, 7, 11, 13})
    for (int m = 0; m <= 40; ++m)
      for (int k = 0; k <= m; ++k)
        REQUIRE(binom_mod_p(m, k, Prime(p)) == oracle::mod(t[m][k] % p, p));
}

TEST_CASE("negative upper index matches the falling factorial") {
  for (std::int64_t m = -12; m < 0; ++m)
    for (int k = 0; k <= 8; ++k) {
      const std::int64_t exact = oracle::general_binomial(m, k);
      CHECK(binomial(m, k) == exact);
      for (std::int64_t p : {2, 3, 7})
        CHECK(binom_mod_p(m, k, Prime(p)) == oracle::mod(exact, p));
    }
}

TEST_CASE("Lucas digit factorisation") {
  std::mt19937_64 rng(42);
  const std::int64_t primes[] = {2, 3, 5, 7, 11};
  std::uniform_int_distribution<std::int64_t> value(0, 1'000'000);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t p = primes[trial % 5];
    std::int64_t m = value(rng);
    std::int64_t k = std::uniform_int_distribution<std::int64_t>(0, m)(rng);
    const Prime prime(p);
    const Residue whole = binom_mod_p(m, k, prime);
    std::int64_t product = 1;
    for (std::int64_t mm = m, kk = k; mm > 0 || kk > 0; mm /= p, kk /= p)
      product = product * binom_mod_p(mm % p, kk % p, prime) % p;
    CHECK(whole == product);
  }
}

TEST_CASE("interval data") {
  const WeightSequence w({3, 5, 7, 11});
  auto full = interval_data(w, 0b111, 2);
  CHECK(full.total == 3 + 5 + 7 + 11);
  CHECK(full.right == 7 + 11);
  CHECK(full.sign_exponent == 0);

  auto single = interval_data(WeightSequence({4, 9}), 0b1, 1);
  CHECK(single.total == 13);
  CHECK(single.right == 9);
  CHECK(single.sign_exponent == 0);

  auto ones = interval_data(WeightSequence({1, 1, 1, 1}), 0b101, 3);
  // J = {1,3} has components {v0,v1} and {v2,v3}; edge 3 splits the second.
  CHECK(ones.total == 2);
  CHECK(ones.right == 1);
  CHECK(ones.sign_exponent == 1);
}

TEST_CASE("weight sequence validation") {
  CHECK_THROWS_AS(WeightSequence({}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSequence({-1, 2}), std::invalid_argument);
  CHECK_NOTHROW(WeightSequence({-1, 2}, true));
  CHECK_THROWS_AS(WeightSequence({1, -2}, true), std::invalid_argument);
  CHECK(WeightSequence::hook(3, 2) == WeightSequence({3, 1, 1}));
}

TEST_CASE("p-index") {
  CHECK(p_index(9, Prime(3)) == 6);
  CHECK(p_index(10, Prime(3)) == 7);
  CHECK(p_index(0, Prime(5)) == 0);
  for (int m = 0; m < 30; ++m)
    CHECK(p_index(m, Prime(2)) == m);
  CHECK_THROWS_AS((void)p_index(2, Prime(3)), std::domain_error);
  CHECK_THROWS_AS((void)p_index(-3, Prime(3)), std::domain_error);
}

TEST_CASE("the sets A_{p,d}") {
  using T = std::vector<DigitTuple>;
  CHECK(enumerate_A(Prime(2), 4) == T{{0, 0, 1}, {0, 2}, {2, 1}, {4}});
  CHECK(enumerate_A(Prime(3), 4) == T{{1, 1}, {4}});
  CHECK(enumerate_A(Prime(5), 2).empty());
  CHECK(enumerate_A(Prime(7), 0) == T{{}});

  for (std::int64_t p : {2, 3, 5})
    for (std::int64_t d = 0; d <= 40; ++d) {
      const auto set = enumerate_A(Prime(p), d);
      CHECK(std::set<DigitTuple>(set.begin(), set.end()).size() == set.size());
      for (const auto& alpha : set) {
        std::int64_t sum = 0, power = 1;
        for (auto a : alpha) {
          CHECK((a % p == 0 || a % p == 1));
          sum += a * power;
          power *= p;
        }
        CHECK(sum == d);
        if (!alpha.empty())
          CHECK(alpha.back() != 0);
      }
      // Brute-force count over all digit tuples of bounded length.
      std::size_t brute = 0;
      std::vector<std::int64_t> powers{1};
      while (powers.back() * p <= d)
        powers.push_back(powers.back() * p);
      std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t left) {
        if (i == powers.size()) {
          brute += left == 0;
          return;
        }
        for (std::int64_t a = 0; a * powers[i] <= left; ++a)
          if (a % p <= 1)
            walk(i + 1, left - a * powers[i]);
      };
      walk(0, d);
      CHECK(brute == set.size());
    }
}

TEST_CASE("nim sums") {
  const std::uint64_t a[] = {1, 2, 3};
  CHECK(nim_sum(a) == 0);
  const std::uint64_t b[] = {5};
  CHECK(nim_sum(b) == 5);
  const std::uint64_t c[] = {14, 14};
  CHECK(nim_sum(c) == 0);
  CHECK(nim_sum(std::span<const std::uint64_t>{}) == 0);
}

TEST_CASE("ribbons and column sequences") {
  const RibbonShape shape{{7, 4, 3, 3, 3}, {3, 2, 2, 2}};
  CHECK(ribbon_to_columns(shape) == WeightSequence({1, 1, 4, 2, 1, 1, 1}));
  CHECK(columns_to_ribbon(WeightSequence({1, 1, 4, 2, 1, 1, 1})) == shape);

  for (int w0 = 1; w0 <= 4; ++w0)
    for (int d = 0; d <= 4; ++d) {
      auto hook = columns_to_ribbon(WeightSequence::hook(w0, d));
      Partition expected{d + 1};
      for (int i = 1; i < w0; ++i)
        expected.push_back(1);
      CHECK(hook.outer == expected);
      CHECK(hook.inner.empty());
    }
  CHECK(columns_to_ribbon(WeightSequence({1})) == RibbonShape{{1}, {}});

  CHECK_THROWS_AS((void)ribbon_to_columns({{2, 2}, {}}), std::domain_error);
  CHECK_THROWS_AS((void)ribbon_to_columns({{3, 1}, {2}}), std::domain_error);
  CHECK_THROWS_AS((void)ribbon_to_columns({{2}, {2}}), std::domain_error);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> len(0, 6), part(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> w(len(rng) + 1);
    for (auto& x : w)
      x = part(rng);
    const WeightSequence seq(w);
    CHECK(ribbon_to_columns(columns_to_ribbon(seq)) == seq);
  }
}

TEST_CASE("semi-standard enumeration matches brute force") {
  for (int n = 1; n <= 4; ++n)
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= std::min(a, 3); ++b) {
        const auto brute = oracle::brute_ssyt(n, a, b);
        const auto tabs = enumerate_ssyt(n, a, b);
        REQUIRE(tabs.size() == brute.size());
        for (std::size_t k = 0; k < tabs.size(); ++k) {
          CHECK(tabs[k].top == brute[k].first);
          CHECK(tabs[k].bottom == brute[k].second);
        }
      }
  for (int n = 1; n <= 5; ++n)
    for (int a = 0; a <= 5; ++a)
      CHECK(static_cast<std::int64_t>(enumerate_ssyt(n, a, 0).size()) ==
            oracle::binomial(n + a - 1, a));
}

TEST_CASE("3-semi-standard tableaux of shape (2,1)") {
  const Prime three(3);
  for (int n = 1; n <= 5; ++n) {
    auto tabs = enumerate_pssyt(n, 2, 1, three);
    std::set<TwoRowTableau> got(tabs.begin(), tabs.end());
    std::set<TwoRowTableau> expected;
    for (const auto& t : enumerate_ssyt(n, 2, 1))
      expected.insert(t);
    for (int i = 1; i <= n; ++i)
      expected.insert(TwoRowTableau{{i, i}, {i}});
    CHECK(got == expected);
  }
}

TEST_CASE("2-semi-standard tableaux are transposes of semi-standard ones") {
  // T is 2-semi-standard iff its transpose is semi-standard: columns weakly
  // increasing pairs u_i <= v_i, rows strictly increasing.
  const Prime two(2);
  for (int n = 1; n <= 5; ++n)
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; b <= std::min(a, 3); ++b) {
        std::set<TwoRowTableau> expected;
        std::vector<int> word(a + b, 1);
        if (a + b == 0) {
          expected.insert(TwoRowTableau{});
        } else {
          for (;;) {
            std::vector<int> top(word.begin(), word.begin() + a);
            std::vector<int> bottom(word.begin() + a, word.end());
            bool ok = std::adjacent_find(top.begin(), top.end(), std::greater_equal<>()) ==
                          top.end() &&
                      std::adjacent_find(bottom.begin(), bottom.end(), std::greater_equal<>()) ==
                          bottom.end();
            for (int i = 0; ok && i < b; ++i)
              ok = top[i] <= bottom[i];
            if (ok)
              expected.insert(TwoRowTableau{top, bottom});
            int pos = a + b - 1;
            while (pos >= 0 && word[pos] == n)
              word[pos--] = 1;
            if (pos < 0)
              break;
            ++word[pos];
          }
        }
        auto tabs = enumerate_pssyt(n, a, b, two);
        CHECK(std::set<TwoRowTableau>(tabs.begin(), tabs.end()) == expected);
        CHECK(dim_eval(schur2_trunc(a, b, 2, n)) == static_cast<long>(tabs.size()));
      }
}

TEST_CASE("p-semi-standard output is ordered and valid") {
  for (std::int64_t p : {2, 3, 5}) {
    auto tabs = enumerate_pssyt(4, 4, 2, Prime(p));
    CHECK(std::is_sorted(tabs.begin(), tabs.end()));
    for (const auto& t : tabs)
      CHECK(is_p_semistandard(t, Prime(p)));
  }
  // Large p imposes nothing beyond semi-standardness plus constant columns.
  CHECK(is_p_semistandard(TwoRowTableau{{1, 1}, {1}}, Prime(3)));
  CHECK_FALSE(is_p_semistandard(TwoRowTableau{{1, 1}, {1}}, Prime(2)));
  CHECK_FALSE(is_semistandard(TwoRowTableau{{1, 1}, {1}}));
}
