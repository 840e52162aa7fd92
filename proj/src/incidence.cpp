#include "flagcoh/incidence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "flagcoh/combinatorics.hpp"

namespace flagcoh {

Exponent LocalCohElement::multidegree() const {
  Exponent m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    m[i] = a[i] + b[i] + 1;
  return m;
}

namespace {

void check_multidegree(int n, const Exponent& m) {
  if (static_cast<int>(m.size()) != n)
    throw std::invalid_argument("multidegree has the wrong length");
  for (int x : m)
    if (x < 1)
      throw std::invalid_argument("multidegree entries must be at least 1");
}

// All x in Z^n_{>=0} with |x| = total and x_i <= cap_i, lexicographic order.
void bounded_compositions(const Exponent& cap, int total,
                          const std::function<void(const Exponent&)>& visit) {
  const std::size_t n = cap.size();
  Exponent x(n, 0);
  std::vector<int> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;)
    suffix[i] = suffix[i + 1] + cap[i];
  std::function<void(std::size_t, int)> fill = [&](std::size_t i, int remaining) {
    if (i == n) {
      if (remaining == 0)
        visit(x);
      return;
    }
    const int low = std::max(0, remaining - suffix[i + 1]);
    for (int v = low; v <= std::min(remaining, cap[i]); ++v) {
      x[i] = v;
      fill(i + 1, remaining - v);
    }
  };
  if (total >= 0 && total <= suffix[0])
    fill(0, total);
}

// Weakly decreasing m with m_i >= 1 and |m| = total.
std::vector<Exponent> decreasing_multidegrees(int n, int total) {
  std::vector<Exponent> out;
  Exponent m(static_cast<std::size_t>(n), 0);
  std::function<void(int, int, int)> fill = [&](int i, int remaining, int bound) {
    if (i == n) {
      if (remaining == 0)
        out.push_back(m);
      return;
    }
    const int slots = n - i - 1;
    for (int v = std::min(bound, remaining - slots); v >= 1; --v) {
      if (static_cast<long>(v) * (slots + 1) < remaining)
        break;
      m[static_cast<std::size_t>(i)] = v;
      fill(i + 1, remaining - v, v);
    }
  };
  fill(0, total, total);
  return out;
}

std::vector<Exponent> all_multidegrees(int n, int total) {
  std::vector<Exponent> out;
  Exponent cap(static_cast<std::size_t>(n), total - (n - 1));
  if (total < n)
    return out;
  bounded_compositions(cap, total - n, [&](const Exponent& x) {
    Exponent m = x;
    for (auto& v : m)
      ++v;
    out.push_back(std::move(m));
  });
  return out;
}

void check_formula_regime(int n, int d, int e) {
  if (n < 1)
    throw std::domain_error("need at least one variable");
  if (e < d - 1)
    throw std::domain_error("the character formulas are stated for e >= d - 1");
}

} // namespace

std::vector<LocalCohElement> block_basis(int n, int d, int e, const Exponent& m) {
  check_multidegree(n, m);
  std::vector<LocalCohElement> out;
  if (d < 0 || e < 0)
    return out;
  int sum = 0;
  for (int x : m)
    sum += x;
  if (sum != d + e + n)
    return out;
  Exponent cap = m;
  for (auto& x : cap)
    --x;
  bounded_compositions(cap, d, [&](const Exponent& a) {
    Exponent b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      b[i] = cap[i] - a[i];
    out.push_back({a, std::move(b)});
  });
  return out;
}

PrimeFieldMatrix omega_block(int n, int d, int e, const Exponent& m, Prime p) {
  const auto domain = block_basis(n, d, e, m);
  const auto codomain = block_basis(n, d - 1, e + 1, m);
  std::map<Exponent, std::size_t> row_of;
  for (std::size_t r = 0; r < codomain.size(); ++r)
    row_of.emplace(codomain[r].a, r);
  PrimeFieldMatrix matrix(p, codomain.size(), domain.size());
  for (std::size_t c = 0; c < domain.size(); ++c) {
    Exponent a = domain[c].a;
    for (std::size_t i = 0; i < a.size(); ++i) {
      // x_i y_i lowers the y-exponent; a class with a_i = 0 would need y_i^0
      // in the denominator and vanishes in local cohomology.
      if (a[i] == 0)
        continue;
      --a[i];
      matrix.add_to(row_of.at(a), c, 1);
      ++a[i];
    }
  }
  return matrix;
}

mpz_class module_dimension(int n, int d, int e) {
  if (d < 0 || e < 0)
    return 0;
  return binomial(n + d - 1, d) * binomial(n + e - 1, e);
}

IncidenceResult compute_incidence(int n, int d, int e, Prime p, const IncidenceOptions& options) {
  if (n < 2)
    throw std::domain_error("the incidence correspondence needs n >= 2");
  if (d < 0)
    throw std::domain_error("d must be non-negative");
  if (e <= -2)
    throw std::domain_error("e <= -2 is outside the supported regime");

  IncidenceResult result;
  result.n = n;
  result.d = d;
  result.e = e;
  result.p = p;
  result.h0 = LaurentPolynomial(n);
  result.h1 = LaurentPolynomial(n);
  result.domain_character = LaurentPolynomial(n);

  const int total = d + e + n;
  const std::vector<Exponent> computed = options.symmetry_reduction
                                             ? decreasing_multidegrees(n, total)
                                             : all_multidegrees(n, total);
  std::vector<BlockRecord> records(computed.size());
  parallel_for(computed.size(), options.parallel, [&](std::size_t i) {
    const PrimeFieldMatrix block = omega_block(n, d, e, computed[i], p);
    const std::size_t r = rank(block);
    records[i] = {computed[i], block.cols(), block.rows(), block.cols() - r, block.rows() - r};
  });

  // Expand orbit representatives and put every block in canonical order.
  std::map<Exponent, BlockRecord> all;
  for (const auto& record : records) {
    if (!options.symmetry_reduction) {
      all.emplace(record.multidegree, record);
      continue;
    }
    Exponent m = record.multidegree;
    std::sort(m.begin(), m.end());
    do {
      BlockRecord copy = record;
      copy.multidegree = m;
      all.emplace(m, std::move(copy));
    } while (std::next_permutation(m.begin(), m.end()));
  }

  result.euler_ok = true;
  mpz_class kernel_total = 0, cokernel_total = 0;
  for (auto& [m, record] : all) {
    Exponent weight = m;
    for (auto& x : weight)
      --x;
    result.h0.add_term(weight, static_cast<unsigned long>(record.kernel));
    result.h1.add_term(weight, static_cast<unsigned long>(record.cokernel));
    result.domain_character.add_term(m, static_cast<unsigned long>(record.domain_dim));
    kernel_total += static_cast<unsigned long>(record.kernel);
    cokernel_total += static_cast<unsigned long>(record.cokernel);
    if (record.domain_dim + record.cokernel != record.codomain_dim + record.kernel)
      result.euler_ok = false;
    result.blocks.push_back(std::move(record));
  }
  if (kernel_total - cokernel_total != module_dimension(n, d, e) - module_dimension(n, d - 1, e + 1))
    result.euler_ok = false;
  return result;
}

LaurentPolynomial h1_theorem_char(int n, int d, int e, Prime p) {
  const int q = static_cast<int>(p.value());
  if (!(q <= d && d < 2 * q))
    throw std::domain_error("the H^1 formula needs p <= d < 2p");
  check_formula_regime(n, d, e);
  return schur2_trunc(e + q, d - q, q, n);
}

LaurentPolynomial small_weights_conjecture_char(int n, int d, int e, Prime p) {
  const int q = static_cast<int>(p.value());
  const int t = d / q;
  if (!(t >= 1 && t < q))
    throw std::domain_error("the small-weights formula needs tp <= d < (t+1)p with 1 <= t < p");
  check_formula_regime(n, d, e);
  LaurentPolynomial sum(n);
  for (int a = 1; a <= t; ++a)
    for (int b = 1; b <= a; ++b)
      for (int j = 0; j <= a - b; ++j)
        sum += frobenius(schur2(a - b, j, n), q) *
               schur2_trunc(e + (b - j) * q, d - a * q, q, n);
  return sum;
}

LaurentPolynomial char2_conjecture_char(int n, int d, int e) {
  check_formula_regime(n, d, e);
  LaurentPolynomial sum(n);
  for (int q = 2; q <= d; q *= 2)
    for (int m = 0; (2 * m + 1) * q <= d; ++m)
      sum += frobenius(nim_poly(m, n), 2 * q) *
             schur2_trunc(e - (2 * m - 1) * q, d - (2 * m + 1) * q, q, n);
  return sum;
}

} // namespace flagcoh
