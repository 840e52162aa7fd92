#include "flagcoh/determinantal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace flagcoh {

int BigradedMonomial::a() const { return std::accumulate(u.begin(), u.end(), 0); }
int BigradedMonomial::b() const { return std::accumulate(v.begin(), v.end(), 0); }

Exponent BigradedMonomial::multidegree() const {
  Exponent m(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    m[i] = u[i] + v[i];
  return m;
}

std::string BigradedMonomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](char name, const Exponent& e) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      out << (first ? "" : "*") << name << i + 1;
      if (e[i] != 1)
        out << '^' << e[i];
      first = false;
    }
  };
  emit('x', u);
  emit('y', v);
  return first ? "1" : out.str();
}

namespace {

constexpr int kUnbounded = 1 << 20;

int exponent_cap(bool truncated, Prime p) {
  return truncated ? static_cast<int>(p.value()) - 1 : kUnbounded;
}

void check_parameters(int n, int a, int b) {
  if (n < 2)
    throw std::invalid_argument("the generic matrix needs n >= 2 columns");
  if (a < 0 || b < 0)
    throw std::invalid_argument("bidegree must be non-negative");
}

// All x with |x| = total and low_i <= x_i <= high_i, lexicographically.
void for_each_bounded(const Exponent& low, const Exponent& high, int total,
                      const std::function<void(const Exponent&)>& visit) {
  const std::size_t n = low.size();
  std::vector<long> min_suffix(n + 1, 0), max_suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    min_suffix[i] = min_suffix[i + 1] + low[i];
    max_suffix[i] = max_suffix[i + 1] + high[i];
  }
  Exponent x(n, 0);
  std::function<void(std::size_t, long)> fill = [&](std::size_t i, long remaining) {
    if (i == n) {
      if (remaining == 0)
        visit(x);
      return;
    }
    const long from = std::max<long>(low[i], remaining - max_suffix[i + 1]);
    const long to = std::min<long>(high[i], remaining - min_suffix[i + 1]);
    for (long value = from; value <= to; ++value) {
      x[i] = static_cast<int>(value);
      fill(i + 1, remaining - value);
    }
  };
  fill(0, total);
}

// Monomials x^u y^v with u + v = c, |u| = a and exponents at most cap,
// largest first.
std::vector<BigradedMonomial> block_monomials(const Exponent& c, int a, int cap) {
  Exponent low(c.size()), high(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    low[i] = std::max(0, c[i] - cap);
    high[i] = std::min(c[i], cap);
  }
  std::vector<BigradedMonomial> out;
  for_each_bounded(low, high, a, [&](const Exponent& u) {
    Exponent v(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      v[i] = c[i] - u[i];
    out.push_back({u, std::move(v)});
  });
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Exponent> block_multidegrees(int n, int total, int cap) {
  const int high = cap >= kUnbounded ? total : std::min(total, 2 * cap);
  std::vector<Exponent> out;
  for_each_bounded(Exponent(static_cast<std::size_t>(n), 0),
                   Exponent(static_cast<std::size_t>(n), high), total,
                   [&](const Exponent& c) { out.push_back(c); });
  return out;
}

using ModPolynomial = std::map<BigradedMonomial, Residue>;

// Product of the minors listed as (j, k) pairs, reduced mod p.
ModPolynomial minor_product(const std::vector<std::pair<int, int>>& minors, int n, Prime p) {
  ModPolynomial poly;
  poly[{Exponent(static_cast<std::size_t>(n), 0), Exponent(static_cast<std::size_t>(n), 0)}] =
      1;
  const Residue minus_one = neg_mod(1, p);
  for (auto [j, k] : minors) {
    ModPolynomial next;
    for (const auto& [m, c] : poly) {
      BigradedMonomial plus = m;
      ++plus.u[j];
      ++plus.v[k];
      Residue& s = next[plus];
      s = add_mod(s, c, p);
      BigradedMonomial minus = m;
      ++minus.u[k];
      ++minus.v[j];
      Residue& t = next[minus];
      t = add_mod(t, mul_mod(c, minus_one, p), p);
    }
    std::erase_if(next, [](const auto& term) { return term.second == 0; });
    poly = std::move(next);
  }
  return poly;
}

SliceBlock compute_block(int n, int a, int b, int i, int cap, Prime p, const Exponent& c,
                         const std::vector<std::pair<int, int>>& pairs, bool leading,
                         std::optional<std::uint64_t> seed, std::size_t block_index) {
  SliceBlock block;
  block.multidegree = c;
  block.monomials = block_monomials(c, a, cap);
  std::map<BigradedMonomial, std::size_t> column_of;
  for (std::size_t col = 0; col < block.monomials.size(); ++col)
    column_of.emplace(block.monomials[col], col);

  std::vector<std::vector<Residue>> rows;
  std::vector<std::pair<int, int>> chosen;
  Exponent used(static_cast<std::size_t>(n), 0);

  auto emit_products = [&] {
    const ModPolynomial product = minor_product(chosen, n, p);
    Exponent rest(c.size());
    for (std::size_t t = 0; t < c.size(); ++t)
      rest[t] = c[t] - used[t];
    for (const auto& multiplier : block_monomials(rest, a - i, cap)) {
      std::vector<Residue> row(block.monomials.size(), 0);
      bool nonzero = false;
      for (const auto& [m, coefficient] : product) {
        BigradedMonomial term = m;
        bool survives = true;
        for (std::size_t t = 0; t < c.size(); ++t) {
          term.u[t] += multiplier.u[t];
          term.v[t] += multiplier.v[t];
          survives = survives && term.u[t] <= cap && term.v[t] <= cap;
        }
        if (!survives)
          continue;
        Residue& slot = row[column_of.at(term)];
        slot = add_mod(slot, coefficient, p);
        nonzero = true;
      }
      if (nonzero)
        rows.push_back(std::move(row));
    }
  };

  std::function<void(std::size_t, int)> choose = [&](std::size_t from, int remaining) {
    if (remaining == 0) {
      emit_products();
      return;
    }
    for (std::size_t q = from; q < pairs.size(); ++q) {
      auto [j, k] = pairs[q];
      if (used[j] + 1 > c[j] || used[k] + 1 > c[k])
        continue;
      ++used[j];
      ++used[k];
      chosen.push_back(pairs[q]);
      choose(q, remaining - 1);
      chosen.pop_back();
      --used[j];
      --used[k];
    }
  };
  if (a - i >= 0 && b - i >= 0)
    choose(0, i);

  if (seed) {
    std::mt19937_64 rng(*seed + block_index);
    std::shuffle(rows.begin(), rows.end(), rng);
  }
  block.generators = PrimeFieldMatrix(p, rows.size(), block.monomials.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    std::copy(rows[r].begin(), rows[r].end(), block.generators.row(r).begin());

  if (leading) {
    std::vector<std::size_t> order(block.monomials.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const RrefResult reduced = rref_with_order(block.generators, order);
    block.rank = reduced.pivots.size();
    for (std::size_t col : reduced.pivots)
      block.leading.push_back(block.monomials[col]);
    std::sort(block.leading.begin(), block.leading.end(), std::greater<>());
  } else {
    block.rank = rank(block.generators);
  }
  return block;
}

std::string describe(const TwoRowTableau& t) {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < t.top.size(); ++k)
    out << (k ? " " : "") << t.top[k];
  out << " / ";
  for (std::size_t k = 0; k < t.bottom.size(); ++k)
    out << (k ? " " : "") << t.bottom[k];
  out << ']';
  return out.str();
}

std::string describe(const TermDifference& diff) {
  std::ostringstream out;
  out << "coefficient of " << LaurentPolynomial::monomial(diff.exponent).to_string() << " is "
      << diff.left.get_str() << " computed vs " << diff.right.get_str() << " predicted";
  return out.str();
}

} // namespace

std::vector<BigradedMonomial> bidegree_basis(int n, int a, int b, bool truncated, Prime p) {
  check_parameters(n, a, b);
  const int cap = exponent_cap(truncated, p);
  std::vector<BigradedMonomial> out;
  const Exponent zero(static_cast<std::size_t>(n), 0);
  const Exponent high(static_cast<std::size_t>(n), std::min(cap, std::max(a, b)));
  for_each_bounded(zero, high, a, [&](const Exponent& u) {
    for_each_bounded(zero, high, b, [&](const Exponent& v) { out.push_back({u, v}); });
  });
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::size_t IdealPowerSlice::dimension() const {
  std::size_t total = 0;
  for (const auto& block : blocks)
    total += block.rank;
  return total;
}

LaurentPolynomial IdealPowerSlice::character() const {
  LaurentPolynomial f(n);
  for (const auto& block : blocks)
    f.add_term(block.multidegree, static_cast<unsigned long>(block.rank));
  return f;
}

IdealPowerSlice ideal_power_slice(int n, int a, int b, int i, bool truncated, Prime p,
                                  const SliceOptions& options) {
  check_parameters(n, a, b);
  if (i < 0)
    throw std::invalid_argument("ideal power must be non-negative");
  IdealPowerSlice slice;
  slice.n = n;
  slice.a = a;
  slice.b = b;
  slice.i = i;
  slice.truncated = truncated;
  slice.p = p;

  const int cap = exponent_cap(truncated, p);
  std::vector<Exponent> multidegrees;
  for (auto& c : block_multidegrees(n, a + b, cap))
    if (!block_monomials(c, a, cap).empty())
      multidegrees.push_back(std::move(c));

  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      pairs.emplace_back(j, k);

  slice.blocks.resize(multidegrees.size());
  parallel_for(multidegrees.size(), options.parallel, [&](std::size_t index) {
    slice.blocks[index] = compute_block(n, a, b, i, cap, p, multidegrees[index], pairs,
                                        options.leading, options.shuffle_seed, index);
  });
  return slice;
}

LaurentPolynomial ring_character(int n, int a, int b, bool truncated, Prime p) {
  LaurentPolynomial f(n);
  for (const auto& m : bidegree_basis(n, a, b, truncated, p))
    f.add_term(m.multidegree(), 1);
  return f;
}

LaurentPolynomial rbar_character(int n, int a, int b, Prime p) {
  const int q = static_cast<int>(p.value());
  return h_trunc(a, q, n) * h_trunc(b, q, n);
}

LaurentPolynomial filtration_character(int n, int a, int b, int i, bool truncated, Prime p,
                                       const SliceOptions& options) {
  return ideal_power_slice(n, a, b, i, truncated, p, options).character() -
         ideal_power_slice(n, a, b, i + 1, truncated, p, options).character();
}

LaurentPolynomial filtration_prediction(int n, int a, int b, int i, bool truncated, Prime p) {
  if (i < 0 || i > std::min(a, b))
    return LaurentPolynomial(n);
  return truncated ? schur2_trunc(a + b - i, i, static_cast<int>(p.value()), n)
                   : schur2(a + b - i, i, n);
}

std::vector<BigradedMonomial> leading_monomials(const IdealPowerSlice& slice) {
  std::vector<BigradedMonomial> out;
  for (const auto& block : slice.blocks) {
    if (block.leading.size() != block.rank)
      throw std::logic_error("slice was computed without leading monomials");
    out.insert(out.end(), block.leading.begin(), block.leading.end());
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

BigradedMonomial tableau_monomial(const TwoRowTableau& t, int n) {
  BigradedMonomial m{Exponent(static_cast<std::size_t>(n), 0),
                     Exponent(static_cast<std::size_t>(n), 0)};
  for (int x : t.top)
    ++m.u.at(static_cast<std::size_t>(x - 1));
  for (int x : t.bottom)
    ++m.v.at(static_cast<std::size_t>(x - 1));
  return m;
}

BigradedPolynomial g_expansion(const TwoRowTableau& t, int n) {
  if (t.b() > t.a())
    throw std::invalid_argument("tableau rows must satisfy a >= b");
  BigradedPolynomial poly;
  poly[{Exponent(static_cast<std::size_t>(n), 0), Exponent(static_cast<std::size_t>(n), 0)}] = 1;
  for (int k = 0; k < t.b(); ++k) {
    const auto j = static_cast<std::size_t>(t.top[k] - 1);
    const auto l = static_cast<std::size_t>(t.bottom[k] - 1);
    BigradedPolynomial next;
    for (const auto& [m, c] : poly) {
      BigradedMonomial plus = m;
      ++plus.u.at(j);
      ++plus.v.at(l);
      next[plus] += c;
      BigradedMonomial minus = m;
      ++minus.u.at(l);
      ++minus.v.at(j);
      next[minus] -= c;
    }
    std::erase_if(next, [](const auto& term) { return term.second == 0; });
    poly = std::move(next);
  }
  BigradedPolynomial out;
  for (const auto& [m, c] : poly) {
    BigradedMonomial shifted = m;
    for (int k = t.b(); k < t.a(); ++k)
      ++shifted.u.at(static_cast<std::size_t>(t.top[k] - 1));
    out[shifted] += c;
  }
  return out;
}

BigradedMonomial leading_monomial(const BigradedPolynomial& f) {
  for (auto it = f.rbegin(); it != f.rend(); ++it)
    if (it->second != 0)
      return it->first;
  throw std::domain_error("the zero polynomial has no leading monomial");
}

FiltrationReport check_filtration(int n, int a, int b, Prime p, bool truncated,
                                  const SliceOptions& options) {
  check_parameters(n, a, b);
  FiltrationReport report;
  report.n = n;
  report.a = a;
  report.b = b;
  report.p = p;
  report.truncated = truncated;
  report.hypothesis_holds = !truncated || a - b >= static_cast<int>(p.value()) - 1;

  const int top = std::min(a, b) + 1;
  std::vector<LaurentPolynomial> slices;
  for (int i = 0; i <= top + 1; ++i)
    slices.push_back(ideal_power_slice(n, a, b, i, truncated, p, options).character());

  report.comparison_agrees = true;
  for (int i = 0; i <= top; ++i) {
    FiltrationLevel level;
    level.i = i;
    level.computed = slices[i] - slices[i + 1];
    level.predicted = filtration_prediction(n, a, b, i, truncated, p);
    level.difference = first_difference(level.computed, level.predicted);
    if (level.difference && report.comparison_agrees) {
      report.comparison_agrees = false;
      report.witness = "level i=" + std::to_string(i) + ": " + describe(*level.difference);
    }
    report.levels.push_back(std::move(level));
  }
  if (!report.hypothesis_holds)
    report.status = Status::outside_hypothesis;
  else
    report.status = report.comparison_agrees ? Status::agree : Status::disagree;
  return report;
}

FiltrationReport check_iadic_conjecture(int n, int a, int b, Prime p, const SliceOptions& options) {
  return check_filtration(n, a, b, p, true, options);
}

LeadTermsReport check_lead_terms(int n, int a, int b, Prime p, bool truncated,
                                 const SliceOptions& options) {
  check_parameters(n, a, b);
  if (a < b)
    throw std::invalid_argument("tableau shapes need a >= b");
  LeadTermsReport report;
  report.n = n;
  report.a = a;
  report.b = b;
  report.p = p;
  report.truncated = truncated;
  report.hypothesis_holds = !truncated || a - b >= static_cast<int>(p.value()) - 1;
  report.tableaux = truncated ? enumerate_pssyt(n, a, b, p) : enumerate_ssyt(n, a, b);

  SliceOptions with_leading = options;
  with_leading.leading = true;
  report.leading = leading_monomials(ideal_power_slice(n, a, b, b, truncated, p, with_leading));

  const std::set<BigradedMonomial> pivots(report.leading.begin(), report.leading.end());
  std::set<BigradedMonomial> predicted;
  for (const auto& t : report.tableaux) {
    const BigradedMonomial m = tableau_monomial(t, n);
    predicted.insert(m);
    if (!pivots.contains(m))
      report.missing.push_back(t);
  }
  report.sets_equal = predicted == pivots;

  if (!report.missing.empty()) {
    const auto& t = report.missing.front();
    report.witness = "M_T = " + tableau_monomial(t, n).to_string() + " for T = " + describe(t) +
                     " is not a leading monomial";
  } else if (!truncated && !report.sets_equal) {
    for (const auto& m : report.leading)
      if (!predicted.contains(m)) {
        report.witness = "leading monomial " + m.to_string() + " is not M_T for any tableau";
        break;
      }
  }
  const bool agrees = report.missing.empty() && (truncated || report.sets_equal);
  if (!report.hypothesis_holds)
    report.status = Status::outside_hypothesis;
  else
    report.status = agrees ? Status::agree : Status::disagree;
  return report;
}

} // namespace flagcoh
