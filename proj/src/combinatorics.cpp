#include "flagcoh/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace flagcoh {

WeightSequence::WeightSequence(std::vector<std::int64_t> weights, bool allow_negative_first)
    : w_(std::move(weights)) {
  if (w_.empty())
    throw std::invalid_argument("a weight sequence needs at least w0");
  if (w_[0] < 0 && !allow_negative_first)
    throw std::invalid_argument("w0 is negative but negative first weight is not allowed");
  for (std::size_t i = 1; i < w_.size(); ++i)
    if (w_[i] < 0)
      throw std::invalid_argument("only the first weight may be negative");
}

std::int64_t WeightSequence::tail_sum() const {
  return std::accumulate(w_.begin() + 1, w_.end(), std::int64_t{0});
}

std::int64_t WeightSequence::total() const { return w_[0] + tail_sum(); }

std::string WeightSequence::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < w_.size(); ++i)
    out << (i ? "," : "") << w_[i];
  out << ')';
  return out.str();
}

WeightSequence WeightSequence::hook(std::int64_t w0, int d) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(d) + 1, 1);
  w[0] = w0;
  return WeightSequence(std::move(w), true);
}

std::vector<SubsetMask> subsets_of_size(int d, int k) {
  if (d < 0 || d > kMaxEdges)
    throw std::invalid_argument("subset universe size out of range");
  std::vector<SubsetMask> out;
  if (k < 0 || k > d)
    return out;
  if (k == 0)
    return {0};
  // Gosper's hack walks the k-subsets in increasing numeric order.
  const std::uint64_t end = std::uint64_t{1} << d;
  for (std::uint64_t m = (std::uint64_t{1} << k) - 1; m < end;) {
    out.push_back(static_cast<SubsetMask>(m));
    const std::uint64_t low = m & -m;
    const std::uint64_t ripple = m + low;
    m = ripple | (((m ^ ripple) >> 2) / low);
  }
  return out;
}

mpz_class binomial(std::int64_t m, std::int64_t k) {
  if (k < 0)
    return 0;
  mpz_class result;
  if (m >= 0) {
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    return result;
  }
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(-m + k - 1),
               static_cast<unsigned long>(k));
  return (k % 2 == 0) ? result : mpz_class(-result);
}

namespace {

// C(m, k) mod p for 0 <= k, m < p.
Residue small_binomial(std::uint64_t m, std::uint64_t k, Prime p) {
  if (k > m)
    return 0;
  k = std::min(k, m - k);
  Residue num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num = mul_mod(num, static_cast<Residue>(m - i), p);
    den = mul_mod(den, static_cast<Residue>(i + 1), p);
  }
  return mul_mod(num, inv_mod(den, p), p);
}

} // namespace

Residue binom_mod_p(std::int64_t m, std::int64_t k, Prime p) {
  if (k < 0)
    return 0;
  if (m < 0) {
    Residue r = binom_mod_p(-m + k - 1, k, p);
    return (k % 2 == 0) ? r : neg_mod(r, p);
  }
  if (k > m)
    return 0;
  const std::uint64_t q = p.value();
  auto mm = static_cast<std::uint64_t>(m);
  auto kk = static_cast<std::uint64_t>(k);
  Residue result = 1 % p.value();
  while (kk > 0) {
    result = mul_mod(result, small_binomial(mm % q, kk % q, p), p);
    if (result == 0)
      return 0;
    mm /= q;
    kk /= q;
  }
  return result;
}

IntervalData interval_data(const WeightSequence& w, SubsetMask J, int j) {
  const int d = w.length();
  if (j < 1 || j > d || !(J >> (j - 1) & 1u))
    throw std::invalid_argument("interval_data: j must be an edge in J");
  if (d < 32 && (J >> d) != 0)
    throw std::invalid_argument("interval_data: J is not a subset of [d]");
  auto in_J = [&](int edge) { return edge >= 1 && edge <= d && (J >> (edge - 1) & 1u); };

  // Edge e joins vertices e-1 and e.
  int left = j - 1;
  while (in_J(left))
    --left;
  int right = j;
  while (in_J(right + 1))
    ++right;

  IntervalData data{0, 0, 0};
  for (int v = left; v <= right; ++v)
    data.total += w[static_cast<std::size_t>(v)];
  for (int v = j; v <= right; ++v)
    data.right += w[static_cast<std::size_t>(v)];
  for (int i = 1; i < j; ++i)
    if (!in_J(i))
      ++data.sign_exponent;
  return data;
}

std::int64_t p_index(std::int64_t m, Prime p) {
  const std::int64_t q = p.value();
  if (m < 0 || (m % q != 0 && m % q != 1))
    throw std::domain_error("p-index needs m >= 0 with m = 0 or 1 mod p; got m=" +
                            std::to_string(m) + ", p=" + std::to_string(q));
  return 2 * (m / q) + m % q;
}

std::int64_t p_index(const DigitTuple& alpha, Prime p) {
  std::int64_t total = 0;
  for (auto a : alpha)
    total += p_index(a, p);
  return total;
}

std::vector<DigitTuple> enumerate_A(Prime p, std::int64_t d) {
  if (d < 0)
    return {};
  const std::int64_t q = p.value();
  std::vector<DigitTuple> out;
  DigitTuple prefix;
  // a_0 = d mod p (if admissible), then d mod p + p, ...; recurse on the rest.
  std::function<void(std::int64_t)> extend = [&](std::int64_t rest) {
    if (rest == 0) {
      DigitTuple t = prefix;
      while (!t.empty() && t.back() == 0)
        t.pop_back();
      out.push_back(std::move(t));
      return;
    }
    const std::int64_t residue = rest % q;
    if (residue != 0 && residue != 1)
      return;
    for (std::int64_t a0 = residue; a0 <= rest; a0 += q) {
      prefix.push_back(a0);
      extend((rest - a0) / q);
      prefix.pop_back();
    }
  };
  extend(d);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t nim_sum(std::span<const std::uint64_t> values) {
  std::uint64_t x = 0;
  for (auto v : values)
    x ^= v;
  return x;
}

// ---------------------------------------------------------------------------
// Ribbons

namespace {

void check_partition(const Partition& lambda, const char* what) {
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] < 0 || (i > 0 && lambda[i] > lambda[i - 1]))
      throw std::domain_error(std::string(what) + " is not a partition");
}

} // namespace

WeightSequence ribbon_to_columns(const RibbonShape& shape) {
  check_partition(shape.outer, "outer shape");
  check_partition(shape.inner, "inner shape");
  if (shape.inner.size() > shape.outer.size())
    throw std::domain_error("inner shape longer than outer shape");

  std::set<std::pair<int, int>> cells; // (row, column), both 1-based
  for (std::size_t r = 0; r < shape.outer.size(); ++r) {
    const int lo = r < shape.inner.size() ? shape.inner[r] : 0;
    if (lo > shape.outer[r])
      throw std::domain_error("inner shape not contained in outer shape");
    for (int c = lo + 1; c <= shape.outer[r]; ++c)
      cells.emplace(static_cast<int>(r) + 1, c);
  }
  if (cells.empty())
    throw std::domain_error("empty skew shape");

  for (auto [r, c] : cells)
    if (cells.count({r, c + 1}) && cells.count({r + 1, c}) && cells.count({r + 1, c + 1}))
      throw std::domain_error("skew shape contains a 2x2 square");

  std::set<std::pair<int, int>> reached{*cells.begin()};
  std::queue<std::pair<int, int>> frontier;
  frontier.push(*cells.begin());
  while (!frontier.empty()) {
    auto [r, c] = frontier.front();
    frontier.pop();
    for (auto next : {std::pair{r + 1, c}, std::pair{r - 1, c}, std::pair{r, c + 1},
                      std::pair{r, c - 1}})
      if (cells.count(next) && reached.insert(next).second)
        frontier.push(next);
  }
  if (reached.size() != cells.size())
    throw std::domain_error("skew shape is not connected");

  int first = cells.begin()->second, last = first;
  for (auto [r, c] : cells) {
    first = std::min(first, c);
    last = std::max(last, c);
  }
  std::vector<std::int64_t> sizes(static_cast<std::size_t>(last - first + 1), 0);
  for (auto [r, c] : cells)
    ++sizes[static_cast<std::size_t>(c - first)];
  return WeightSequence(std::move(sizes));
}

RibbonShape columns_to_ribbon(const WeightSequence& w) {
  const int d = w.length();
  for (auto x : w.values())
    if (x < 1)
      throw std::domain_error("column sizes of a ribbon must be positive");
  // Consecutive columns share exactly one row; the leftmost column is lowest.
  const auto rows = static_cast<int>(w.total() - d);
  std::vector<int> leftmost(static_cast<std::size_t>(rows) + 1, 0);
  std::vector<int> rightmost(static_cast<std::size_t>(rows) + 1, 0);
  int bottom = rows;
  for (int c = 0; c <= d; ++c) {
    const int top = bottom - static_cast<int>(w[static_cast<std::size_t>(c)]) + 1;
    for (int r = top; r <= bottom; ++r) {
      if (leftmost[static_cast<std::size_t>(r)] == 0)
        leftmost[static_cast<std::size_t>(r)] = c + 1;
      rightmost[static_cast<std::size_t>(r)] = c + 1;
    }
    bottom = top;
  }
  RibbonShape shape;
  for (int r = 1; r <= rows; ++r) {
    shape.outer.push_back(rightmost[static_cast<std::size_t>(r)]);
    shape.inner.push_back(leftmost[static_cast<std::size_t>(r)] - 1);
  }
  while (!shape.inner.empty() && shape.inner.back() == 0)
    shape.inner.pop_back();
  return shape;
}

// ---------------------------------------------------------------------------
// Tableaux

std::vector<int> TwoRowTableau::content(int n) const {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int x : top)
    ++e.at(static_cast<std::size_t>(x - 1));
  for (int x : bottom)
    ++e.at(static_cast<std::size_t>(x - 1));
  return e;
}

namespace {

bool rows_weakly_increasing(const TwoRowTableau& t) {
  return std::is_sorted(t.top.begin(), t.top.end()) &&
         std::is_sorted(t.bottom.begin(), t.bottom.end());
}

} // namespace

bool is_semistandard(const TwoRowTableau& t) {
  if (t.b() > t.a() || !rows_weakly_increasing(t))
    return false;
  for (int i = 0; i < t.b(); ++i)
    if (!(t.top[static_cast<std::size_t>(i)] < t.bottom[static_cast<std::size_t>(i)]))
      return false;
  return true;
}

bool is_p_semistandard(const TwoRowTableau& t, Prime p) {
  const int q = static_cast<int>(p.value());
  if (t.b() > t.a() || !rows_weakly_increasing(t))
    return false;
  const auto& u = t.top;
  const auto& v = t.bottom;
  for (int i = 0; i < t.b(); ++i)
    if (u[static_cast<std::size_t>(i)] > v[static_cast<std::size_t>(i)])
      return false;

  // Constant runs within a row have length at most p - 1.
  auto runs_ok = [q](const std::vector<int>& row) {
    for (std::size_t i = 0; i + static_cast<std::size_t>(q) - 1 < row.size(); ++i)
      if (!(row[i] < row[i + static_cast<std::size_t>(q) - 1]))
        return false;
    return true;
  };
  if (!runs_ok(u) || !runs_ok(v))
    return false;

  // Equal entries stacked in column j need at least p copies of that value
  // counting u_j..u_r rightwards and v_s..v_j leftwards.
  for (int j = 0; j < t.b(); ++j) {
    const auto sj = static_cast<std::size_t>(j);
    if (u[sj] != v[sj])
      continue;
    std::size_t r = sj;
    while (r + 1 < u.size() && u[r + 1] == u[sj])
      ++r;
    std::size_t s = sj;
    while (s > 0 && v[s - 1] == v[sj])
      --s;
    if ((r - sj + 1) + (sj - s + 1) < static_cast<std::size_t>(q))
      return false;
  }
  return true;
}

namespace {

// Weakly increasing words of the given length over 1..n, lexicographic.
void weakly_increasing_words(int n, int length, std::vector<std::vector<int>>& out) {
  std::vector<int> word;
  std::function<void(int)> extend = [&](int lowest) {
    if (static_cast<int>(word.size()) == length) {
      out.push_back(word);
      return;
    }
    for (int x = lowest; x <= n; ++x) {
      word.push_back(x);
      extend(x);
      word.pop_back();
    }
  };
  extend(1);
}

template <class Accept>
std::vector<TwoRowTableau> enumerate_two_row(int n, int a, int b, Accept accept) {
  if (a < b || b < 0 || n < 1)
    throw std::invalid_argument("two-row shape needs a >= b >= 0 and n >= 1");
  std::vector<std::vector<int>> tops, bottoms;
  weakly_increasing_words(n, a, tops);
  weakly_increasing_words(n, b, bottoms);
  std::vector<TwoRowTableau> out;
  for (const auto& u : tops)
    for (const auto& v : bottoms) {
      TwoRowTableau t{u, v};
      if (accept(t))
        out.push_back(std::move(t));
    }
  return out;
}

} // namespace

std::vector<TwoRowTableau> enumerate_ssyt(int n, int a, int b) {
  return enumerate_two_row(n, a, b, [](const TwoRowTableau& t) { return is_semistandard(t); });
}

std::vector<TwoRowTableau> enumerate_pssyt(int n, int a, int b, Prime p) {
  return enumerate_two_row(n, a, b,
                           [p](const TwoRowTableau& t) { return is_p_semistandard(t, p); });
}

} // namespace flagcoh
