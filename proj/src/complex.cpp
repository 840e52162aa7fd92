#include "flagcoh/complex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace flagcoh {

namespace {

// binomial_table[m][k] = C(m, k) for m <= kMaxEdges.
const std::vector<std::vector<std::size_t>>& binomial_table() {
  static const auto table = [] {
    std::vector<std::vector<std::size_t>> t(kMaxEdges + 1,
                                            std::vector<std::size_t>(kMaxEdges + 2, 0));
    for (int m = 0; m <= kMaxEdges; ++m) {
      t[m][0] = 1;
      for (int k = 1; k <= m; ++k)
        t[m][k] = t[m - 1][k - 1] + (k <= m - 1 ? t[m - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

void check_length(const WeightSequence& w) {
  if (w.length() > kMaxEdges)
    throw std::invalid_argument("complexes are limited to " + std::to_string(kMaxEdges) +
                                " edges");
}

// Calls emit(J minus j, interval data) for every term of the boundary of e_J.
template <class Emit>
void for_each_term(const WeightSequence& w, SubsetMask J, Emit&& emit) {
  for (SubsetMask rest = J; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest) + 1;
    const IntervalData data = interval_data(w, J, j);
    emit(J & ~(SubsetMask{1} << (j - 1)), data);
  }
}

template <class Complex>
void check_square_zero(const Complex& c) {
  for (int k = 2; k <= c.length(); ++k)
    if (!composes_to_zero(c.boundary(k), c.boundary(k - 1)))
      throw std::logic_error("boundary maps " + std::to_string(k) + " and " +
                             std::to_string(k - 1) + " do not compose to zero");
}

std::vector<std::size_t> chain_dims(int d) {
  std::vector<std::size_t> dims(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k)
    dims[static_cast<std::size_t>(k)] = binomial_table()[d][k];
  return dims;
}

std::int64_t checked_power(std::int64_t base, int exponent) {
  std::int64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (result > INT64_MAX / base)
      throw std::overflow_error("prime power does not fit in 64 bits");
    result *= base;
  }
  return result;
}

std::int64_t euler_characteristic(const PoincarePolynomial& h) {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < h.coefficients.size(); ++i)
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(h.coefficients[i]);
  return chi;
}

std::string join(const std::vector<mpz_class>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i)
    out << (i ? "," : "") << v[i].get_str();
  out << ']';
  return out.str();
}

// Describes the first place two rank tables differ.
std::optional<std::string> table_difference(const RankTable& a, const RankTable& b,
                                            const std::string& label) {
  for (std::size_t k = 0; k < std::max(a.dims.size(), b.dims.size()); ++k) {
    std::size_t x = k < a.dims.size() ? a.dims[k] : 0;
    std::size_t y = k < b.dims.size() ? b.dims[k] : 0;
    if (x != y)
      return label + ": dim C_" + std::to_string(k) + " is " + std::to_string(x) + " vs " +
             std::to_string(y);
  }
  for (std::size_t k = 0; k < std::max(a.ranks.size(), b.ranks.size()); ++k) {
    std::size_t x = k < a.ranks.size() ? a.ranks[k] : 0;
    std::size_t y = k < b.ranks.size() ? b.ranks[k] : 0;
    if (x != y)
      return label + ": rank of boundary out of C_" + std::to_string(k + 1) + " is " +
             std::to_string(x) + " vs " + std::to_string(y);
  }
  return std::nullopt;
}

std::optional<std::string> homology_difference(const PoincarePolynomial& a,
                                               const PoincarePolynomial& b) {
  const std::size_t n = std::max(a.coefficients.size(), b.coefficients.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i])
      return "h_" + std::to_string(i) + " is " + std::to_string(a[i]) + " vs " +
             std::to_string(b[i]);
  return std::nullopt;
}

} // namespace

std::size_t subset_index(SubsetMask J) {
  // Subsets of one size in numeric order are in colex order, ranked by the
  // combinatorial number system.
  std::size_t index = 0;
  int i = 1;
  for (SubsetMask rest = J; rest != 0; rest &= rest - 1, ++i)
    index += binomial_table()[std::countr_zero(rest)][i];
  return index;
}

ModComplex build_complex(const WeightSequence& w, Prime p) {
  check_length(w);
  const int d = w.length();
  ModComplex c;
  c.dims = chain_dims(d);
  for (int k = 1; k <= d; ++k) {
    const auto subsets = subsets_of_size(d, k);
    SparseModMatrix m(p, c.dims[k - 1], c.dims[k]);
    for (std::size_t col = 0; col < subsets.size(); ++col) {
      std::vector<SparseEntry> entries;
      for_each_term(w, subsets[col], [&](SubsetMask row, const IntervalData& data) {
        Residue v = binom_mod_p(data.total, data.right, p);
        if (data.sign_exponent % 2 != 0)
          v = neg_mod(v, p);
        entries.push_back({static_cast<std::uint32_t>(subset_index(row)), v});
      });
      std::sort(entries.begin(), entries.end(),
                [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
      m.set_column(col, std::move(entries));
    }
    c.differentials.push_back(std::move(m));
  }
  check_square_zero(c);
  return c;
}

IntegerComplex build_complex(const WeightSequence& w, Integers) {
  check_length(w);
  const int d = w.length();
  IntegerComplex c;
  c.dims = chain_dims(d);
  for (int k = 1; k <= d; ++k) {
    const auto subsets = subsets_of_size(d, k);
    SparseIntegerMatrix m(c.dims[k - 1], c.dims[k]);
    for (std::size_t col = 0; col < subsets.size(); ++col) {
      std::vector<IntegerEntry> entries;
      for_each_term(w, subsets[col], [&](SubsetMask row, const IntervalData& data) {
        mpz_class v = binomial(data.total, data.right);
        if (data.sign_exponent % 2 != 0)
          v = -v;
        entries.push_back({static_cast<std::uint32_t>(subset_index(row)), std::move(v)});
      });
      std::sort(entries.begin(), entries.end(),
                [](const IntegerEntry& a, const IntegerEntry& b) { return a.index < b.index; });
      m.set_column(col, std::move(entries));
    }
    c.differentials.push_back(std::move(m));
  }
  check_square_zero(c);
  return c;
}

ModComplex reduce(const IntegerComplex& c, Prime p) {
  ModComplex out;
  out.dims = c.dims;
  for (const auto& m : c.differentials)
    out.differentials.push_back(m.reduce(p));
  return out;
}

bool PoincarePolynomial::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](std::size_t h) { return h == 0; });
}

PoincarePolynomial PoincarePolynomial::normalized() const {
  PoincarePolynomial out = *this;
  while (!out.coefficients.empty() && out.coefficients.back() == 0)
    out.coefficients.pop_back();
  return out;
}

std::string PoincarePolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] == 0)
      continue;
    out << (first ? "" : " + ");
    first = false;
    if (i == 0) {
      out << coefficients[i];
      continue;
    }
    if (coefficients[i] != 1)
      out << coefficients[i] << '*';
    out << 't';
    if (i > 1)
      out << '^' << i;
  }
  return first ? "0" : out.str();
}

PoincarePolynomial RankTable::homology() const {
  PoincarePolynomial h;
  h.coefficients.resize(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    std::size_t out_rank = i >= 1 ? ranks[i - 1] : 0;
    std::size_t in_rank = i < ranks.size() ? ranks[i] : 0;
    h.coefficients[i] = dims[i] - out_rank - in_rank;
  }
  return h;
}

RankTable rank_table(const ModComplex& c, Parallelism parallel) {
  RankTable t;
  t.dims = c.dims;
  t.ranks.assign(c.differentials.size(), 0);
  parallel_for(c.differentials.size(), parallel,
               [&](std::size_t k) { t.ranks[k] = rank(c.differentials[k]); });
  return t;
}

PoincarePolynomial homology_dims(const ModComplex& c, Parallelism parallel) {
  return rank_table(c, parallel).homology();
}

PoincarePolynomial poincare_formula_all_ones(int d, Prime p) {
  if (d < 0)
    throw std::invalid_argument("d must be non-negative");
  PoincarePolynomial h;
  h.coefficients.assign(static_cast<std::size_t>(d) + 1, 0);
  for (const auto& alpha : enumerate_A(p, d + 1)) {
    const std::int64_t degree = d + 1 - p_index(alpha, p);
    if (degree < 0 || degree > d)
      throw std::logic_error("p-index outside the expected range");
    ++h.coefficients[static_cast<std::size_t>(degree)];
  }
  return h;
}

WeightSequence lucas_reduce(const WeightSequence& w, Prime p) {
  if (w[0] < 0)
    throw std::invalid_argument("Lucas reduction needs w0 >= 0");
  std::vector<std::int64_t> values(w.values().begin(), w.values().end());
  const std::int64_t tail = w.tail_sum();
  const auto base = static_cast<std::int64_t>(p.value());
  for (;;) {
    std::int64_t power = 1;
    while (power <= values[0] / base)
      power *= base;
    if (power > values[0] || power <= tail)
      break;
    values[0] -= power;
  }
  return WeightSequence(std::move(values));
}

InvolutionReport check_involution(std::int64_t w0, int d, Prime p) {
  if (d < 0)
    throw std::invalid_argument("d must be non-negative");
  InvolutionReport report;
  report.w0 = w0;
  report.d = d;
  report.p = p;
  report.partner = -w0 - 2 * static_cast<std::int64_t>(d);
  const auto base = static_cast<std::int64_t>(p.value());
  std::int64_t q = 1;
  for (int r = 0; q <= w0 + 2 * static_cast<std::int64_t>(d); ++r)
    q = checked_power(base, r + 1);
  report.reduced_partner = q + report.partner;

  const auto original = WeightSequence::hook(w0, d);
  const auto partner = WeightSequence::hook(report.partner, d);
  report.original = rank_table(build_complex(original, p));
  report.partner_table = rank_table(build_complex(partner, p));
  report.reduced_table = rank_table(build_complex(WeightSequence::hook(report.reduced_partner, d), p));

  report.witness = table_difference(report.original, report.partner_table, "partner over F_p");
  if (!report.witness)
    report.witness =
        table_difference(report.original, report.reduced_table, "reduced partner over F_p");
  report.field_agrees = !report.witness;

  std::size_t largest = 1;
  for (std::size_t dim : report.original.dims)
    largest = std::max(largest, dim);
  report.smith_checked = largest <= kSmithSizeLimit;
  if (report.smith_checked) {
    const auto a = build_complex(original, Integers{});
    const auto b = build_complex(partner, Integers{});
    report.smith_agrees = true;
    for (int k = 1; k <= d && report.smith_agrees; ++k) {
      auto sa = smith_invariants(a.boundary(k).to_dense());
      auto sb = smith_invariants(b.boundary(k).to_dense());
      if (sa != sb) {
        report.smith_agrees = false;
        if (!report.witness)
          report.witness = "Smith invariants of the boundary out of C_" + std::to_string(k) +
                           " are " + join(sa) + " vs " + join(sb);
      }
    }
  }
  report.status = report.field_agrees && (!report.smith_checked || report.smith_agrees)
                      ? Status::agree
                      : Status::disagree;
  return report;
}

ModComplex tensor_product(const ModComplex& a, const ModComplex& b) {
  if (a.differentials.empty() && a.dims.empty())
    throw std::invalid_argument("empty complex");
  const Prime p = !a.differentials.empty()   ? a.differentials.front().prime()
                  : !b.differentials.empty() ? b.differentials.front().prime()
                                             : Prime(2);
  const int la = a.length(), lb = b.length(), length = la + lb;
  auto dim_a = [&](int k) { return k >= 0 && k <= la ? a.dims[k] : std::size_t{0}; };
  auto dim_b = [&](int k) { return k >= 0 && k <= lb ? b.dims[k] : std::size_t{0}; };

  // offset[k][k1]: position of the first pair of bidegree (k1, k - k1).
  std::vector<std::vector<std::size_t>> offset(static_cast<std::size_t>(length) + 1);
  ModComplex t;
  t.dims.assign(static_cast<std::size_t>(length) + 1, 0);
  for (int k = 0; k <= length; ++k) {
    offset[k].assign(static_cast<std::size_t>(k) + 2, 0);
    for (int k1 = 0; k1 <= k; ++k1)
      offset[k][k1 + 1] = offset[k][k1] + dim_a(k1) * dim_b(k - k1);
    t.dims[k] = offset[k][k + 1];
  }

  for (int k = 1; k <= length; ++k) {
    SparseModMatrix m(p, t.dims[k - 1], t.dims[k]);
    for (int k1 = 0; k1 <= k; ++k1) {
      const int k2 = k - k1;
      for (std::size_t x = 0; x < dim_a(k1); ++x)
        for (std::size_t y = 0; y < dim_b(k2); ++y) {
          std::vector<SparseEntry> entries;
          if (k1 >= 1)
            for (const auto& e : a.boundary(k1).column(x))
              entries.push_back({static_cast<std::uint32_t>(offset[k - 1][k1 - 1] +
                                                            e.index * dim_b(k2) + y),
                                 e.value});
          if (k2 >= 1)
            for (const auto& e : b.boundary(k2).column(y))
              entries.push_back(
                  {static_cast<std::uint32_t>(offset[k - 1][k1] + x * dim_b(k2 - 1) + e.index),
                   k1 % 2 == 0 ? e.value : neg_mod(e.value, p)});
          std::sort(entries.begin(), entries.end(),
                    [](const SparseEntry& l, const SparseEntry& r) { return l.index < r.index; });
          m.set_column(offset[k][k1] + x * dim_b(k2) + y, std::move(entries));
        }
    }
    t.differentials.push_back(std::move(m));
  }
  check_square_zero(t);
  return t;
}

SesReport ses_dimension_check(const WeightSequence& w, int split, Prime p) {
  const int d = w.length();
  if (split < 0 || split >= d)
    throw std::invalid_argument("split index must satisfy 0 <= i < d");
  const auto v = w.values();
  const bool negative_first = v[0] < 0;
  WeightSequence left(std::vector<std::int64_t>(v.begin(), v.begin() + split + 1), negative_first);
  WeightSequence right(std::vector<std::int64_t>(v.begin() + split + 1, v.end()));
  std::vector<std::int64_t> merged_values(v.begin(), v.end());
  merged_values[split] += merged_values[split + 1];
  merged_values.erase(merged_values.begin() + split + 1);
  WeightSequence merged(std::move(merged_values), negative_first);

  const ModComplex whole = build_complex(w, p);
  const ModComplex sub = tensor_product(build_complex(left, p), build_complex(right, p));
  const ModComplex quotient_base = build_complex(merged, p);

  SesReport report;
  report.split = split;
  report.whole = homology_dims(whole);
  report.sub = homology_dims(sub);
  report.merged = homology_dims(quotient_base);

  report.dimensions_ok = true;
  for (int k = 0; k <= d && report.dimensions_ok; ++k) {
    std::size_t sub_dim = k < static_cast<int>(sub.dims.size()) ? sub.dims[k] : 0;
    std::size_t quotient_dim = k >= 1 ? quotient_base.dims[k - 1] : 0;
    if (whole.dims[k] != sub_dim + quotient_dim) {
      report.dimensions_ok = false;
      report.witness = "dim C_" + std::to_string(k) + " = " + std::to_string(whole.dims[k]) +
                       " but sub + quotient = " + std::to_string(sub_dim + quotient_dim);
    }
  }

  const std::int64_t chi_whole = euler_characteristic(report.whole);
  const std::int64_t chi_sub = euler_characteristic(report.sub);
  const std::int64_t chi_merged = euler_characteristic(report.merged);
  report.euler_ok = chi_whole == chi_sub - chi_merged;
  if (!report.euler_ok && !report.witness)
    report.witness = "Euler characteristics " + std::to_string(chi_whole) + " vs " +
                     std::to_string(chi_sub) + " - " + std::to_string(chi_merged);

  report.subadditive_ok = true;
  for (int k = 0; k <= d && report.subadditive_ok; ++k) {
    const std::size_t bound =
        report.sub[static_cast<std::size_t>(k)] + (k >= 1 ? report.merged[k - 1] : 0);
    if (report.whole[static_cast<std::size_t>(k)] > bound) {
      report.subadditive_ok = false;
      if (!report.witness)
        report.witness = "h_" + std::to_string(k) + " = " +
                         std::to_string(report.whole[static_cast<std::size_t>(k)]) +
                         " exceeds " + std::to_string(bound);
    }
  }
  report.status = report.dimensions_ok && report.euler_ok && report.subadditive_ok
                      ? Status::agree
                      : Status::disagree;
  return report;
}

std::map<std::int64_t, std::size_t> stable_hook_cohomology(std::int64_t w0, int d, Prime p) {
  if (d < 0)
    throw std::invalid_argument("d must be non-negative");
  const PoincarePolynomial h = homology_dims(build_complex(WeightSequence::hook(w0, d), p));
  std::map<std::int64_t, std::size_t> result;
  for (int i = 0; i <= d; ++i)
    result[d + w0 - i] = h[static_cast<std::size_t>(i)];
  return result;
}

PeriodicityReport check_stable_periodicity_hook(std::int64_t w0, int d, Prime p, int r) {
  if (d < 0 || r < 0)
    throw std::invalid_argument("d and r must be non-negative");
  PeriodicityReport report;
  report.q = checked_power(static_cast<std::int64_t>(p.value()), r);
  if (report.q <= d)
    throw std::domain_error("periodicity needs p^r > d");
  report.base = homology_dims(build_complex(WeightSequence::hook(w0, d), p));
  report.shifted = homology_dims(build_complex(WeightSequence::hook(w0 + report.q, d), p));
  report.witness = homology_difference(report.base, report.shifted);
  report.status = report.witness ? Status::disagree : Status::agree;
  return report;
}

} // namespace flagcoh
