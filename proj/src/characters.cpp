#include "flagcoh/characters.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace flagcoh {

LaurentPolynomial::LaurentPolynomial(int variables) : n_(variables) {
  if (variables < 1)
    throw std::invalid_argument("a character ring needs at least one variable");
}

LaurentPolynomial LaurentPolynomial::constant(int variables, const mpz_class& c) {
  LaurentPolynomial f(variables);
  f.add_term(Exponent(static_cast<std::size_t>(variables), 0), c);
  return f;
}

LaurentPolynomial LaurentPolynomial::monomial(Exponent exponent, const mpz_class& c) {
  LaurentPolynomial f(static_cast<int>(exponent.size()));
  f.add_term(exponent, c);
  return f;
}

mpz_class LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPolynomial::check_exponent(const Exponent& e) const {
  if (static_cast<int>(e.size()) != n_)
    throw std::invalid_argument("exponent vector of length " + std::to_string(e.size()) +
                                " in a ring with " + std::to_string(n_) + " variables");
}

void LaurentPolynomial::check_compatible(const LaurentPolynomial& other) const {
  if (other.n_ != n_)
    throw std::invalid_argument("cannot combine characters in " + std::to_string(n_) + " and " +
                                std::to_string(other.n_) + " variables");
}

void LaurentPolynomial::add_term(const Exponent& e, const mpz_class& c) {
  check_exponent(e);
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_)
    add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_)
    add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check_compatible(b);
  LaurentPolynomial product(a.n_);
  Exponent e(static_cast<std::size_t>(a.n_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = ea[i] + eb[i];
      product.add_term(e, ca * cb);
    }
  return product;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial f(n_);
  for (const auto& [e, c] : terms_)
    f.terms_.emplace(e, -c);
  return f;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponent& shift) const {
  check_exponent(shift);
  LaurentPolynomial f(n_);
  for (const auto& [e, c] : terms_) {
    Exponent moved = e;
    for (std::size_t i = 0; i < moved.size(); ++i)
      moved[i] += shift[i];
    f.terms_.emplace(std::move(moved), c);
  }
  return f;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    mpz_class magnitude = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (constant) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1)
      out << magnitude.get_str() << '*';
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      out << (first_var ? "" : "*") << 't' << i + 1;
      if (e[i] != 1)
        out << '^' << e[i];
      first_var = false;
    }
  }
  return out.str();
}

namespace {

// Calls visit(e) for every e in Z_{>=0}^n with |e| = total and e_i <= cap.
void for_each_composition(int total, int n, int cap, const std::function<void(const Exponent&)>& visit) {
  if (total < 0)
    return;
  Exponent e(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> fill = [&](int index, int remaining) {
    if (index == n - 1) {
      if (remaining <= cap) {
        e[static_cast<std::size_t>(index)] = remaining;
        visit(e);
      }
      return;
    }
    for (int x = std::min(remaining, cap); x >= 0; --x) {
      e[static_cast<std::size_t>(index)] = x;
      fill(index + 1, remaining - x);
    }
  };
  fill(0, total);
}

} // namespace

LaurentPolynomial h(int d, int n) {
  LaurentPolynomial f(n);
  for_each_composition(d, n, std::max(d, 0), [&](const Exponent& e) { f.add_term(e, 1); });
  return f;
}

LaurentPolynomial h_trunc(int d, int q, int n) {
  if (q < 1)
    throw std::invalid_argument("truncation bound must be positive");
  LaurentPolynomial f(n);
  for_each_composition(d, n, q - 1, [&](const Exponent& e) { f.add_term(e, 1); });
  return f;
}

LaurentPolynomial schur2(int a, int b, int n) {
  return h(a, n) * h(b, n) - h(a + 1, n) * h(b - 1, n);
}

LaurentPolynomial schur2_trunc(int a, int b, int q, int n) {
  return h_trunc(a, q, n) * h_trunc(b, q, n) - h_trunc(a + 1, q, n) * h_trunc(b - 1, q, n);
}

LaurentPolynomial frobenius(const LaurentPolynomial& f, int q) {
  if (q < 1)
    throw std::invalid_argument("Frobenius twist needs q >= 1");
  LaurentPolynomial g(f.variables());
  for (const auto& [e, c] : f.terms()) {
    Exponent scaled = e;
    for (auto& x : scaled)
      x *= q;
    g.add_term(scaled, c);
  }
  return g;
}

LaurentPolynomial nim_poly(int m, int n) {
  if (m < 0)
    throw std::invalid_argument("Nim polynomial index must be non-negative");
  LaurentPolynomial f(n);
  for_each_composition(2 * m, n, 2 * m, [&](const Exponent& e) {
    int x = 0;
    for (int v : e)
      x ^= v;
    if (x == 0)
      f.add_term(e, 1);
  });
  return f;
}

mpz_class dim_eval(const LaurentPolynomial& f) {
  mpz_class total = 0;
  for (const auto& [e, c] : f.terms())
    total += c;
  return total;
}

bool is_symmetric(const LaurentPolynomial& f) {
  // Terms grouped by sorted exponent must form complete orbits with one
  // common coefficient.
  std::map<Exponent, std::pair<mpz_class, std::size_t>> orbits;
  for (const auto& [e, c] : f.terms()) {
    Exponent key = e;
    std::sort(key.begin(), key.end());
    auto [it, inserted] = orbits.try_emplace(key, c, 0);
    if (!inserted && it->second.first != c)
      return false;
    ++it->second.second;
  }
  for (const auto& [key, entry] : orbits) {
    mpz_class orbit_size;
    mpz_fac_ui(orbit_size.get_mpz_t(), key.size());
    for (std::size_t i = 0; i < key.size();) {
      std::size_t j = i;
      while (j < key.size() && key[j] == key[i])
        ++j;
      mpz_class f_run;
      mpz_fac_ui(f_run.get_mpz_t(), j - i);
      orbit_size /= f_run;
      i = j;
    }
    if (orbit_size != entry.second)
      return false;
  }
  return true;
}

Exponent all_ones(int n) { return Exponent(static_cast<std::size_t>(n), 1); }

std::optional<TermDifference> first_difference(const LaurentPolynomial& left,
                                               const LaurentPolynomial& right) {
  auto a = left.terms().begin(), a_end = left.terms().end();
  auto b = right.terms().begin(), b_end = right.terms().end();
  while (a != a_end || b != b_end) {
    if (b == b_end || (a != a_end && a->first < b->first))
      return TermDifference{a->first, a->second, 0};
    if (a == a_end || b->first < a->first)
      return TermDifference{b->first, 0, b->second};
    if (a->second != b->second)
      return TermDifference{a->first, a->second, b->second};
    ++a;
    ++b;
  }
  return std::nullopt;
}

} // namespace flagcoh
