#pragma once

#include <cstdint>
#include <gmpxx.h>

namespace flagcoh {

using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);

/// A prime modulus below 2^31, so that a product of two residues fits in 64 bits.
class Prime {
public:
  explicit Prime(std::uint64_t p);

  [[nodiscard]] std::uint32_t value() const { return p_; }
  friend bool operator==(Prime, Prime) = default;

private:
  std::uint32_t p_;
};

inline Residue add_mod(Residue a, Residue b, Prime p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Residue>(s >= p.value() ? s - p.value() : s);
}

inline Residue sub_mod(Residue a, Residue b, Prime p) {
  return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p.value() - b);
}

inline Residue mul_mod(Residue a, Residue b, Prime p) {
  return static_cast<Residue>(std::uint64_t{a} * b % p.value());
}

inline Residue neg_mod(Residue a, Prime p) { return a == 0 ? 0 : p.value() - a; }

Residue pow_mod(Residue base, std::uint64_t exponent, Prime p);

/// Inverse of a non-zero residue.
Residue inv_mod(Residue a, Prime p);

Residue reduce(std::int64_t value, Prime p);
Residue reduce(const mpz_class& value, Prime p);

} // namespace flagcoh
