#include "flagcoh/modular.hpp"

#include <stdexcept>
#include <string>

namespace flagcoh {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0)
      return false;
  return true;
}

Prime::Prime(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
  if (p >= (std::uint64_t{1} << 31))
    throw std::invalid_argument("prime modulus must be below 2^31, got " + std::to_string(p));
  if (!is_prime(p))
    throw std::invalid_argument(std::to_string(p) + " is not prime");
}

Residue pow_mod(Residue base, std::uint64_t exponent, Prime p) {
  Residue result = 1 % p.value();
  while (exponent > 0) {
    if (exponent & 1)
      result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exponent >>= 1;
  }
  return result;
}

Residue inv_mod(Residue a, Prime p) {
  if (a % p.value() == 0)
    throw std::domain_error("zero has no inverse modulo " + std::to_string(p.value()));
  // Extended Euclid on signed 64-bit values.
  std::int64_t r0 = p.value(), r1 = a % p.value();
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  return reduce(s0, p);
}

Residue reduce(std::int64_t value, Prime p) {
  std::int64_t r = value % static_cast<std::int64_t>(p.value());
  return static_cast<Residue>(r < 0 ? r + p.value() : r);
}

Residue reduce(const mpz_class& value, Prime p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p.value());
  return static_cast<Residue>(r.get_ui());
}

} // namespace flagcoh
