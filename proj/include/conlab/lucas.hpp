#ifndef CONLAB_LUCAS_HPP
#define CONLAB_LUCAS_HPP

#include <cstdint>
#include <stdexcept>

#include "conlab/primality.hpp"
#include "conlab/valuation.hpp"

namespace conlab {

namespace detail {

// C(a, b) mod p for 0 <= b <= a < p, via the multiplicative formula with
// Fermat inverses.
inline std::uint64_t binomial_mod_digit(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 1; i <= b; ++i) {
    num = mulmod_u64(num, (a - b + i) % p, p);
    den = mulmod_u64(den, i % p, p);
  }
  return mulmod_u64(num, powmod_u64(den, p - 2, p), p);
}

}  // namespace detail

// C(n, k) mod p as the product of base-p digit binomials.
inline std::uint64_t lucas_binomial_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  detail::require_prime(p, "lucas_binomial_mod");
  if (k > n) return 0;
  std::uint64_t r = 1;
  while ((n || k) && r) {
    std::uint64_t a = n % p, b = k % p;
    r = detail::mulmod_u64(r, detail::binomial_mod_digit(a, b, p), p);
    n /= p;
    k /= p;
  }
  return r;
}

}  // namespace conlab

#endif  // CONLAB_LUCAS_HPP
