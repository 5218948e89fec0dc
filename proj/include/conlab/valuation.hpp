#ifndef CONLAB_VALUATION_HPP
#define CONLAB_VALUATION_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "conlab/primality.hpp"

namespace conlab {

namespace detail {

inline void require_prime(std::uint64_t p, const char* who) {
  if (!is_prime_u64(p)) throw std::invalid_argument(std::string(who) + ": modulus base must be prime");
}

}  // namespace detail

// v_p(n!) = sum over i of floor(n / p^i).
inline std::uint64_t legendre_valuation(std::uint64_t p, std::uint64_t n) {
  detail::require_prime(p, "legendre_valuation");
  std::uint64_t v = 0;
  while (n) {
    n /= p;
    v += n;
  }
  return v;
}

// v_p(C(n, k)) through the factorial valuations.
inline std::uint64_t binomial_valuation(std::uint64_t p, std::uint64_t n, std::uint64_t k) {
  if (k > n) throw std::out_of_range("binomial_valuation: need 0 <= k <= n");
  return legendre_valuation(p, n) - legendre_valuation(p, k) - legendre_valuation(p, n - k);
}

// Carries when adding a and b in base p; equals v_p(C(a+b, a)).
inline std::uint64_t kummer_carries(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  detail::require_prime(p, "kummer_carries");
  std::uint64_t carries = 0, carry = 0;
  while (a || b || carry) {
    std::uint64_t digit = a % p + b % p + carry;
    carry = digit >= p ? 1 : 0;
    carries += carry;
    a /= p;
    b /= p;
  }
  return carries;
}

struct PrimeFactor {
  std::uint64_t p;
  unsigned exp;
};

// Trial-division factorization; intended for inputs up to ~1e12.
inline std::vector<PrimeFactor> factor_u64(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factor_u64: zero");
  std::vector<PrimeFactor> fs;
  auto strip = [&](std::uint64_t p) {
    if (n % p) return;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    fs.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) fs.push_back({n, 1});
  return fs;
}

}  // namespace conlab

#endif  // CONLAB_VALUATION_HPP
