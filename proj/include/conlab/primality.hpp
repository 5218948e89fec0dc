#ifndef CONLAB_PRIMALITY_HPP
#define CONLAB_PRIMALITY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "conlab/exact.hpp"

namespace conlab {

enum class Primality { composite, prime, probable_prime };

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

inline bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace detail

// Deterministic Miller-Rabin over the full 64-bit range: the witness set
// {2,...,37} has no strong pseudoprime below 3.3e24.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!detail::strong_probable_prime(n, a, d, s)) return false;
  }
  return true;
}

inline std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<bool> sieve(static_cast<size_t>(limit) + 1, true);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (!sieve[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i) sieve[static_cast<size_t>(j)] = false;
  }
  return primes;
}

// Exact for anything that fits in 64 bits. Larger inputs get trial division
// below 1e5 followed by 64 Miller-Rabin rounds (error < 2^-128), reported as
// probable_prime rather than prime.
inline Primality classify_prime(const BigInt& n) {
  if (n < 2) return Primality::composite;
  if (n.fits_ulong_p() && sizeof(unsigned long) == 8)
    return is_prime_u64(n.get_ui()) ? Primality::prime : Primality::composite;
  static const std::vector<std::uint32_t> small_primes = primes_up_to(100000);
  for (std::uint32_t p : small_primes) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return n == p ? Primality::prime : Primality::composite;
  }
  int r = mpz_probab_prime_p(n.get_mpz_t(), 64);
  if (r == 2) return Primality::prime;
  if (r == 1) return Primality::probable_prime;
  return Primality::composite;
}

struct PrimePower {
  BigInt p;
  unsigned long a = 0;
  Primality certainty = Primality::prime;
};

// Decomposes n = p^a with p prime, a >= 1, if such a decomposition exists.
inline std::optional<PrimePower> classify_prime_power(const BigInt& n) {
  if (n < 2) throw std::invalid_argument("classify_prime_power: need n >= 2");
  Primality direct = classify_prime(n);
  if (direct != Primality::composite) return PrimePower{n, 1, direct};
  unsigned long max_exp = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long a = 2; a <= max_exp; ++a) {
    BigInt root;
    int exact = mpz_root(root.get_mpz_t(), n.get_mpz_t(), a);
    if (!exact) continue;
    Primality base = classify_prime(root);
    if (base != Primality::composite) return PrimePower{root, a, base};
  }
  return std::nullopt;
}

inline bool is_prime_power_u64(std::uint64_t n) {
  if (n < 2) return false;
  return classify_prime_power(BigInt(static_cast<unsigned long>(n))).has_value();
}

}  // namespace conlab

#endif  // CONLAB_PRIMALITY_HPP
