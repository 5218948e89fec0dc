#ifndef CONLAB_SEARCHES_HPP
#define CONLAB_SEARCHES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "conlab/primality.hpp"
#include "conlab/valuation.hpp"

namespace conlab {

// Result of a hit-list search: which n <= bound satisfy a named condition.
struct SearchSummary {
  std::string condition_id;
  long bound = 0;
  std::vector<long> hits;
};

namespace detail {

// v_p(x) for a plain machine integer.
inline unsigned valuation_u64(std::uint64_t p, std::uint64_t x) {
  unsigned v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

}  // namespace detail

// gcd(C(2n,n), 2n+1) == 1, decided by Legendre valuations of the primes
// dividing 2n+1; C(2n,n) itself is never materialized.
inline bool central_coprime_condition(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("central_coprime_condition: n must be >= 1");
  for (const PrimeFactor& f : factor_u64(2 * n + 1))
    if (binomial_valuation(f.p, 2 * n, n) != 0) return false;
  return true;
}

// Ascending n in [1, bound] with gcd(C(2n,n), 2n+1) == 1.  By default n with
// 2n+1 a prime power are dropped (there the condition always holds); pass
// include_prime_powers to get the raw hit list.
inline SearchSummary search_central_coprime(long bound, bool include_prime_powers = false) {
  if (bound < 1) throw std::invalid_argument("search_central_coprime: bound must be >= 1");
  SearchSummary out;
  out.condition_id = include_prime_powers ? "central-coprime-raw" : "list-5.1";
  out.bound = bound;
  for (long n = 1; n <= bound; ++n) {
    std::uint64_t un = static_cast<std::uint64_t>(n);
    if (!include_prime_powers && is_prime_power_u64(2 * un + 1)) continue;
    if (central_coprime_condition(un)) out.hits.push_back(n);
  }
  return out;
}

// gcd(C(2n+1,n)/(2n+1), (2n+1)(2n+3)) == 1: for every prime p dividing
// (2n+1)(2n+3), the Catalan number C(2n+1,n)/(2n+1) has p-valuation zero.
inline bool catalan_gcd_condition(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("catalan_gcd_condition: n must be >= 1");
  for (std::uint64_t part : {2 * n + 1, 2 * n + 3})
    for (const PrimeFactor& f : factor_u64(part)) {
      std::uint64_t v_binom = legendre_valuation(f.p, 2 * n + 1) - legendre_valuation(f.p, n) -
                              legendre_valuation(f.p, n + 1);
      if (v_binom != detail::valuation_u64(f.p, 2 * n + 1)) return false;
    }
  return true;
}

// gcd(C(4n+1,n)/(4n+1), (2n+1)(4n+1)) == 1, same valuation route.
inline bool fuss_catalan_gcd_condition(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("fuss_catalan_gcd_condition: n must be >= 1");
  for (std::uint64_t part : {2 * n + 1, 4 * n + 1})
    for (const PrimeFactor& f : factor_u64(part)) {
      std::uint64_t v_binom = legendre_valuation(f.p, 4 * n + 1) - legendre_valuation(f.p, n) -
                              legendre_valuation(f.p, 3 * n + 1);
      if (v_binom != detail::valuation_u64(f.p, 4 * n + 1)) return false;
    }
  return true;
}

// Cumulative counts of the two gcd conditions at each checkpoint x.
struct GcdConditionCounts {
  long x = 0;
  long catalan_count = 0;       // #{n <= x : catalan_gcd_condition}
  long fuss_catalan_count = 0;  // #{n <= x : fuss_catalan_gcd_condition}
};

// One incremental pass to max(xs); xs must be ascending and positive.
inline std::vector<GcdConditionCounts> count_gcd_conditions(const std::vector<long>& xs) {
  if (xs.empty()) return {};
  for (size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 1) throw std::invalid_argument("count_gcd_conditions: checkpoints must be >= 1");
    if (i > 0 && xs[i] <= xs[i - 1])
      throw std::invalid_argument("count_gcd_conditions: checkpoints must be strictly ascending");
  }
  std::vector<GcdConditionCounts> out;
  out.reserve(xs.size());
  long f_count = 0, g_count = 0;
  size_t next = 0;
  for (long n = 1; n <= xs.back(); ++n) {
    if (catalan_gcd_condition(static_cast<std::uint64_t>(n))) ++f_count;
    if (fuss_catalan_gcd_condition(static_cast<std::uint64_t>(n))) ++g_count;
    while (next < xs.size() && xs[next] == n) {
      out.push_back({xs[next], f_count, g_count});
      ++next;
    }
  }
  return out;
}

// A prime p with p^2-p+1 also prime; then 2n+1 = p(p^2-p+1) for the listed n.
struct PrimePairEntry {
  std::uint64_t p = 0;
  std::uint64_t q = 0;               // p^2 - p + 1
  std::uint64_t n = 0;               // (p^3 - p^2 + p - 1) / 2
  bool condition_holds = false;      // central_coprime_condition(n)
};

// First `count` odd primes p with p^2-p+1 prime, ascending, each with its
// derived n and the coprimality condition evaluated at that n.
inline std::vector<PrimePairEntry> prime_pair_search(long count) {
  if (count < 1) throw std::invalid_argument("prime_pair_search: count must be >= 1");
  std::vector<PrimePairEntry> out;
  out.reserve(static_cast<size_t>(count));
  for (std::uint64_t p = 3; static_cast<long>(out.size()) < count; p += 2) {
    if (!is_prime_u64(p)) continue;
    std::uint64_t q = p * p - p + 1;
    if (!is_prime_u64(q)) continue;
    PrimePairEntry e;
    e.p = p;
    e.q = q;
    e.n = (p * q - 1) / 2;
    e.condition_holds = central_coprime_condition(e.n);
    out.push_back(e);
  }
  return out;
}

// Among the first `prime_count` primes (2 included in the count but skipped
// as even), how many p have p^2-p+1 prime.
inline long prime_pair_count(long prime_count) {
  if (prime_count < 1) throw std::invalid_argument("prime_pair_count: count must be >= 1");
  // The k-th prime is below k(ln k + ln ln k) for k >= 6; pad generously.
  std::uint32_t limit = 100;
  while (true) {
    auto primes = primes_up_to(limit);
    if (static_cast<long>(primes.size()) >= prime_count) {
      long hits = 0;
      for (long i = 0; i < prime_count; ++i) {
        std::uint64_t p = primes[static_cast<size_t>(i)];
        if (p == 2) continue;
        if (is_prime_u64(p * p - p + 1)) ++hits;
      }
      return hits;
    }
    limit *= 2;
  }
}

}  // namespace conlab

#endif  // CONLAB_SEARCHES_HPP
