#ifndef CONLAB_COMBINATORICS_HPP
#define CONLAB_COMBINATORICS_HPP

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "conlab/exact.hpp"

namespace conlab {

namespace detail {

// One half Pascal row per n (k <= n/2), grown multiplicatively with exact
// division at every step. Rows are cached per thread, append-only, so
// concurrent grid sweeps never contend on shared state.
inline const std::vector<BigInt>& binomial_row(long n) {
  thread_local std::unordered_map<long, std::vector<BigInt>> rows;
  auto it = rows.find(n);
  if (it != rows.end()) return it->second;
  std::vector<BigInt> row(static_cast<size_t>(n / 2) + 1);
  row[0] = 1;
  for (long k = 1; k <= n / 2; ++k) {
    BigInt t = row[static_cast<size_t>(k - 1)] * (n - k + 1);
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
    row[static_cast<size_t>(k)] = std::move(t);
  }
  return rows.emplace(n, std::move(row)).first->second;
}

}  // namespace detail

// C(n, k); zero outside 0 <= k <= n, negative n rejected.
inline BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative upper index");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  return detail::binomial_row(n)[static_cast<size_t>(k)];
}

inline BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  thread_local std::vector<BigInt> cache = {BigInt(1)};
  while (static_cast<long>(cache.size()) <= n)
    cache.push_back(cache.back() * static_cast<long>(cache.size()));
  return cache[static_cast<size_t>(n)];
}

// Number of ones in the binary expansion of n >= 0.
inline unsigned long bit_count_ones(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("bit_count_ones: negative argument");
  return mpz_popcount(n.get_mpz_t());
}

// Catalan-triangle entry: C(2n, n-k) - C(2n, n-k-1) for 0 <= k <= n.
inline BigInt ballot(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("ballot: need 0 <= k <= n");
  return binomial(2 * n, n - k) - binomial(2 * n, n - k - 1);
}

// C(2n, n) / (n + 1).
inline BigInt catalan(long n) {
  return exact_div(binomial(2 * n, n), BigInt(n + 1));
}

}  // namespace conlab

#endif  // CONLAB_COMBINATORICS_HPP
