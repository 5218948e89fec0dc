#ifndef CONLAB_CHAINS_HPP
#define CONLAB_CHAINS_HPP

#include <stdexcept>
#include <vector>

#include "conlab/combinatorics.hpp"

namespace conlab {

enum class Sign { plus, alternating };
enum class Weight { odd_power, kk1 };
enum class Closure { cyclic, diagonal };

// Product chain over binomial coefficients: cyclic closure multiplies
// C(n_i + n_{i+1} + 1, n_i - k) with n_{m+1} = n_1, diagonal closure
// multiplies C(2 n_i + 1, n_i - k).
struct ChainSpec {
  std::vector<long> ns;
  long r = 0;
  Sign sign = Sign::plus;
  Weight weight = Weight::odd_power;
  Closure closure = Closure::cyclic;

  void validate() const {
    if (ns.empty()) throw std::invalid_argument("ChainSpec: chain must be nonempty");
    for (long n : ns)
      if (n < 1) throw std::invalid_argument("ChainSpec: chain entries must be positive");
    if (r < 0) throw std::invalid_argument("ChainSpec: weight exponent must be nonnegative");
  }
};

// Weight attached to the summation index: odd_power gives (2k+1)^(2r+1),
// kk1 gives k^r (k+1)^r (2k+1).
inline BigInt weight_term(Weight weight, long r, long k) {
  if (weight == Weight::odd_power) return pow_int(2 * k + 1, static_cast<unsigned long>(2 * r + 1));
  return pow_int(k, static_cast<unsigned long>(r)) * pow_int(k + 1, static_cast<unsigned long>(r)) * (2 * k + 1);
}

inline BigInt chain_product(const ChainSpec& spec, long k) {
  spec.validate();
  if (k < 0) throw std::invalid_argument("chain_product: negative index");
  const size_t m = spec.ns.size();
  BigInt prod = 1;
  for (size_t i = 0; i < m; ++i) {
    long top = spec.closure == Closure::cyclic ? spec.ns[i] + spec.ns[(i + 1) % m] + 1 : 2 * spec.ns[i] + 1;
    BigInt b = binomial(top, spec.ns[i] - k);
    if (b == 0) return BigInt(0);
    prod *= b;
  }
  return prod;
}

// Sum over k = 0..n_1 of sign^k * weight(k) * chain_product(k). Terms with
// k beyond the smallest chain entry vanish.
inline BigInt chain_sum(const ChainSpec& spec) {
  spec.validate();
  BigInt total = 0;
  for (long k = 0; k <= spec.ns.front(); ++k) {
    BigInt t = chain_product(spec, k);
    if (t == 0) continue;
    t *= weight_term(spec.weight, spec.r, k);
    if (spec.sign == Sign::alternating && (k & 1))
      total -= t;
    else
      total += t;
  }
  return total;
}

// Exact rational prefactor that normalizes chain sums to integers:
// n_1! n_m! / (n_1+n_m+1)! for cyclic chains, and
// n_1! * prod_i (n_i+n_{i+1}+1)!/(2n_i+1)! with n_{m+1} = -1 for diagonal.
inline BigRat normalized_prefactor(const ChainSpec& spec) {
  spec.validate();
  const auto& ns = spec.ns;
  const size_t m = ns.size();
  if (spec.closure == Closure::cyclic)
    return make_rat(factorial(ns.front()) * factorial(ns.back()), factorial(ns.front() + ns.back() + 1));
  BigRat f(factorial(ns.front()));
  for (size_t i = 0; i < m; ++i) {
    long next = i + 1 < m ? ns[i + 1] : -1;
    f *= make_rat(factorial(ns[i] + next + 1), factorial(2 * ns[i] + 1));
  }
  return f;
}

inline BigRat normalized_sum(const ChainSpec& spec) {
  return normalized_prefactor(spec) * BigRat(chain_sum(spec));
}

// Sum over k = 0..n of sign^k * C(2n+1, n-k) * (2k+1)^(2r); the r = 0 rows
// collapse to 4^n (plus) and C(2n, n) (alternating).
inline BigInt uv_sum(long n, long r, Sign sign) {
  if (n < 1) throw std::invalid_argument("uv_sum: need n >= 1");
  if (r < 0) throw std::invalid_argument("uv_sum: need r >= 0");
  BigInt total = 0;
  for (long k = 0; k <= n; ++k) {
    BigInt t = binomial(2 * n + 1, n - k) * pow_int(2 * k + 1, static_cast<unsigned long>(2 * r));
    if (sign == Sign::alternating && (k & 1))
      total -= t;
    else
      total += t;
  }
  return total;
}

// A binomial-power factor C(top, shift - k)^exp inside a weighted sum.
struct BinomPower {
  long top;
  long shift;
  long exp;
};

// Sum over k = 0..kmax of sign^k * (2k+1)^wexp * prod_j C(top_j, shift_j - k)^exp_j.
inline BigInt binomial_power_sum(const std::vector<BinomPower>& factors, long wexp, Sign sign, long kmax) {
  if (wexp < 0) throw std::invalid_argument("binomial_power_sum: negative weight exponent");
  BigInt total = 0;
  for (long k = 0; k <= kmax; ++k) {
    BigInt t = pow_int(2 * k + 1, static_cast<unsigned long>(wexp));
    for (const auto& f : factors) {
      if (f.exp == 0) continue;
      BigInt b = binomial(f.top, f.shift - k);
      if (b == 0) {
        t = 0;
        break;
      }
      t *= f.exp == 1 ? b : pow_int(b, static_cast<unsigned long>(f.exp));
    }
    if (t == 0) continue;
    if (sign == Sign::alternating && (k & 1))
      total -= t;
    else
      total += t;
  }
  return total;
}

}  // namespace conlab

#endif  // CONLAB_CHAINS_HPP
