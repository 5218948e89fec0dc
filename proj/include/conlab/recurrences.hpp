#ifndef CONLAB_RECURRENCES_HPP
#define CONLAB_RECURRENCES_HPP

#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "conlab/chains.hpp"

namespace conlab {

// Direct evaluation of the one-variable row sums
// sum over k = 0..n of sign^k * C(2n+1, n-k) * k^r (k+1)^r (2k+1).
inline BigInt pq_direct(long r, long n, Sign sign) {
  if (r < 0 || n < 0) throw std::invalid_argument("pq_direct: need r, n >= 0");
  BigInt total = 0;
  for (long k = 0; k <= n; ++k) {
    BigInt t = binomial(2 * n + 1, n - k) * weight_term(Weight::kk1, r, k);
    if (sign == Sign::alternating && (k & 1))
      total -= t;
    else
      total += t;
  }
  return total;
}

namespace detail {

inline BigInt pq_value(long r, long n, Sign sign, std::map<std::pair<long, long>, BigInt>& memo) {
  if (r == 0) {
    if (sign == Sign::plus) return (2 * n + 1) * binomial(2 * n, n);
    return BigInt(n == 0 ? 1 : 0);
  }
  if (n == 0) return BigInt(0);
  auto key = std::make_pair(r, n);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  BigInt v = BigInt(n) * (n + 1) * pq_value(r - 1, n, sign, memo) -
             BigInt(2 * n) * (2 * n + 1) * pq_value(r - 1, n - 1, sign, memo);
  return memo.emplace(key, std::move(v)).first->second;
}

inline BigInt uv_value(long r, long n, Sign sign, std::map<std::pair<long, long>, BigInt>& memo) {
  if (r == 0) {
    if (sign == Sign::plus) return pow_int(4, static_cast<unsigned long>(n));
    return binomial(2 * n, n);
  }
  if (n == 0) return BigInt(1);
  auto key = std::make_pair(r, n);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  BigInt v = pow_int(2 * n + 1, 2) * uv_value(r - 1, n, sign, memo) -
             BigInt(8 * n) * (2 * n + 1) * uv_value(r - 1, n - 1, sign, memo);
  return memo.emplace(key, std::move(v)).first->second;
}

}  // namespace detail

// Row recurrence X_r(n) = n(n+1) X_{r-1}(n) - 2n(2n+1) X_{r-1}(n-1) grounded
// at the r = 0 rows (2n+1) C(2n, n) (plus) and [n = 0] (alternating).
inline BigInt pq_recurrence(long r, long n, Sign sign) {
  if (r < 0 || n < 1) throw std::invalid_argument("pq_recurrence: need r >= 0 and n >= 1");
  std::map<std::pair<long, long>, BigInt> memo;
  return detail::pq_value(r, n, sign, memo);
}

// Row recurrence X_r(n) = (2n+1)^2 X_{r-1}(n) - 8n(2n+1) X_{r-1}(n-1)
// grounded at 4^n (plus) and C(2n, n) (alternating).
inline BigInt uv_recurrence(long r, long n, Sign sign) {
  if (r < 0 || n < 1) throw std::invalid_argument("uv_recurrence: need r >= 0 and n >= 1");
  std::map<std::pair<long, long>, BigInt> memo;
  return detail::uv_value(r, n, sign, memo);
}

// Direct evaluation of the two-variable sums
// sum over k = 0..n1 of sign^k * C(n1+n2+1, n1-k) C(n1+n2+1, n2-k) * weight(k).
inline BigInt two_var_direct(long r, long n1, long n2, Sign sign, Weight weight = Weight::kk1) {
  if (r < 0 || n1 < 0 || n2 < 0) throw std::invalid_argument("two_var_direct: need r, n1, n2 >= 0");
  BigInt total = 0;
  for (long k = 0; k <= n1; ++k) {
    BigInt b = binomial(n1 + n2 + 1, n1 - k) * binomial(n1 + n2 + 1, n2 - k);
    if (b == 0) continue;
    b *= weight_term(weight, r, k);
    if (sign == Sign::alternating && (k & 1))
      total -= b;
    else
      total += b;
  }
  return total;
}

// Closed forms for the two-variable sums with the k^r (k+1)^r (2k+1) weight,
// available for r = 0, 1, 2.
inline BigInt two_var_closed(long r, long n1, long n2, Sign sign) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("two_var_closed: need n1, n2 >= 1");
  BigInt c = binomial(n1 + n2, n1);
  BigInt s = n1 + n2 + 1;
  if (r == 0) {
    if (sign == Sign::plus) return s * c * c;
    return s * c;
  }
  if (r == 1) {
    if (sign == Sign::plus) return BigInt(n1) * s * c * binomial(n1 + n2 - 1, n1);
    return -BigInt(n1) * n2 * s * c;
  }
  if (r == 2) {
    if (sign == Sign::plus) return BigInt(2) * n1 * n2 * s * c * binomial(n1 + n2 - 2, n1 - 1);
    return BigInt(n1) * n2 * (BigInt(n1) * n2 - n1 - n2 - 1) * s * c;
  }
  throw std::invalid_argument("two_var_closed: closed form known only for r <= 2");
}

namespace detail {

inline BigInt two_var_value(long r, long n1, long n2, Sign sign, std::map<std::pair<long, long>, BigInt>& memo) {
  if (r == 0) {
    BigInt c = binomial(n1 + n2, n1);
    if (sign == Sign::plus) return BigInt(n1 + n2 + 1) * c * c;
    return BigInt(n1 + n2 + 1) * c;
  }
  if (n1 == 0) return BigInt(0);
  auto key = std::make_pair(r, n1);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  BigInt v = BigInt(n1) * (n1 + 1) * two_var_value(r - 1, n1, n2, sign, memo) -
             pow_int(n1 + n2 + 1, 2) * two_var_value(r - 1, n1 - 1, n2, sign, memo);
  return memo.emplace(key, std::move(v)).first->second;
}

inline BigInt overline_value(long r, long n1, long n2, std::map<std::pair<long, long>, BigInt>& memo) {
  if (r == 0) return exact_div(BigInt(n1) * binomial(n1 + n2, n1) * binomial(n1 + n2 - 1, n1), BigInt(2));
  if (n1 == 0) return BigInt(0);
  auto key = std::make_pair(r, n1);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  BigInt v = BigInt(n1) * n1 * overline_value(r - 1, n1, n2, memo) -
             pow_int(n1 + n2, 2) * overline_value(r - 1, n1 - 1, n2, memo);
  return memo.emplace(key, std::move(v)).first->second;
}

}  // namespace detail

// Recurrence X_r(n1,n2) = n1(n1+1) X_{r-1}(n1,n2) - (n1+n2+1)^2 X_{r-1}(n1-1,n2)
// grounded at the r = 0 closed forms.
inline BigInt two_var_recurrence(long r, long n1, long n2, Sign sign) {
  if (r < 0 || n1 < 1 || n2 < 1) throw std::invalid_argument("two_var_recurrence: need r >= 0 and n1, n2 >= 1");
  std::map<std::pair<long, long>, BigInt> memo;
  return detail::two_var_value(r, n1, n2, sign, memo);
}

// Direct evaluation of sum over k = 0..n1 of C(n1+n2, n1-k) C(n1+n2, n2-k) k^(2r+1).
inline BigInt overline_p_direct(long r, long n1, long n2) {
  if (r < 0 || n1 < 0 || n2 < 0) throw std::invalid_argument("overline_p_direct: need r, n1, n2 >= 0");
  BigInt total = 0;
  for (long k = 0; k <= n1; ++k) {
    BigInt b = binomial(n1 + n2, n1 - k) * binomial(n1 + n2, n2 - k);
    if (b == 0) continue;
    total += b * pow_int(k, static_cast<unsigned long>(2 * r + 1));
  }
  return total;
}

// Recurrence X_r = n1^2 X_{r-1}(n1,n2) - (n1+n2)^2 X_{r-1}(n1-1,n2) grounded
// at X_0(n1,n2) = (n1/2) C(n1+n2, n1) C(n1+n2-1, n1).
inline BigInt overline_p(long r, long n1, long n2) {
  if (r < 0 || n1 < 1 || n2 < 1) throw std::invalid_argument("overline_p: need r >= 0 and n1, n2 >= 1");
  std::map<std::pair<long, long>, BigInt> memo;
  return detail::overline_value(r, n1, n2, memo);
}

}  // namespace conlab

#endif  // CONLAB_RECURRENCES_HPP
