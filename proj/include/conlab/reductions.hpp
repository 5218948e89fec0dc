#ifndef CONLAB_REDUCTIONS_HPP
#define CONLAB_REDUCTIONS_HPP

#include <stdexcept>
#include <vector>

#include "conlab/recurrences.hpp"

namespace conlab {

namespace detail {

// Normalized cyclic chain sum with the kk1 weight, reduced one entry at a
// time: S(n1, n2, rest...) = sum over l = 0..n1 of
// C(n1, l) C(n2 + rest[0] + 1, n2 - l) S(l, rest...), grounded at the
// two-entry normalized sums. The head entry may be zero during recursion.
inline BigRat reduced_chain_value(const std::vector<long>& ns, long r, Sign sign) {
  if (ns.size() == 2) {
    BigRat pre = make_rat(factorial(ns[0]) * factorial(ns[1]), factorial(ns[0] + ns[1] + 1));
    return pre * BigRat(two_var_direct(r, ns[0], ns[1], sign, Weight::kk1));
  }
  std::vector<long> sub(ns.size() - 1);
  for (size_t i = 2; i < ns.size(); ++i) sub[i - 1] = ns[i];
  BigRat total(0);
  for (long l = 0; l <= ns[0]; ++l) {
    BigInt c = binomial(ns[0], l) * binomial(ns[1] + ns[2] + 1, ns[1] - l);
    if (c == 0) continue;
    sub[0] = l;
    total += BigRat(c) * reduced_chain_value(sub, r, sign);
  }
  return total;
}

}  // namespace detail

// Alternative route to normalized_sum for cyclic chains with the kk1 weight
// and m >= 3 entries.
inline BigRat chain_reduce(const ChainSpec& spec) {
  spec.validate();
  if (spec.closure != Closure::cyclic || spec.weight != Weight::kk1)
    throw std::invalid_argument("chain_reduce: defined for cyclic chains with the kk1 weight");
  if (spec.ns.size() < 3) throw std::invalid_argument("chain_reduce: need at least three chain entries");
  return detail::reduced_chain_value(spec.ns, spec.r, spec.sign);
}

// Four specializations of the staircase expansion of cyclic chain sums over
// nonincreasing index chains n1 >= l1 >= ... >= l_{m-2} >= 0.
enum class LambdaVariant { plus_r0, plus_r1, alt_r0, alt_r1 };

namespace detail {

inline BigInt lambda_tail_factor(LambdaVariant v, long last, long nm) {
  switch (v) {
    case LambdaVariant::plus_r0:
      return binomial(last + nm, last);
    case LambdaVariant::plus_r1:
      return binomial(last + nm - 1, last - 1);
    case LambdaVariant::alt_r0:
      return BigInt(1);
    case LambdaVariant::alt_r1:
      return BigInt(last);
  }
  return BigInt(0);
}

}  // namespace detail

// Sum over all nonincreasing chains (l1, ..., l_{m-2}) below n1 of the
// staircase product prod_i C(l_{i-1}, l_i) C(n_{i+1} + n_{i+2} + 1, n_{i+1} - l_i)
// times a variant-specific factor in l_{m-2}; the matching chain sum equals
// this value times its (n1 + nm + 1) C(n1 + nm, n1) prefactor (times nm for
// the _r1 variants).
inline BigInt lambda_sum(const std::vector<long>& ns, LambdaVariant variant) {
  const size_t m = ns.size();
  if (m < 3) throw std::invalid_argument("lambda_sum: need at least three chain entries");
  for (long n : ns)
    if (n < 1) throw std::invalid_argument("lambda_sum: chain entries must be positive");
  const size_t depth = m - 2;
  std::vector<long> lambda(depth, 0);
  BigInt total = 0;
  auto descend = [&](auto&& self, size_t idx, long prev, const BigInt& partial) -> void {
    if (partial == 0) return;
    if (idx == depth) {
      total += partial * detail::lambda_tail_factor(variant, lambda[depth - 1], ns[m - 1]);
      return;
    }
    for (long v = 0; v <= prev; ++v) {
      lambda[idx] = v;
      BigInt step = binomial(prev, v) * binomial(ns[idx + 1] + ns[idx + 2] + 1, ns[idx + 1] - v);
      self(self, idx + 1, v, partial * step);
    }
  };
  descend(descend, 0, ns[0], BigInt(1));
  return total;
}

// Prefactor turning lambda_sum into the matching chain sum.
inline BigInt lambda_prefactor(const std::vector<long>& ns, LambdaVariant variant) {
  long n1 = ns.front(), nm = ns.back();
  BigInt pre = BigInt(n1 + nm + 1) * binomial(n1 + nm, n1);
  if (variant == LambdaVariant::plus_r1 || variant == LambdaVariant::alt_r1) pre *= nm;
  return pre;
}

enum class M3Variant { r0_alt, kk1_alt };

// Closed forms for three-entry alternating cyclic sums:
// (n1+n2+n3+1)! / (n1! n2! n3!) for the (2k+1) weight, and
// (n1+n2+n3)! / ((n1-1)! (n2-1)! (n3-1)!) for the k(k+1)(2k+1) weight with
// the sign (-1)^(k+1).
inline BigInt m3_closed(long n1, long n2, long n3, M3Variant variant) {
  if (n1 < 1 || n2 < 1 || n3 < 1) throw std::invalid_argument("m3_closed: need n1, n2, n3 >= 1");
  if (variant == M3Variant::r0_alt)
    return exact_div(factorial(n1 + n2 + n3 + 1), factorial(n1) * factorial(n2) * factorial(n3));
  return exact_div(factorial(n1 + n2 + n3), factorial(n1 - 1) * factorial(n2 - 1) * factorial(n3 - 1));
}

}  // namespace conlab

#endif  // CONLAB_REDUCTIONS_HPP
