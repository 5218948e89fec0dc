#ifndef CONLAB_BALLOT_SUMS_HPP
#define CONLAB_BALLOT_SUMS_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "conlab/chains.hpp"

namespace conlab {

struct BallotFactor {
  long n;
  long s;
};

// Weighted sum of products of ballot-number powers:
// sum over k = 0..min_j(n_j) of sign^k * (2k+1)^r * prod_j A(n_j, k)^(s_j).
struct BallotSumSpec {
  std::vector<BallotFactor> factors;
  long r = 0;
  Sign sign = Sign::plus;
  long k_limit = -1;  // explicit upper summation index; -1 means min_j(n_j)

  void validate() const {
    if (factors.empty()) throw std::invalid_argument("BallotSumSpec: need at least one factor");
    for (const auto& f : factors) {
      if (f.n < 0) throw std::invalid_argument("BallotSumSpec: factor index must be nonnegative");
      if (f.s < 1) throw std::invalid_argument("BallotSumSpec: factor power must be positive");
    }
    if (r < 0) throw std::invalid_argument("BallotSumSpec: weight exponent must be nonnegative");
  }
};

inline BigInt ballot_power_sum(const BallotSumSpec& spec) {
  spec.validate();
  long kmax = spec.factors.front().n;
  for (const auto& f : spec.factors) kmax = std::min(kmax, f.n);
  if (spec.k_limit >= 0) kmax = std::min(kmax, spec.k_limit);
  BigInt total = 0;
  for (long k = 0; k <= kmax; ++k) {
    BigInt t = pow_int(2 * k + 1, static_cast<unsigned long>(spec.r));
    for (const auto& f : spec.factors) {
      BigInt a = ballot(f.n, k);
      t *= f.s == 1 ? a : pow_int(a, static_cast<unsigned long>(f.s));
    }
    if (spec.sign == Sign::alternating && (k & 1))
      total -= t;
    else
      total += t;
  }
  return total;
}

}  // namespace conlab

#endif  // CONLAB_BALLOT_SUMS_HPP
