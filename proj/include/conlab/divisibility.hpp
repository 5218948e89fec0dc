#ifndef CONLAB_DIVISIBILITY_HPP
#define CONLAB_DIVISIBILITY_HPP

#include <optional>
#include <stdexcept>

#include "conlab/exact.hpp"

namespace conlab {

struct DivisibilityReport {
  BigInt value;
  BigInt modulus;
  BigInt remainder;  // Euclidean: 0 <= remainder < modulus
  std::optional<BigInt> quotient;
  bool divisible = false;
};

inline DivisibilityReport check_divisibility(const BigInt& value, const BigInt& modulus) {
  if (modulus <= 0) throw std::invalid_argument("check_divisibility: modulus must be positive");
  DivisibilityReport rep;
  rep.value = value;
  rep.modulus = modulus;
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  rep.remainder = r;
  rep.divisible = (r == 0);
  if (rep.divisible) rep.quotient = q;
  return rep;
}

}  // namespace conlab

#endif  // CONLAB_DIVISIBILITY_HPP
