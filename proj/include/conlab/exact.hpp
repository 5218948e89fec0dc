#ifndef CONLAB_EXACT_HPP
#define CONLAB_EXACT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace conlab {

// Arbitrary-precision integers and rationals. All arithmetic is exact.
// Rationals are kept canonical (gcd(num, den) = 1, den > 0).
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt pow_int(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigInt pow_int(long base, unsigned long exp) {
  return pow_int(BigInt(base), exp);
}

// Quotient of an exact division; throws if the division leaves a remainder.
inline BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("exact_div: zero divisor");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::domain_error("exact_div: " + num.get_str() + " not divisible by " + den.get_str());
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const BigRat& q) { return q.get_den() == 1; }

inline bool is_odd(const BigInt& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }
inline std::string to_decimal(const BigRat& q) { return q.get_str(); }

}  // namespace conlab

#endif  // CONLAB_EXACT_HPP
