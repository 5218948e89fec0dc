#include <gtest/gtest.h>

#include <cstdint>
#include <map>

#include "conlab/combinatorics.hpp"
#include "conlab/lucas.hpp"
#include "conlab/primality.hpp"
#include "conlab/valuation.hpp"

namespace {

using conlab::BigInt;

// Independent Pascal-triangle oracle grown by the addition rule only.
class PascalOracle {
 public:
  const BigInt& get(long n, long k) {
    while (static_cast<long>(rows_.size()) <= n) {
      size_t m = rows_.size();
      std::vector<BigInt> row(m + 1, BigInt(1));
      for (size_t k2 = 1; k2 < m; ++k2) row[k2] = rows_[m - 1][k2 - 1] + rows_[m - 1][k2];
      rows_.push_back(std::move(row));
    }
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
  }

 private:
  std::vector<std::vector<BigInt>> rows_ = {{BigInt(1)}};
};

// v_p(n!) counted by trial division of every factor.
std::uint64_t factorial_valuation_oracle(std::uint64_t p, std::uint64_t n) {
  std::uint64_t v = 0;
  for (std::uint64_t m = 2; m <= n; ++m) {
    std::uint64_t t = m;
    while (t % p == 0) {
      ++v;
      t /= p;
    }
  }
  return v;
}

TEST(Binomial, KnownValues) {
  EXPECT_EQ(conlab::binomial(14, 7), 3432);
  EXPECT_EQ(conlab::binomial(20, 10), 184756);
  EXPECT_EQ(conlab::binomial(0, 0), 1);
  EXPECT_EQ(conlab::binomial(5, 5), 1);
}

TEST(Binomial, OutOfRangeIsZero) {
  EXPECT_EQ(conlab::binomial(5, -1), 0);
  EXPECT_EQ(conlab::binomial(5, 6), 0);
  EXPECT_EQ(conlab::binomial(0, 1), 0);
}

TEST(Binomial, NegativeUpperIndexRejected) {
  EXPECT_THROW(conlab::binomial(-1, 0), std::invalid_argument);
}

// Property: every row agrees with the addition-rule oracle.
TEST(Binomial, PascalRuleUpTo200) {
  PascalOracle oracle;
  for (long n = 0; n <= 200; ++n)
    for (long k = 0; k <= n; ++k) ASSERT_EQ(conlab::binomial(n, k), oracle.get(n, k)) << n << " " << k;
}

TEST(Factorial, MatchesIterativeProduct) {
  BigInt acc = 1;
  for (long n = 1; n <= 120; ++n) {
    acc *= n;
    ASSERT_EQ(conlab::factorial(n), acc);
  }
  EXPECT_EQ(conlab::factorial(0), 1);
}

TEST(LegendreValuation, KnownValues) {
  EXPECT_EQ(conlab::legendre_valuation(2, 10), 8u);
  EXPECT_EQ(conlab::legendre_valuation(3, 9), 4u);
  EXPECT_EQ(conlab::legendre_valuation(5, 4), 0u);
}

TEST(LegendreValuation, CompositeBaseRejected) {
  EXPECT_THROW(conlab::legendre_valuation(6, 10), std::invalid_argument);
}

// Property: agrees with factorizing every factor of n! for p <= 50, n <= 500.
TEST(LegendreValuation, MatchesFactorizationOracle) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
    for (std::uint64_t n = 0; n <= 500; n += 7)
      ASSERT_EQ(conlab::legendre_valuation(p, n), factorial_valuation_oracle(p, n)) << p << " " << n;
  ASSERT_EQ(conlab::legendre_valuation(3, 500), factorial_valuation_oracle(3, 500));
  ASSERT_EQ(conlab::legendre_valuation(2, 499), factorial_valuation_oracle(2, 499));
}

TEST(BinomialValuation, KnownValues) {
  EXPECT_EQ(conlab::binomial_valuation(7, 14, 7), 0u);
  EXPECT_EQ(conlab::binomial_valuation(13, 14, 7), 1u);
  EXPECT_EQ(conlab::binomial_valuation(2, 14, 7), 3u);  // 3432 = 2^3 * 3 * 11 * 13
}

// Property: the Legendre route and the carry count agree everywhere sampled.
TEST(BinomialValuation, MatchesKummerCarries) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 31, 47})
    for (std::uint64_t n = 0; n <= 200; ++n)
      for (std::uint64_t k = 0; k <= n; k += (n / 17 + 1))
        ASSERT_EQ(conlab::binomial_valuation(p, n, k), conlab::kummer_carries(p, k, n - k)) << p << " " << n << " " << k;
}

TEST(BinomialValuation, RejectsOutOfRange) {
  EXPECT_THROW(conlab::binomial_valuation(5, 3, 4), std::out_of_range);
}

TEST(Lucas, KnownValues) {
  EXPECT_EQ(conlab::lucas_binomial_mod(7, 3, 5), 0u);   // C(7,3) = 35
  EXPECT_EQ(conlab::lucas_binomial_mod(14, 7, 3), 0u);  // C(14,7) = 3432 = 2^3*3*11*13
  EXPECT_EQ(conlab::lucas_binomial_mod(14, 7, 5), 3432 % 5);
  EXPECT_EQ(conlab::lucas_binomial_mod(10, 4, 7), 0u);  // C(10,4) = 210
}

TEST(Lucas, CompositeModulusRejected) {
  EXPECT_THROW(conlab::lucas_binomial_mod(10, 3, 9), std::invalid_argument);
}

// Property: agrees with the direct residue of the exact binomial for
// p <= 50, n <= 120.
TEST(Lucas, MatchesDirectResidue) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
    for (long n = 0; n <= 120; ++n)
      for (long k = 0; k <= n; ++k) {
        BigInt direct = conlab::binomial(n, k) % static_cast<unsigned long>(p);
        ASSERT_EQ(conlab::lucas_binomial_mod(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k), p),
                  direct.get_ui())
            << p << " " << n << " " << k;
      }
}

TEST(PrimalityU64, SmallValues) {
  EXPECT_FALSE(conlab::is_prime_u64(0));
  EXPECT_FALSE(conlab::is_prime_u64(1));
  EXPECT_TRUE(conlab::is_prime_u64(2));
  EXPECT_TRUE(conlab::is_prime_u64(3));
  EXPECT_FALSE(conlab::is_prime_u64(4));
  EXPECT_TRUE(conlab::is_prime_u64(991));
  EXPECT_FALSE(conlab::is_prime_u64(993));
}

TEST(PrimalityU64, MatchesSieve) {
  auto primes = conlab::primes_up_to(20000);
  std::vector<bool> mark(20001, false);
  for (auto p : primes) mark[p] = true;
  for (std::uint64_t n = 0; n <= 20000; ++n) ASSERT_EQ(conlab::is_prime_u64(n), mark[static_cast<size_t>(n)]) << n;
}

TEST(PrimalityU64, LargeWitnessCases) {
  EXPECT_TRUE(conlab::is_prime_u64(1000000007ull));
  EXPECT_TRUE(conlab::is_prime_u64(18446744073709551557ull));  // largest 64-bit prime
  EXPECT_FALSE(conlab::is_prime_u64(18446744073709551555ull));
  EXPECT_FALSE(conlab::is_prime_u64(3215031751ull));  // strong pseudoprime to {2,3,5,7}
}

TEST(ClassifyPrimePower, KnownValues) {
  auto pp = conlab::classify_prime_power(BigInt(27));
  ASSERT_TRUE(pp.has_value());
  EXPECT_EQ(pp->p, 3);
  EXPECT_EQ(pp->a, 3u);
  EXPECT_EQ(pp->certainty, conlab::Primality::prime);

  EXPECT_FALSE(conlab::classify_prime_power(BigInt(21)).has_value());
  EXPECT_FALSE(conlab::classify_prime_power(BigInt(15)).has_value());

  auto prime = conlab::classify_prime_power(BigInt(13));
  ASSERT_TRUE(prime.has_value());
  EXPECT_EQ(prime->p, 13);
  EXPECT_EQ(prime->a, 1u);
}

TEST(ClassifyPrimePower, RejectsBelowTwo) {
  EXPECT_THROW(conlab::classify_prime_power(BigInt(1)), std::invalid_argument);
}

// Property: p^a round-trips for p <= 100, a <= 6, and products of two
// distinct primes never classify as prime powers.
TEST(ClassifyPrimePower, RoundTrip) {
  auto primes = conlab::primes_up_to(100);
  for (auto p : primes)
    for (unsigned long a = 1; a <= 6; ++a) {
      BigInt n = conlab::pow_int(static_cast<long>(p), a);
      auto pp = conlab::classify_prime_power(n);
      ASSERT_TRUE(pp.has_value()) << p << "^" << a;
      EXPECT_EQ(pp->p, static_cast<long>(p));
      EXPECT_EQ(pp->a, a);
    }
  for (size_t i = 0; i + 1 < primes.size(); i += 3)
    ASSERT_FALSE(conlab::classify_prime_power(BigInt(primes[i]) * primes[i + 1]).has_value());
}

TEST(BitCountOnes, Values) {
  EXPECT_EQ(conlab::bit_count_ones(BigInt(0)), 0u);
  EXPECT_EQ(conlab::bit_count_ones(BigInt(7)), 3u);
  EXPECT_EQ(conlab::bit_count_ones(BigInt(1) << 100), 1u);
  EXPECT_THROW(conlab::bit_count_ones(BigInt(-1)), std::invalid_argument);
}

TEST(FactorU64, Basics) {
  auto fs = conlab::factor_u64(600);
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(fs[0].p, 2u);
  EXPECT_EQ(fs[0].exp, 3u);
  EXPECT_EQ(fs[1].p, 3u);
  EXPECT_EQ(fs[1].exp, 1u);
  EXPECT_EQ(fs[2].p, 5u);
  EXPECT_EQ(fs[2].exp, 2u);
  EXPECT_TRUE(conlab::factor_u64(1).empty());
  auto big = conlab::factor_u64(999999999989ull);
  ASSERT_EQ(big.size(), 1u);
  EXPECT_EQ(big[0].p, 999999999989ull);
}

TEST(ExactHelpers, RationalsAndDivision) {
  using conlab::BigRat;
  BigRat q = conlab::make_rat(BigInt(6), BigInt(-4));
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_FALSE(conlab::is_integer(q));
  EXPECT_TRUE(conlab::is_integer(conlab::make_rat(BigInt(8), BigInt(4))));
  EXPECT_EQ(conlab::exact_div(BigInt(-12), BigInt(4)), -3);
  EXPECT_THROW(conlab::exact_div(BigInt(5), BigInt(2)), std::domain_error);
  EXPECT_EQ(conlab::catalan(5), 42);
}

}  // namespace
