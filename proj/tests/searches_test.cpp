#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "conlab/combinatorics.hpp"
#include "conlab/primality.hpp"
#include "conlab/searches.hpp"

namespace {

using conlab::BigInt;

BigInt gcd_big(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// The valuation route must agree with the direct big-integer gcd for every
// condition on its full oracle range.
TEST(GcdConditions, MatchBigIntegerOracleUpTo200) {
  for (long n = 1; n <= 200; ++n) {
    std::uint64_t un = static_cast<std::uint64_t>(n);
    bool central = gcd_big(conlab::binomial(2 * n, n), BigInt(2 * n + 1)) == 1;
    ASSERT_EQ(conlab::central_coprime_condition(un), central) << n;
    BigInt cat = conlab::exact_div(conlab::binomial(2 * n + 1, n), BigInt(2 * n + 1));
    bool f_cond = gcd_big(cat, BigInt(2 * n + 1) * BigInt(2 * n + 3)) == 1;
    ASSERT_EQ(conlab::catalan_gcd_condition(un), f_cond) << n;
    BigInt fuss = conlab::exact_div(conlab::binomial(4 * n + 1, n), BigInt(4 * n + 1));
    bool g_cond = gcd_big(fuss, BigInt(2 * n + 1) * BigInt(4 * n + 1)) == 1;
    ASSERT_EQ(conlab::fuss_catalan_gcd_condition(un), g_cond) << n;
  }
}

TEST(CentralCoprimeSearch, FrozenListTo300) {
  const std::vector<long> expected = {10,  27,  28,  32,  37,  57,  59,  66,  85,  91,  101, 108,
                                      109, 118, 126, 132, 137, 150, 152, 159, 164, 170, 177, 182,
                                      188, 201, 240, 244, 252, 253, 257, 258, 271, 274, 282, 291};
  conlab::SearchSummary summary = conlab::search_central_coprime(300);
  EXPECT_EQ(summary.condition_id, "list-5.1");
  EXPECT_EQ(summary.bound, 300);
  EXPECT_EQ(summary.hits, expected);
}

// The raw condition keeps n with 2n+1 a prime power; there it always holds,
// so the filtered list is exactly the raw list minus those n.
TEST(CentralCoprimeSearch, RawVersusFiltered) {
  conlab::SearchSummary raw = conlab::search_central_coprime(60, true);
  conlab::SearchSummary filtered = conlab::search_central_coprime(60);
  EXPECT_EQ(raw.condition_id, "central-coprime-raw");
  std::vector<long> dropped;
  for (long n : raw.hits)
    if (!std::count(filtered.hits.begin(), filtered.hits.end(), n)) dropped.push_back(n);
  for (long n : dropped) EXPECT_TRUE(conlab::is_prime_power_u64(static_cast<std::uint64_t>(2 * n + 1))) << n;
  for (long n = 1; n <= 60; ++n)
    if (conlab::is_prime_power_u64(static_cast<std::uint64_t>(2 * n + 1))) {
      EXPECT_TRUE(conlab::central_coprime_condition(static_cast<std::uint64_t>(n))) << n;
      EXPECT_TRUE(std::count(raw.hits.begin(), raw.hits.end(), n)) << n;
    }
}

// 2n+1 = 15 at n = 7: gcd(C(14,7), 15) = gcd(3432, 15) = 3, so the raw
// condition fails and 7 belongs to no hit list.
TEST(CentralCoprimeSearch, SevenFailsRawCondition) {
  EXPECT_FALSE(conlab::central_coprime_condition(7));
  conlab::SearchSummary raw = conlab::search_central_coprime(10, true);
  EXPECT_EQ(std::count(raw.hits.begin(), raw.hits.end(), 7), 0);
}

TEST(GcdConditionCounts, FrozenTableColumns) {
  const std::vector<long> xs = {1, 10, 20, 50, 100, 200, 500, 1000, 2000, 3000, 4000, 5000};
  const std::vector<long> f = {1, 8, 13, 24, 38, 59, 104, 167, 255, 353, 439, 508};
  const std::vector<long> g = {1, 7, 14, 23, 37, 56, 108, 169, 270, 366, 445, 523};
  std::vector<conlab::GcdConditionCounts> rows = conlab::count_gcd_conditions(xs);
  ASSERT_EQ(rows.size(), xs.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].x, xs[i]);
    EXPECT_EQ(rows[i].catalan_count, f[i]) << "x=" << xs[i];
    EXPECT_EQ(rows[i].fuss_catalan_count, g[i]) << "x=" << xs[i];
  }
}

TEST(GcdConditionCounts, RejectsBadCheckpoints) {
  EXPECT_THROW(conlab::count_gcd_conditions({10, 5}), std::invalid_argument);
  EXPECT_THROW(conlab::count_gcd_conditions({0}), std::invalid_argument);
  EXPECT_TRUE(conlab::count_gcd_conditions({}).empty());
}

TEST(PrimePairSearch, FrozenFirstTwenty) {
  const std::vector<std::uint64_t> expected = {3,   7,   13,  67,  79,  139, 151, 163, 193, 337,
                                               349, 379, 457, 541, 613, 643, 727, 769, 919, 991};
  std::vector<conlab::PrimePairEntry> entries = conlab::prime_pair_search(20);
  ASSERT_EQ(entries.size(), 20u);
  for (size_t i = 0; i < entries.size(); ++i) {
    EXPECT_EQ(entries[i].p, expected[i]);
    EXPECT_EQ(entries[i].q, expected[i] * expected[i] - expected[i] + 1);
    EXPECT_EQ(entries[i].n, (entries[i].p * entries[i].q - 1) / 2);
    EXPECT_TRUE(conlab::is_prime_u64(entries[i].q));
    // p and p^2-p+1 both prime forces the coprimality condition at the
    // derived n.
    EXPECT_TRUE(entries[i].condition_holds) << entries[i].p;
  }
}

// The smallest pair lands on n = 10, the first entry of the filtered list.
TEST(PrimePairSearch, SmallestPairCrossLinksToCentralCoprimeList) {
  std::vector<conlab::PrimePairEntry> entries = conlab::prime_pair_search(1);
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].p, 3u);
  EXPECT_EQ(entries[0].n, 10u);
  conlab::SearchSummary summary = conlab::search_central_coprime(300);
  EXPECT_TRUE(std::count(summary.hits.begin(), summary.hits.end(), 10));
}

TEST(PrimePairSearch, CountAmongFirstHundredThousandPrimes) {
  EXPECT_EQ(conlab::prime_pair_count(100000), 5912);
}

TEST(PrimePairSearch, RejectsBadCounts) {
  EXPECT_THROW(conlab::prime_pair_search(0), std::invalid_argument);
  EXPECT_THROW(conlab::prime_pair_count(0), std::invalid_argument);
}

}  // namespace
