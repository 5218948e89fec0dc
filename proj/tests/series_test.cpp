#include <gtest/gtest.h>

#include "conlab/combinatorics.hpp"
#include "conlab/gf_identities.hpp"
#include "conlab/series.hpp"

namespace {

using conlab::BigRat;
using conlab::TruncatedSeries2;

TEST(Series, ConstructionAndIndexing) {
  TruncatedSeries2 s(3);
  EXPECT_EQ(s.max_degree(), 3);
  EXPECT_EQ(s.at(1, 2), 0);
  s.at(1, 2) = BigRat(5, 3);
  EXPECT_EQ(s.at(1, 2), BigRat(5, 3));
  EXPECT_THROW(s.at(2, 2), std::out_of_range);
  EXPECT_THROW(s.at(-1, 0), std::out_of_range);
  EXPECT_THROW(TruncatedSeries2(-1), std::invalid_argument);
}

TEST(Series, RingOperations) {
  // (1 + x)(1 + y) = 1 + x + y + xy, truncated products drop degree > 2.
  TruncatedSeries2 a(2), b(2);
  a.at(0, 0) = 1;
  a.at(1, 0) = 1;
  b.at(0, 0) = 1;
  b.at(0, 1) = 1;
  TruncatedSeries2 p = a * b;
  EXPECT_EQ(p.at(0, 0), 1);
  EXPECT_EQ(p.at(1, 0), 1);
  EXPECT_EQ(p.at(0, 1), 1);
  EXPECT_EQ(p.at(1, 1), 1);
  EXPECT_EQ(p.at(2, 0), 0);
  EXPECT_EQ(a + b - a, b);
  EXPECT_EQ(-(a - b) + a, b);
  EXPECT_TRUE(a * BigRat(2) == a + a);
  TruncatedSeries2 other_degree(3);
  EXPECT_THROW(a + other_degree, std::invalid_argument);
}

TEST(Series, TruncationClearsHighDegrees) {
  TruncatedSeries2 s(4);
  s.at(0, 0) = 1;
  s.at(2, 2) = 7;
  TruncatedSeries2 t = s.truncated(3);
  EXPECT_EQ(t.at(0, 0), 1);
  EXPECT_EQ(t.at(2, 2), 0);
}

TEST(Series, InverseIsTwoSidedUnit) {
  for (int degree : {1, 4, 9}) {
    TruncatedSeries2 s(degree);
    s.at(0, 0) = BigRat(2);
    if (degree >= 1) {
      s.at(1, 0) = BigRat(-3);
      s.at(0, 1) = BigRat(1, 2);
    }
    if (degree >= 2) s.at(1, 1) = BigRat(5);
    TruncatedSeries2 inv = conlab::series_inverse(s);
    EXPECT_EQ(s * inv, TruncatedSeries2::constant(BigRat(1), degree));
    EXPECT_EQ(inv * s, TruncatedSeries2::constant(BigRat(1), degree));
  }
  EXPECT_THROW(conlab::series_inverse(TruncatedSeries2(3)), std::invalid_argument);
}

// Coefficient of x^i y^j in 1/(1-x-y) is C(i+j, i).
TEST(Series, GeometricInverseCoefficients) {
  const int degree = 10;
  TruncatedSeries2 s(degree);
  s.at(0, 0) = 1;
  s.at(1, 0) = -1;
  s.at(0, 1) = -1;
  TruncatedSeries2 inv = conlab::series_inverse(s);
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j) ASSERT_EQ(inv.at(i, j), BigRat(conlab::binomial(i + j, i)));
}

TEST(Series, SqrtSquaresBack) {
  TruncatedSeries2 disc = conlab::gf_discriminant(8);
  TruncatedSeries2 root = conlab::series_sqrt(disc);
  EXPECT_EQ(root * root, disc);
  TruncatedSeries2 not_monic(2);
  not_monic.at(0, 0) = 4;
  EXPECT_THROW(conlab::series_sqrt(not_monic), std::invalid_argument);
}

TEST(Series, SqrtOneMinusTwoX) {
  TruncatedSeries2 s(3);
  s.at(0, 0) = 1;
  s.at(1, 0) = -2;
  TruncatedSeries2 root = conlab::series_sqrt(s);
  EXPECT_EQ(root.at(0, 0), BigRat(1));
  EXPECT_EQ(root.at(1, 0), BigRat(-1));
  EXPECT_EQ(root.at(2, 0), BigRat(-1, 2));
  EXPECT_EQ(root.at(3, 0), BigRat(-1, 2));
}

TEST(GfDiscriminant, FrozenPolynomial) {
  TruncatedSeries2 d = conlab::gf_discriminant(5);
  EXPECT_EQ(d.at(0, 0), 1);
  EXPECT_EQ(d.at(1, 0), -2);
  EXPECT_EQ(d.at(0, 1), -2);
  EXPECT_EQ(d.at(1, 1), -2);
  EXPECT_EQ(d.at(2, 0), 1);
  EXPECT_EQ(d.at(0, 2), 1);
  EXPECT_EQ(d.at(2, 1), 0);
  EXPECT_EQ(d.at(3, 0), 0);
}

TEST(GfIdentities, BinomialProductClosedForm) {
  for (long alpha = 0; alpha <= 2; ++alpha)
    for (long beta = 0; beta <= 2; ++beta) ASSERT_TRUE(conlab::delta_gf_check(alpha, beta, 8));
  EXPECT_FALSE(conlab::delta_gf_find_mismatch(1, 2, 8).has_value());
  EXPECT_THROW(conlab::delta_gf_check(-1, 0, 4), std::invalid_argument);
}

TEST(GfIdentities, AlternatingTwoVarEndpoint) {
  EXPECT_TRUE(conlab::gf_remark_check(10));
}

}  // namespace
