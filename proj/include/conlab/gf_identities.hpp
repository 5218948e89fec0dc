#ifndef CONLAB_GF_IDENTITIES_HPP
#define CONLAB_GF_IDENTITIES_HPP

#include <optional>
#include <string>

#include "conlab/combinatorics.hpp"
#include "conlab/recurrences.hpp"
#include "conlab/series.hpp"

namespace conlab {

struct SeriesMismatch {
  int m = 0;
  int n = 0;
  BigRat lhs;
  BigRat rhs;
};

// 1 - 2x - 2y - 2xy + x^2 + y^2, the discriminant whose square root drives
// the closed-form generating functions below.
inline TruncatedSeries2 gf_discriminant(int degree) {
  TruncatedSeries2 s(degree);
  s.at(0, 0) = 1;
  if (degree >= 1) {
    s.at(1, 0) = -2;
    s.at(0, 1) = -2;
  }
  if (degree >= 2) {
    s.at(1, 1) = -2;
    s.at(2, 0) = 1;
    s.at(0, 2) = 1;
  }
  return s;
}

namespace detail {

inline TruncatedSeries2 gf_linear(int degree, const BigRat& c, const BigRat& cx, const BigRat& cy) {
  TruncatedSeries2 s(degree);
  s.at(0, 0) = c;
  if (degree >= 1) {
    s.at(1, 0) = cx;
    s.at(0, 1) = cy;
  }
  return s;
}

}  // namespace detail

// Coefficientwise check of the closed form
//   sum_{m,n} C(m+n+alpha, m) C(m+n+beta, n) x^m y^n
//     = 2^(alpha+beta) / (D (1-x+y+D)^alpha (1+x-y+D)^beta),  D = sqrt(disc),
// up to total degree `degree`. Returns the first mismatch, if any.
inline std::optional<SeriesMismatch> delta_gf_find_mismatch(long alpha, long beta, int degree) {
  if (alpha < 0 || beta < 0) throw std::invalid_argument("delta_gf_find_mismatch: need alpha, beta >= 0");
  TruncatedSeries2 delta = series_sqrt(gf_discriminant(degree));
  TruncatedSeries2 a = detail::gf_linear(degree, BigRat(1), BigRat(-1), BigRat(1)) + delta;
  TruncatedSeries2 b = detail::gf_linear(degree, BigRat(1), BigRat(1), BigRat(-1)) + delta;
  TruncatedSeries2 den = delta * series_pow(a, static_cast<unsigned long>(alpha)) *
                         series_pow(b, static_cast<unsigned long>(beta));
  TruncatedSeries2 rhs = series_inverse(den) * BigRat(pow_int(2, static_cast<unsigned long>(alpha + beta)));
  for (int m = 0; m <= degree; ++m)
    for (int n = 0; m + n <= degree; ++n) {
      BigRat lhs(binomial(m + n + alpha, m) * binomial(m + n + beta, n));
      if (lhs != rhs.at(m, n)) return SeriesMismatch{m, n, lhs, rhs.at(m, n)};
    }
  return std::nullopt;
}

inline bool delta_gf_check(long alpha, long beta, int degree) {
  return !delta_gf_find_mismatch(alpha, beta, degree).has_value();
}

// Coefficientwise check that the alternating two-variable (2k+1)-weighted
// sums assemble into 1 / (1-x-y)^2, i.e. that the coefficient at (n1, n2)
// equals (n1+n2+1) C(n1+n2, n1).
inline std::optional<SeriesMismatch> gf_remark_find_mismatch(int degree) {
  TruncatedSeries2 base = detail::gf_linear(degree, BigRat(1), BigRat(-1), BigRat(-1));
  TruncatedSeries2 inv = series_inverse(base);
  TruncatedSeries2 rhs = inv * inv;
  for (int n1 = 0; n1 <= degree; ++n1)
    for (int n2 = 0; n1 + n2 <= degree; ++n2) {
      BigRat lhs(two_var_direct(0, n1, n2, Sign::alternating, Weight::odd_power));
      if (lhs != rhs.at(n1, n2)) return SeriesMismatch{n1, n2, lhs, rhs.at(n1, n2)};
    }
  return std::nullopt;
}

inline bool gf_remark_check(int degree) { return !gf_remark_find_mismatch(degree).has_value(); }

}  // namespace conlab

#endif  // CONLAB_GF_IDENTITIES_HPP
