#ifndef CONLAB_SERIES_HPP
#define CONLAB_SERIES_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "conlab/exact.hpp"

namespace conlab {

// Bivariate power series with exact rational coefficients, truncated at a
// fixed total degree. Dense triangular storage: coefficient (i, j) exists
// for i + j <= max_degree.
class TruncatedSeries2 {
 public:
  explicit TruncatedSeries2(int max_degree) : degree_(max_degree) {
    if (max_degree < 0) throw std::invalid_argument("TruncatedSeries2: negative degree");
    coef_.resize(tri_size(max_degree));
  }

  static TruncatedSeries2 constant(const BigRat& value, int max_degree) {
    TruncatedSeries2 s(max_degree);
    s.at(0, 0) = value;
    return s;
  }

  int max_degree() const { return degree_; }

  BigRat& at(int i, int j) {
    check_index(i, j);
    return coef_[offset(i, j)];
  }
  const BigRat& at(int i, int j) const {
    check_index(i, j);
    return coef_[offset(i, j)];
  }

  TruncatedSeries2 operator+(const TruncatedSeries2& o) const {
    require_same_degree(o);
    TruncatedSeries2 r(degree_);
    for (size_t t = 0; t < coef_.size(); ++t) r.coef_[t] = coef_[t] + o.coef_[t];
    return r;
  }

  TruncatedSeries2 operator-(const TruncatedSeries2& o) const {
    require_same_degree(o);
    TruncatedSeries2 r(degree_);
    for (size_t t = 0; t < coef_.size(); ++t) r.coef_[t] = coef_[t] - o.coef_[t];
    return r;
  }

  TruncatedSeries2 operator-() const {
    TruncatedSeries2 r(degree_);
    for (size_t t = 0; t < coef_.size(); ++t) r.coef_[t] = -coef_[t];
    return r;
  }

  // Product truncated at the common total degree.
  TruncatedSeries2 operator*(const TruncatedSeries2& o) const {
    require_same_degree(o);
    TruncatedSeries2 r(degree_);
    for (int i = 0; i <= degree_; ++i)
      for (int j = 0; i + j <= degree_; ++j) {
        const BigRat& a = at(i, j);
        if (a == 0) continue;
        for (int u = 0; i + u <= degree_; ++u)
          for (int v = 0; i + u + j + v <= degree_; ++v) {
            const BigRat& b = o.at(u, v);
            if (b == 0) continue;
            r.at(i + u, j + v) += a * b;
          }
      }
    return r;
  }

  TruncatedSeries2 operator*(const BigRat& s) const {
    TruncatedSeries2 r(degree_);
    for (size_t t = 0; t < coef_.size(); ++t) r.coef_[t] = coef_[t] * s;
    return r;
  }

  bool operator==(const TruncatedSeries2& o) const { return degree_ == o.degree_ && coef_ == o.coef_; }
  bool operator!=(const TruncatedSeries2& o) const { return !(*this == o); }

  // Copy with all coefficients of total degree above d cleared.
  TruncatedSeries2 truncated(int d) const {
    TruncatedSeries2 r(degree_);
    for (int i = 0; i <= degree_; ++i)
      for (int j = 0; i + j <= degree_; ++j)
        if (i + j <= d) r.at(i, j) = at(i, j);
    return r;
  }

 private:
  static size_t tri_size(int d) { return static_cast<size_t>(d + 1) * static_cast<size_t>(d + 2) / 2; }

  void check_index(int i, int j) const {
    if (i < 0 || j < 0 || i + j > degree_) throw std::out_of_range("TruncatedSeries2: index beyond truncation degree");
  }

  void require_same_degree(const TruncatedSeries2& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("TruncatedSeries2: mixed truncation degrees");
  }

  // Row-major over i; row i holds j = 0..degree_ - i.
  size_t offset(int i, int j) const {
    size_t si = static_cast<size_t>(i);
    return si * static_cast<size_t>(degree_ + 1) - si * (si - 1) / 2 + static_cast<size_t>(j);
  }

  int degree_;
  std::vector<BigRat> coef_;
};

inline TruncatedSeries2 series_pow(const TruncatedSeries2& s, unsigned long e) {
  TruncatedSeries2 r = TruncatedSeries2::constant(BigRat(1), s.max_degree());
  for (unsigned long i = 0; i < e; ++i) r = r * s;
  return r;
}

// Multiplicative inverse via Newton iteration t <- t (2 - s t) with the
// working degree doubling each step; requires an invertible constant term.
inline TruncatedSeries2 series_inverse(const TruncatedSeries2& s) {
  if (s.at(0, 0) == 0) throw std::invalid_argument("series_inverse: constant term is zero");
  const int degree = s.max_degree();
  TruncatedSeries2 t(degree);
  t.at(0, 0) = 1 / s.at(0, 0);
  TruncatedSeries2 two = TruncatedSeries2::constant(BigRat(2), degree);
  int d = 0;
  while (d < degree) {
    d = std::min(2 * d + 1, degree);
    t = (t * (two - s.truncated(d) * t)).truncated(d);
  }
  return t;
}

// Square root via Newton iteration t <- (t + s t^-1) / 2 with the working
// degree doubling each step; the constant term must be exactly 1.
inline TruncatedSeries2 series_sqrt(const TruncatedSeries2& s) {
  if (s.at(0, 0) != 1) throw std::invalid_argument("series_sqrt: constant term must be 1");
  const int degree = s.max_degree();
  TruncatedSeries2 t = TruncatedSeries2::constant(BigRat(1), degree);
  const BigRat half(1, 2);
  int d = 0;
  while (d < degree) {
    d = std::min(2 * d + 1, degree);
    t = ((t + s.truncated(d) * series_inverse(t)) * half).truncated(d);
  }
  return t;
}

}  // namespace conlab

#endif  // CONLAB_SERIES_HPP
