#pragma once

#include <cstddef>
#include <vector>

#include "dualbasis/polynomial.hpp"

namespace dualbasis {

/// Truncated power series in t whose coefficients are polynomials in x.
///
/// Holds exactly order()+1 coefficients; every operation is exact through the
/// stated order and never looks past it. Mixing orders is an error.
class FormalSeries {
 public:
  explicit FormalSeries(std::size_t order);
  FormalSeries(std::size_t order, std::vector<Polynomial> coefficients);

  /// exp(p * t), coefficient of t^n equal to p^n / n!.
  static FormalSeries exp_of(std::size_t order, const Polynomial& p);
  /// Series with scalar coefficients c[n] (missing entries are zero).
  static FormalSeries from_scalars(std::size_t order, const std::vector<Rational>& c);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Polynomial& operator[](std::size_t n) const { return coeffs_.at(n); }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }

  /// 1 / s. The constant term must be a nonzero constant polynomial.
  FormalSeries reciprocal() const;
  /// s(c * t).
  FormalSeries scaled(const Rational& c) const;

  FormalSeries& operator+=(const FormalSeries& rhs);
  FormalSeries& operator-=(const FormalSeries& rhs);
  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
  friend bool operator==(const FormalSeries& a, const FormalSeries& b) = default;

 private:
  void check_same_order(const FormalSeries& other) const;
  std::vector<Polynomial> coeffs_;
};

}  // namespace dualbasis
