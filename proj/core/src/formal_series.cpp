#include "dualbasis/formal_series.hpp"

#include <stdexcept>

namespace dualbasis {

FormalSeries::FormalSeries(std::size_t order) : coeffs_(order + 1) {}

FormalSeries::FormalSeries(std::size_t order, std::vector<Polynomial> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.size() > order + 1)
    throw std::invalid_argument("formal series has more coefficients than its order allows");
  coeffs_.resize(order + 1);
}

FormalSeries FormalSeries::exp_of(std::size_t order, const Polynomial& p) {
  FormalSeries s(order);
  Polynomial power = Polynomial::constant(Rational(1));
  BigInt fact = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) {
      power = power * p;
      fact *= n;
    }
    s.coeffs_[n] = power * Rational(BigInt(1), fact);
  }
  return s;
}

FormalSeries FormalSeries::from_scalars(std::size_t order, const std::vector<Rational>& c) {
  FormalSeries s(order);
  for (std::size_t n = 0; n <= order && n < c.size(); ++n) s.coeffs_[n] = Polynomial::constant(c[n]);
  return s;
}

void FormalSeries::check_same_order(const FormalSeries& other) const {
  if (other.coeffs_.size() != coeffs_.size())
    throw std::invalid_argument("formal series orders differ");
}

FormalSeries FormalSeries::reciprocal() const {
  const Polynomial& c0 = coeffs_[0];
  if (c0.degree() != 0)
    throw std::domain_error("series reciprocal needs a nonzero constant leading term");
  Rational inv = Rational(1) / c0.coefficient(0);
  FormalSeries r(order());
  r.coeffs_[0] = Polynomial::constant(inv);
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    Polynomial acc;
    for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * r.coeffs_[n - k];
    r.coeffs_[n] = acc * (-inv);
  }
  return r;
}

FormalSeries FormalSeries::scaled(const Rational& c) const {
  FormalSeries r = *this;
  Rational power(1);
  for (std::size_t n = 0; n < r.coeffs_.size(); ++n) {
    r.coeffs_[n] *= power;
    power *= c;
  }
  return r;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& rhs) {
  check_same_order(rhs);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& rhs) {
  check_same_order(rhs);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  a.check_same_order(b);
  FormalSeries out(a.order());
  for (std::size_t n = 0; n < a.coeffs_.size(); ++n) {
    Polynomial acc;
    for (std::size_t k = 0; k <= n; ++k) acc += a.coeffs_[k] * b.coeffs_[n - k];
    out.coeffs_[n] = std::move(acc);
  }
  return out;
}

}  // namespace dualbasis
