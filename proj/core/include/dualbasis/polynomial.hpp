#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "dualbasis/rational.hpp"

namespace dualbasis {

/// Dense univariate polynomial over Rational, coefficients in ascending degree.
/// Trailing zeros are stripped; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(std::size_t degree, const Rational& c = Rational(1));
  static Polynomial x() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const;

  Rational operator()(const Rational& x) const;
  double eval_real(double x) const;
  /// Exact evaluation at the dyadic rational value of x, rounded once.
  double eval_exact(double x) const;

  Polynomial derivative() const;
  /// p(x + shift), exact.
  Polynomial shifted(const Rational& shift) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Human-readable form, highest degree first, e.g. "x^2 - x + 1/6".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline Rational poly_eval(const Polynomial& p, const Rational& x) { return p(x); }
inline double poly_eval_real(const Polynomial& p, double x) { return p.eval_real(x); }
inline Polynomial poly_derivative(const Polynomial& p) { return p.derivative(); }

}  // namespace dualbasis
