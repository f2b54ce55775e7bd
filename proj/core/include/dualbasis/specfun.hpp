#pragma once

#include <complex>
#include <cstddef>
#include <optional>

namespace dualbasis::specfun {

inline constexpr std::size_t kDefaultTerms = 100000;

/// Truncation record attached to every series value.
///
/// `tail_bound` bounds |computed - exact|: the omitted tail (after any
/// asymptotic tail correction) plus an allowance for summation rounding.
struct TruncatedSeries {
  std::size_t truncation_k = kDefaultTerms;
  double tail_bound = 0.0;
};

template <class T>
struct SeriesValue {
  T value{};
  TruncatedSeries series;
};

using RealSeries = SeriesValue<double>;
using ComplexSeries = SeriesValue<std::complex<double>>;

/// Point on the unit circle, stored as an explicit (re, im) pair.
///
/// from_turns(x) gives e^{2 pi i x} and is exact at quarter turns, so the
/// special cases z = 1, -1, i, -i are recognised bit-for-bit downstream.
struct UnitComplex {
  double re = 1.0;
  double im = 0.0;

  UnitComplex() = default;
  UnitComplex(double re_, double im_);

  static UnitComplex from_turns(double x);
  static UnitComplex from_angle(double theta);

  std::complex<double> value() const { return {re, im}; }
};

/// Riemann zeta for real s > 1.
RealSeries zeta(double s, std::size_t terms = kDefaultTerms);

/// Dirichlet beta, sum (-1)^k (2k+1)^{-s}, for s > 0.
RealSeries dirichlet_beta(double s, std::size_t terms = kDefaultTerms);

/// Lerch transcendent sum_{n>=0} z^n / (n+a)^s for |z| <= 1, a > 0.
/// On |z| = 1 the series needs s > 1; inside the disc s > 0 suffices.
ComplexSeries lerch_phi(std::complex<double> z, double s, double a,
                        std::size_t terms = kDefaultTerms);
inline ComplexSeries lerch_phi(UnitComplex z, double s, double a,
                               std::size_t terms = kDefaultTerms) {
  return lerch_phi(z.value(), s, a, terms);
}

/// Li_order(e^{2 pi i x}) = sum_{k>=1} e^{2 pi i k x} / k^order, order >= 2.
ComplexSeries polylog_on_circle(int order, double x, std::size_t terms = kDefaultTerms);

/// Hurwitz-side basis at integer order: B(n;x) = -n zeta(1-n,x) = B_n(x).
/// Evaluated exactly in rationals and rounded once at the end.
double hurwitz_basis(int n, double x);

enum class ClausenVariant { literal, standard };

/// Clausen-side basis A_{2n+1}.
///
/// literal keeps the polylogarithm phase construction as written, which
/// reduces to a cosine series; standard is the sine-Clausen series
///   -(2n+1)!/(2 pi)^{2n+1} * 2 * sum_k sin(2 pi k x) / k^{2n+1}.
/// Order must be odd and at least 3.
RealSeries clausen_A(int order, double x, ClausenVariant variant,
                     std::size_t terms = kDefaultTerms);

/// Cosine-Clausen family C_{2n}(x) = -(2n)!/pi^{2n} sum_k cos(2 pi k x)/k^{2n}.
RealSeries clausen_C(int order, double x, std::size_t terms = kDefaultTerms);

/// pi^{-s} Gamma(s) Phi(e^{2 pi i x}, s, 1) for integer s >= 2.
ComplexSeries poisson_lerch_bridge(int s, double x, std::size_t terms = kDefaultTerms);

/// B_n(x) from its Fourier series -n!/(2 pi i)^n sum_{k != 0} e^{2 pi i k x}/k^n,
/// n >= 2, x in (0,1).
RealSeries bernoulli_fourier(int n, double x, std::size_t terms = kDefaultTerms);

/// B_s(x) recovered from the bridge value: the conjugate-pair combination of
/// e^{2 pi i x} * bridge(s, x). Integer s >= 2.
RealSeries bernoulli_from_bridge(int s, double x, std::size_t terms = kDefaultTerms);

/// Gamma(s) = (s-1)! for integer s >= 1, promoted to double.
double gamma_positive_integer(int s);

}  // namespace dualbasis::specfun
