#include "dualbasis/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dualbasis/exactcore.hpp"

namespace dualbasis::specfun {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kUnitTolerance = 1e-12;

// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

bool is_small_integer(double s) { return s >= 1.0 && s <= 64.0 && s == std::floor(s); }

// base^{-s}, base > 0.
double inv_pow(double base, double s) {
  if (is_small_integer(s)) {
    double r = 1.0 / base;
    double out = 1.0;
    auto n = static_cast<unsigned>(s);
    while (n != 0) {
      if (n & 1U) out *= r;
      n >>= 1U;
      if (n != 0) r *= r;
    }
    return out;
  }
  return std::pow(base, -s);
}

// (s)_m = s (s+1) ... (s+m-1)
double rising(double s, int m) {
  double r = 1.0;
  for (int i = 0; i < m; ++i) r *= s + i;
  return r;
}

// B_{2j} / (2j)! for j = 0..4.
const std::array<double, 5>& euler_maclaurin_coefficients() {
  static const std::array<double, 5> c = [] {
    std::array<double, 5> out{};
    auto b = bernoulli_numbers(8);
    for (unsigned j = 0; j <= 4; ++j)
      out[j] = (b[2 * j] / Rational(factorial(2 * j))).to_double();
    return out;
  }();
  return c;
}

// [t^j] 1/(1 + e^t) for j = 0..7.
const std::array<double, 8>& boole_coefficients() {
  static const std::array<double, 8> c = [] {
    std::vector<Rational> one_plus_exp(8);
    for (unsigned j = 0; j < 8; ++j) one_plus_exp[j] = Rational(BigInt(1), factorial(j));
    one_plus_exp[0] = Rational(2);
    auto inv = FormalSeries::from_scalars(7, one_plus_exp).reciprocal();
    std::array<double, 8> out{};
    for (unsigned j = 0; j < 8; ++j) out[j] = inv[j].coefficient(0).to_double();
    return out;
  }();
  return c;
}

struct Tail {
  std::complex<double> value{0.0, 0.0};
  double bound = 0.0;
};

// sum_{n>=K} (n+a)^{-s} by Euler-Maclaurin; the remainder of a completely
// monotone summand is bounded by the first omitted term.
Tail hurwitz_tail(double s, double u) {
  const auto& c = euler_maclaurin_coefficients();
  double t = std::pow(u, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(u, -s);
  for (int j = 1; j <= 3; ++j) t += c[j] * rising(s, 2 * j - 1) * std::pow(u, -s - 2 * j + 1);
  return {{t, 0.0}, std::abs(c[4]) * rising(s, 7) * std::pow(u, -s - 7)};
}

// sum_{n>=K} (-1)^n (n+a)^{-s} by Boole summation, expanded in derivatives of
// the summand at u = K + a.
Tail alternating_tail(double s, double u, std::size_t k) {
  const auto& c = boole_coefficients();
  double t = 0.0;
  for (int j = 0; j <= 5; ++j) {
    double deriv = (j % 2 == 0 ? 1.0 : -1.0) * rising(s, j) * std::pow(u, -s - j);
    t += c[j] * deriv;
  }
  double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return {{sign * t, 0.0}, std::abs(c[7]) * rising(s, 7) * std::pow(u, -s - 7)};
}

enum class CircleCase { one, minus_one, inside, on_circle };

CircleCase classify(std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() == 1.0) return CircleCase::one;
  if (z.imag() == 0.0 && z.real() == -1.0) return CircleCase::minus_one;
  double r = std::abs(z);
  if (r > 1.0 + kUnitTolerance) throw std::domain_error("lerch_phi: |z| > 1 outside the series disc");
  if (r < 1.0 - kUnitTolerance) return CircleCase::inside;
  return CircleCase::on_circle;
}

// Partial sum over n < terms plus the tail estimate appropriate to z.
ComplexSeries twisted_sum(std::complex<double> z, double s, double a, std::size_t terms) {
  if (terms == 0) throw std::invalid_argument("series truncation must be positive");
  const CircleCase kind = classify(z);

  CompensatedSum re, im;
  double magnitude = 0.0;
  std::complex<double> power(1.0, 0.0);
  for (std::size_t n = 0; n < terms; ++n) {
    const double f = inv_pow(static_cast<double>(n) + a, s);
    re.add(power.real() * f);
    im.add(power.imag() * f);
    magnitude += f;
    power *= z;
  }

  const double u = static_cast<double>(terms) + a;
  Tail tail;
  switch (kind) {
    case CircleCase::one:
      tail = hurwitz_tail(s, u);
      break;
    case CircleCase::minus_one:
      tail = alternating_tail(s, u, terms);
      break;
    case CircleCase::inside: {
      const double r = std::abs(z);
      tail.bound = std::pow(r, static_cast<double>(terms)) * inv_pow(u, s) / (1.0 - r);
      break;
    }
    case CircleCase::on_circle: {
      // Abel summation: partial sums of z^n are bounded by 2/|1-z|.
      double abel = 2.0 * inv_pow(u, s) / std::abs(1.0 - z);
      double integral = s > 1.0 ? std::pow(u, 1.0 - s) / (s - 1.0)
                                : std::numeric_limits<double>::infinity();
      tail.bound = std::min(abel, integral);
      break;
    }
  }

  ComplexSeries out;
  out.value = std::complex<double>(re.value(), im.value()) + tail.value;
  out.series.truncation_k = terms;
  out.series.tail_bound =
      tail.bound + 4.0 * kEps * (magnitude + std::abs(tail.value)) + 8.0 * kEps * std::abs(out.value);
  return out;
}

ComplexSeries scale(ComplexSeries v, std::complex<double> factor) {
  v.value *= factor;
  v.series.tail_bound *= std::abs(factor);
  return v;
}

RealSeries real_part(const ComplexSeries& v, double factor) {
  return {v.value.real() * factor, {v.series.truncation_k, v.series.tail_bound * std::abs(factor)}};
}

RealSeries imag_part(const ComplexSeries& v, double factor) {
  return {v.value.imag() * factor, {v.series.truncation_k, v.series.tail_bound * std::abs(factor)}};
}

double factorial_real(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

UnitComplex::UnitComplex(double re_, double im_) : re(re_), im(im_) {
  if (std::abs(re * re + im * im - 1.0) > kUnitTolerance)
    throw std::domain_error("UnitComplex off the unit circle");
}

UnitComplex UnitComplex::from_turns(double x) {
  if (!std::isfinite(x)) throw std::domain_error("UnitComplex from non-finite turns");
  double r = x - std::floor(x);
  double quarters = 4.0 * r;
  if (quarters == std::floor(quarters)) {
    switch (static_cast<int>(quarters) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return {std::cos(2.0 * kPi * r), std::sin(2.0 * kPi * r)};
}

UnitComplex UnitComplex::from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }

RealSeries zeta(double s, std::size_t terms) {
  if (!(s > 1.0)) throw std::domain_error("series divergent; analytic continuation out of scope");
  return real_part(twisted_sum({1.0, 0.0}, s, 1.0, terms), 1.0);
}

RealSeries dirichlet_beta(double s, std::size_t terms) {
  if (!(s > 0.0)) throw std::domain_error("dirichlet_beta: series diverges for s <= 0");
  // (2k+1)^{-s} = 2^{-s} (k + 1/2)^{-s}
  return real_part(twisted_sum({-1.0, 0.0}, s, 0.5, terms), std::pow(2.0, -s));
}

ComplexSeries lerch_phi(std::complex<double> z, double s, double a, std::size_t terms) {
  if (!(a > 0.0)) throw std::domain_error("pole chain");
  const CircleCase kind = classify(z);
  if (kind != CircleCase::inside && !(s > 1.0))
    throw std::domain_error("lerch_phi: s <= 1 on the unit circle");
  if (!(s > 0.0)) throw std::domain_error("lerch_phi: s must be positive");
  return twisted_sum(z, s, a, terms);
}

ComplexSeries polylog_on_circle(int order, double x, std::size_t terms) {
  if (order < 2) throw std::domain_error("polylog_on_circle: order must be >= 2");
  const auto z = UnitComplex::from_turns(x).value();
  // Li_p(z) = z * Phi(z, p, 1)
  return scale(twisted_sum(z, order, 1.0, terms), z);
}

double hurwitz_basis(int n, double x) {
  if (n < 1) throw std::domain_error("hurwitz_basis: order must be positive");
  return bernoulli_poly(static_cast<unsigned>(n)).eval_exact(x);
}

RealSeries clausen_A(int order, double x, ClausenVariant variant, std::size_t terms) {
  if (order % 2 == 0) throw std::domain_error("clausen_A: order must be odd");
  if (order == 1) throw std::domain_error("conditional convergence unsupported");
  if (order < 1) throw std::domain_error("clausen_A: order must be positive");
  const double prefactor = -2.0 * factorial_real(order) / std::pow(2.0 * kPi, order);
  ComplexSeries li = polylog_on_circle(order, x, terms);
  if (variant == ClausenVariant::standard) return imag_part(li, prefactor);
  // e^{-i pi order/2} = (-i)^order, taken exactly.
  static constexpr std::array<std::complex<double>, 4> kPhase{
      std::complex<double>{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
  return imag_part(scale(li, kPhase[static_cast<std::size_t>(order % 4)]), prefactor);
}

RealSeries clausen_C(int order, double x, std::size_t terms) {
  if (order % 2 != 0 || order < 2) throw std::domain_error("clausen_C: order must be even and >= 2");
  const double prefactor = -factorial_real(order) / std::pow(kPi, order);
  return real_part(polylog_on_circle(order, x, terms), prefactor);
}

double gamma_positive_integer(int s) {
  if (s < 1) throw std::domain_error("gamma_positive_integer: s must be >= 1");
  return factorial_real(s - 1);
}

ComplexSeries poisson_lerch_bridge(int s, double x, std::size_t terms) {
  if (s < 2) throw std::domain_error("s must be >= 2");
  const auto z = UnitComplex::from_turns(x);
  const double factor = gamma_positive_integer(s) / std::pow(kPi, s);
  return scale(lerch_phi(z, s, 1.0, terms), factor);
}

RealSeries bernoulli_fourier(int n, double x, std::size_t terms) {
  if (n < 2) throw std::domain_error("bernoulli_fourier: n must be >= 2");
  if (!(x > 0.0 && x < 1.0)) throw std::domain_error("bernoulli_fourier: x must lie in (0,1)");
  const ComplexSeries li = polylog_on_circle(n, x, terms);
  // Conjugate pairs: Li(z) + (-1)^n conj(Li(z)) = 2 Re Li or 2i Im Li.
  const double base = -2.0 * factorial_real(n) / std::pow(2.0 * kPi, n);
  if (n % 2 == 0) return real_part(li, base * ((n / 2) % 2 == 0 ? 1.0 : -1.0));
  return imag_part(li, base * (((n - 1) / 2) % 2 == 0 ? 1.0 : -1.0));
}

RealSeries bernoulli_from_bridge(int s, double x, std::size_t terms) {
  const auto z = UnitComplex::from_turns(x).value();
  ComplexSeries bridge = poisson_lerch_bridge(s, x, terms);
  // z * bridge = pi^{-s} (s-1)! Li_s(z); undo that factor, then combine as in
  // bernoulli_fourier: B_s = -2 s!/(2 pi)^s * (sign) * Re/Im Li_s.
  ComplexSeries li = scale(bridge, z * (std::pow(kPi, s) / gamma_positive_integer(s)));
  const double base = -2.0 * factorial_real(s) / std::pow(2.0 * kPi, s);
  if (s % 2 == 0) return real_part(li, base * ((s / 2) % 2 == 0 ? 1.0 : -1.0));
  return imag_part(li, base * (((s - 1) / 2) % 2 == 0 ? 1.0 : -1.0));
}

}  // namespace dualbasis::specfun
