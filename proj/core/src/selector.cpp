#include "dualbasis/selector.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dualbasis::selector {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSnap = 1e-9;

void check_kernel(int J, Parity parity) {
  if (J < 1) throw std::domain_error("selector kernel needs J >= 1");
  if (parity == Parity::cos && J % 2 == 1) {
    // theta_{(J-1)/2} = pi/2 for every odd J
    if (J == 1) throw std::domain_error("cos node vanishes at theta_0 = pi/2");
    throw std::domain_error("cos node vanishes at theta_" + std::to_string((J - 1) / 2) + " = pi/2");
  }
}

double node(int J, int j) { return (2.0 * j + 1.0) * kPi / (2.0 * J); }

double trig(Parity p, double x) { return p == Parity::sin ? std::sin(x) : std::cos(x); }

double snap(double v) {
  for (double target : {-1.0, 0.0, 1.0})
    if (std::abs(v - target) <= kSnap) return target;
  return v;
}

// base^{-s} for integer s and any nonzero base.
double signed_inv_pow(double base, long s) {
  if (base == 0.0) throw std::domain_error("pole in bilateral chain");
  double r = 1.0 / base;
  double out = 1.0;
  for (long i = 0; i < s; ++i) out *= r;
  return out;
}

}  // namespace

std::string_view to_string(Parity p) { return p == Parity::sin ? "sin" : "cos"; }

double SelectorKernel::at(long k) const {
  const long period = 4L * J;
  long r = k % period;
  if (r < 0) r += period;
  return period_values.at(static_cast<std::size_t>(r));
}

double kernel_value(int J, Parity parity, long k) {
  check_kernel(J, parity);
  double acc = 0.0;
  for (int j = 0; j < J; ++j) {
    const double theta = node(J, j);
    acc += trig(parity, static_cast<double>(k) * theta) / trig(parity, theta);
  }
  return acc / J;
}

SelectorKernel kernel_table(int J, Parity parity) {
  check_kernel(J, parity);
  SelectorKernel table{J, parity, {}};
  table.period_values.reserve(static_cast<std::size_t>(4 * J));
  for (long k = 0; k < 4L * J; ++k) table.period_values.push_back(snap(kernel_value(J, parity, k)));
  return table;
}

double kernel_closed_form_J2(long k, Parity parity) {
  const double kd = static_cast<double>(k);
  const double outer = std::sqrt(2.0) * std::sin(kd * kPi / 2.0);
  return parity == Parity::sin ? outer * std::cos(kd * kPi / 4.0) : outer * std::sin(kd * kPi / 4.0);
}

IdentityCheck lerch_selector_identity(int J, long k, double s, double a, Parity branch,
                                      long bilateral_l, std::size_t terms) {
  check_kernel(J, branch);
  if (s != std::floor(s)) throw std::domain_error("bilateral sum undefined for negative bases");
  if (s < 2.0) throw std::domain_error("lerch_selector_identity: s must be >= 2");
  if (bilateral_l < 0) throw std::invalid_argument("bilateral cutoff must be nonnegative");
  const long si = static_cast<long>(s);
  const double sign = branch == Parity::sin ? -1.0 : 1.0;

  // Right side first so a pole is reported before any series work.
  auto bracket = [&](long l) {
    const double base = 2.0 * J * static_cast<double>(l);
    const double kd = static_cast<double>(k);
    return signed_inv_pow(base + kd + a, si) + sign * signed_inv_pow(base - kd + a, si);
  };
  double rhs = bracket(0);
  for (long l = 1; l <= bilateral_l; ++l) rhs += bracket(l) + bracket(-l);

  std::complex<double> lhs(0.0, 0.0);
  double bound = 0.0;
  for (int j = 0; j < J; ++j) {
    const double theta = node(J, j);
    const double weight = trig(branch, static_cast<double>(k) * theta) / trig(branch, theta);
    const auto z = sign * specfun::UnitComplex::from_angle(theta).value();
    const auto phi = specfun::lerch_phi(z, s, a, terms);
    lhs += weight * phi.value;
    bound += std::abs(weight) * phi.series.tail_bound;
  }
  lhs /= static_cast<double>(J);

  IdentityCheck out;
  out.lhs = lhs.real();
  out.lhs_imag = lhs.imag();
  out.rhs = rhs;
  out.diff = std::abs(out.lhs - rhs);
  out.lhs_tail_bound = bound / J;
  return out;
}

}  // namespace dualbasis::selector
