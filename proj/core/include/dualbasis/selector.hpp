#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "dualbasis/specfun.hpp"

namespace dualbasis::selector {

enum class Parity { sin, cos };

std::string_view to_string(Parity p);

/// One period (k = 0..4J-1) of a finite selector kernel.
struct SelectorKernel {
  int J = 0;
  Parity parity = Parity::sin;
  std::vector<double> period_values;

  /// Value at any integer k, negative k included.
  double at(long k) const;
};

/// (1/J) sum_{j<J} trig(k theta_j) / trig(theta_j), theta_j = (2j+1) pi / (2J).
/// The cos kernel is rejected for odd J, where the middle node is pi/2.
double kernel_value(int J, Parity parity, long k);

/// kernel_value over one period, values within 1e-9 of -1, 0, 1 snapped.
SelectorKernel kernel_table(int J, Parity parity);

/// sqrt(2) sin(k pi/2) cos(k pi/4) (sin) or sqrt(2) sin(k pi/2) sin(k pi/4) (cos).
double kernel_closed_form_J2(long k, Parity parity);

struct IdentityCheck {
  double lhs = 0.0;       // real part of the kernel-weighted Lerch sum
  double lhs_imag = 0.0;  // imaginary part, reported rather than discarded
  double rhs = 0.0;       // symmetric bilateral partial sum, |l| <= L
  double diff = 0.0;      // |lhs - rhs|
  double lhs_tail_bound = 0.0;
};

/// Imaginary-part threshold for treating the kernel-weighted sum as real.
inline constexpr double kImagTolerance = 1e-8;

/// Kernel-wise Poisson-Lerch comparison.
///
///   lhs = (1/J) sum_j [trig(k theta_j)/trig(theta_j)] Phi(-+ e^{i theta_j}, s, a)
///   rhs = sum_{|l|<=L} (2Jl+k+a)^{-s} -+ (2Jl-k+a)^{-s}
///
/// The sin branch uses Phi(-e^{i theta}) and the bracket difference; cos uses
/// Phi(+e^{i theta}) and the sum. s must be an integer >= 2 so negative bases
/// are defined; a zero base throws "pole in bilateral chain".
IdentityCheck lerch_selector_identity(int J, long k, double s, double a, Parity branch,
                                      long bilateral_l,
                                      std::size_t terms = specfun::kDefaultTerms);

}  // namespace dualbasis::selector
