#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace dualbasis::quadrature {

enum class WeightKind { alt, sym, rotated };

std::string_view to_string(WeightKind k);

/// Singular weight on [0,1]:
///   alt      csc(2 pi x)                      singular at {0, 1/2, 1}
///   sym      cot(pi x)                        singular at {0, 1}
///   rotated  cos(phi) csc(2 pi x) + sin(phi) cot(pi x), singular at {0, 1/2, 1}
struct WeightSpec {
  WeightKind kind = WeightKind::alt;
  double phi = 0.0;
  std::vector<double> singular_points;

  static WeightSpec alt();
  static WeightSpec sym();
  static WeightSpec rotated(double phi);

  /// Same weight, with an explicit singular set (e.g. the rotated union, so
  /// alt and sym runs share the rotated node treatment).
  WeightSpec with_singular_points(std::vector<double> points) const;

  bool is_singular(double x) const;
};

/// Weight value at a non-singular x in (0,1). Throws at a singular point.
double weight_eval(const WeightSpec& w, double x);

enum class Rule { trapezoid, midpoint };

std::string_view to_string(Rule r);

struct QuadratureConfig {
  Rule rule = Rule::trapezoid;
  int nodes_n = 200;

  /// Throws std::invalid_argument ("N must be even" for an odd trapezoid N).
  void validate() const;
};

using Integrand = std::function<double(double)>;

struct Node {
  double x = 0.0;
  double weight = 0.0;
  bool singular = false;
};

/// Node set of the rule. Trapezoid nodes that fall on singular points are
/// flagged; 0 and 1 are then merged into one node at x = 0 carrying weight h.
std::vector<Node> quadrature_nodes(const WeightSpec& w, const QuadratureConfig& cfg);

/// Principal-value quadrature of f(x) w(x) over [0,1].
///
/// Trapezoid: x_i = i/N. At a singular node p the integrand is replaced by its
/// symmetric limit lim_{d->0} (g(p+d) + g(p-d))/2 (periodic wrap at 0 and 1),
/// extrapolated to d = 0 from six halvings of d. The pole part cancels in the
/// symmetric pair, so simple poles are taken in the principal-value sense and
/// the regular part keeps its node weight.
/// Midpoint: x_i = (i+1/2)/N, which never lands on a singular point.
double pv_integrate(const Integrand& f, const WeightSpec& w, const QuadratureConfig& cfg);

struct ProbePoint {
  int nodes_n = 0;
  double value = 0.0;
  std::optional<double> delta_to_next;
};

/// pv_integrate at each N (strictly increasing) with successive differences.
std::vector<ProbePoint> convergence_probe(const Integrand& f, const WeightSpec& w,
                                          std::span<const int> nodes, Rule rule = Rule::trapezoid);

}  // namespace dualbasis::quadrature
