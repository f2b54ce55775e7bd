#include "dualbasis/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dualbasis::quadrature {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingularTolerance = 1e-14;

// Limit extrapolation: d_j = kLimitStep / 2^j, j < kLimitLevels.
constexpr double kLimitStep = 1.0 / 64.0;
constexpr int kLimitLevels = 6;

// sin(2 pi x) reduced so that sin_2pi(1-x) == -sin_2pi(x) and
// sin_2pi(1/2-x) == sin_2pi(x) hold bit-for-bit on [0,1].
double sin_2pi(double x) {
  double r = x - std::floor(x);
  if (r > 0.5) return -sin_2pi(1.0 - r);
  if (r > 0.25) r = 0.5 - r;
  return std::sin(2.0 * kPi * r);
}

// cot(pi x) on (0,1) with cot(pi(1-x)) == -cot(pi x) bit-for-bit.
double cot_pi(double x) {
  if (x > 0.5) return -cot_pi(1.0 - x);
  return std::cos(kPi * x) / std::sin(kPi * x);
}

double raw_weight(const WeightSpec& w, double x) {
  switch (w.kind) {
    case WeightKind::alt:
      return 1.0 / sin_2pi(x);
    case WeightKind::sym:
      return cot_pi(x);
    case WeightKind::rotated:
      return std::cos(w.phi) / sin_2pi(x) + std::sin(w.phi) * cot_pi(x);
  }
  return 0.0;
}

double checked(double v) {
  if (!std::isfinite(v)) throw std::domain_error("integrand singularity off the PV set");
  return v;
}

// Neville extrapolation to d = 0 of samples v_j taken at d_j.
double extrapolate_to_zero(std::array<double, kLimitLevels> d, std::array<double, kLimitLevels> v) {
  for (int level = 1; level < kLimitLevels; ++level) {
    for (int i = kLimitLevels - 1; i >= level; --i) {
      v[i] = (d[i - level] * v[i] - d[i] * v[i - 1]) / (d[i - level] - d[i]);
    }
  }
  return v[kLimitLevels - 1];
}

// Finite part of f(x) w(x) at singular point p, from symmetric pairs.
double symmetric_limit(const Integrand& f, const WeightSpec& w, double p) {
  std::array<double, kLimitLevels> d{};
  std::array<double, kLimitLevels> v{};
  for (int j = 0; j < kLimitLevels; ++j) {
    d[j] = std::ldexp(kLimitStep, -j);
    double right = p + d[j];
    double left = p - d[j];
    if (left < 0.0) left += 1.0;   // periodic wrap: 0 and 1 are one point
    if (right > 1.0) right -= 1.0;
    v[j] = 0.5 * (checked(f(right) * raw_weight(w, right)) + checked(f(left) * raw_weight(w, left)));
  }
  return extrapolate_to_zero(d, v);
}

}  // namespace

std::string_view to_string(WeightKind k) {
  switch (k) {
    case WeightKind::alt: return "alt";
    case WeightKind::sym: return "sym";
    case WeightKind::rotated: return "rotated";
  }
  return "?";
}

std::string_view to_string(Rule r) { return r == Rule::trapezoid ? "trapezoid" : "midpoint"; }

WeightSpec WeightSpec::alt() { return {WeightKind::alt, 0.0, {0.0, 0.5, 1.0}}; }
WeightSpec WeightSpec::sym() { return {WeightKind::sym, 0.0, {0.0, 1.0}}; }
WeightSpec WeightSpec::rotated(double phi) { return {WeightKind::rotated, phi, {0.0, 0.5, 1.0}}; }

WeightSpec WeightSpec::with_singular_points(std::vector<double> points) const {
  WeightSpec w = *this;
  std::sort(points.begin(), points.end());
  w.singular_points = std::move(points);
  return w;
}

bool WeightSpec::is_singular(double x) const {
  return std::any_of(singular_points.begin(), singular_points.end(),
                     [x](double p) { return std::abs(x - p) < kSingularTolerance; });
}

double weight_eval(const WeightSpec& w, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("weight_eval: x outside [0,1]");
  if (w.is_singular(x)) throw std::domain_error("weight_eval: x is a singular point of the weight");
  return raw_weight(w, x);
}

void QuadratureConfig::validate() const {
  if (nodes_n <= 0) throw std::invalid_argument("N must be positive");
  if (rule == Rule::trapezoid && nodes_n % 2 != 0) throw std::invalid_argument("N must be even");
}

std::vector<Node> quadrature_nodes(const WeightSpec& w, const QuadratureConfig& cfg) {
  cfg.validate();
  const int n = cfg.nodes_n;
  const double h = 1.0 / n;
  std::vector<Node> nodes;
  nodes.reserve(static_cast<std::size_t>(n) + 1);
  if (cfg.rule == Rule::midpoint) {
    for (int i = 0; i < n; ++i) {
      const double x = (i + 0.5) / n;
      nodes.push_back({x, h, w.is_singular(x)});
    }
    return nodes;
  }
  const bool wrap = w.is_singular(0.0) && w.is_singular(1.0);
  for (int i = 0; i <= n; ++i) {
    const double x = static_cast<double>(i) / n;
    const bool end = (i == 0 || i == n);
    if (wrap && i == n) continue;  // folded into x = 0
    double weight = end ? 0.5 * h : h;
    if (wrap && i == 0) weight = h;
    nodes.push_back({x, weight, w.is_singular(x)});
  }
  return nodes;
}

double pv_integrate(const Integrand& f, const WeightSpec& w, const QuadratureConfig& cfg) {
  const auto nodes = quadrature_nodes(w, cfg);
  double sum = 0.0;
  for (const Node& node : nodes) {
    double g = 0.0;
    if (node.singular) {
      if (cfg.rule == Rule::midpoint) throw std::domain_error("midpoint node on a singular point");
      g = symmetric_limit(f, w, node.x);
    } else {
      g = checked(f(node.x) * raw_weight(w, node.x));
    }
    sum += node.weight * g;
  }
  return sum;
}

std::vector<ProbePoint> convergence_probe(const Integrand& f, const WeightSpec& w,
                                          std::span<const int> nodes, Rule rule) {
  std::vector<ProbePoint> out;
  out.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0 && nodes[i] <= nodes[i - 1])
      throw std::invalid_argument("convergence_probe: node counts must increase");
    out.push_back({nodes[i], pv_integrate(f, w, {rule, nodes[i]}), std::nullopt});
  }
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    out[i].delta_to_next = std::abs(out[i + 1].value - out[i].value);
  return out;
}

}  // namespace dualbasis::quadrature
