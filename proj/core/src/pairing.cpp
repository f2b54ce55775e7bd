#include "dualbasis/pairing.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "dualbasis/exactcore.hpp"

namespace dualbasis::pairing {
namespace {

using quadrature::WeightSpec;
using specfun::ClausenVariant;

constexpr double kPi = std::numbers::pi;

enum class ClausenFamily { A, C };

struct IntegrandSpec {
  int bernoulli_order = 0;
  ClausenFamily family = ClausenFamily::A;
  int clausen_order = 0;
  ClausenVariant variant = ClausenVariant::standard;
};

quadrature::Integrand make_integrand(const IntegrandSpec& spec, std::size_t terms) {
  auto poly = std::make_shared<const Polynomial>(bernoulli_poly(static_cast<unsigned>(spec.bernoulli_order)));
  return [poly, spec, terms](double x) {
    const double b = poly->eval_exact(x);
    const double c = spec.family == ClausenFamily::A
                         ? specfun::clausen_A(spec.clausen_order, x, spec.variant, terms).value
                         : specfun::clausen_C(spec.clausen_order, x, terms).value;
    return b * c;
  };
}

// A priori bound on the truncated Clausen factor, uniform in x.
double clausen_tail_bound(const IntegrandSpec& spec, std::size_t terms) {
  const int p = spec.clausen_order;
  double fact = 1.0;
  for (int k = 2; k <= p; ++k) fact *= k;
  const double series = std::pow(static_cast<double>(terms), 1.0 - p) / (p - 1.0);
  return spec.family == ClausenFamily::A ? 2.0 * fact / std::pow(2.0 * kPi, p) * series
                                         : fact / std::pow(kPi, p) * series;
}

Verdict decide(const PairingReport& r, const Tolerances& tol) {
  std::optional<double> reference = r.paper_target ? r.paper_target : r.closed_form;
  if (reference && std::abs(r.quadrature_value_hi - *reference) <= tol.target) return Verdict::match;
  if (r.convergence_delta <= tol.convergence) return Verdict::converged_mismatch;
  return Verdict::unconverged;
}

void evaluate(PairingReport& report, const IntegrandSpec& spec, const WeightSpec& weight,
              const PairingOptions& opts) {
  opts.quadrature.validate();
  if (opts.refine_factor < 2) throw std::invalid_argument("refine factor must be >= 2");
  const auto f = make_integrand(spec, opts.series_terms);
  quadrature::QuadratureConfig hi = opts.quadrature;
  hi.nodes_n *= opts.refine_factor;
  report.nodes_n = opts.quadrature.nodes_n;
  report.nodes_n_hi = hi.nodes_n;
  report.quadrature_value = quadrature::pv_integrate(f, weight, opts.quadrature);
  report.quadrature_value_hi = quadrature::pv_integrate(f, weight, hi);
  report.convergence_delta = std::abs(report.quadrature_value - report.quadrature_value_hi);
  report.basis_tail_bound = clausen_tail_bound(spec, opts.series_terms);
  report.verdict = decide(report, opts.tolerances);
}

void check_degrees(int m, int n) {
  if (m < 1 || n < 1) throw std::domain_error("pairing degrees must be >= 1");
}

void set_exact(PairingReport& r, const Rational& q) {
  r.closed_form = q.to_double();
  r.closed_form_exact = q.to_string();
}

}  // namespace

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::alt: return "alt";
    case Branch::sym: return "sym";
    case Branch::cross_alt: return "cross-alt";
    case Branch::cross_sym: return "cross-sym";
    case Branch::rotated: return "rotated";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::match: return "match";
    case Verdict::converged_mismatch: return "converged-mismatch";
    case Verdict::unconverged: return "unconverged";
  }
  return "?";
}

std::string_view to_string(ClausenVariant v) { return v == ClausenVariant::literal ? "literal" : "standard"; }

Branch branch_from_string(std::string_view s) {
  for (Branch b : {Branch::alt, Branch::sym, Branch::cross_alt, Branch::cross_sym, Branch::rotated})
    if (to_string(b) == s) return b;
  throw std::invalid_argument("unknown branch '" + std::string(s) + "'");
}

Verdict verdict_from_string(std::string_view s) {
  for (Verdict v : {Verdict::match, Verdict::converged_mismatch, Verdict::unconverged})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

ClausenVariant variant_from_string(std::string_view s) {
  if (s == "literal") return ClausenVariant::literal;
  if (s == "standard") return ClausenVariant::standard;
  throw std::invalid_argument("unknown A-variant '" + std::string(s) + "'");
}

Rational closed_form_alt(int m) {
  if (m < 1) throw std::domain_error("closed_form_alt: m must be >= 1");
  const auto um = static_cast<unsigned>(m);
  Rational value = euler_number(2 * um) / pow(Rational(4), um + 1);
  return m % 2 == 0 ? value : -value;
}

Rational closed_form_sym(int m) {
  if (m < 1) throw std::domain_error("closed_form_sym: m must be >= 1");
  const auto um = static_cast<unsigned>(m);
  Rational value = pow(Rational(2), 2 * um + 1) * bernoulli_number(2 * um + 2) /
                   Rational(static_cast<std::int64_t>(2 * um + 2));
  return m % 2 == 0 ? value : -value;
}

double closed_form_alt_numeric(int m) {
  const int s = 2 * m + 1;
  return specfun::gamma_positive_integer(s) * specfun::dirichlet_beta(s).value / std::pow(kPi, s);
}

double closed_form_sym_numeric(int m) {
  const int s = 2 * m + 2;
  return specfun::gamma_positive_integer(s) * specfun::zeta(s).value / std::pow(kPi, s);
}

std::optional<double> paper_target(Branch b, int m, int n) {
  if (m < 1 || m > 2 || n < 1 || n > 2) return std::nullopt;
  const bool diag = m == n;
  switch (b) {
    case Branch::alt:
      return diag ? (m == 1 ? 0.0625 : 0.078125) : 0.0;
    case Branch::sym:
      return diag ? (m == 1 ? 0.0666666667 : 0.1269841270) : 0.0;
    case Branch::cross_alt:
    case Branch::cross_sym:
      return 0.0;
    case Branch::rotated:
      return std::nullopt;
  }
  return std::nullopt;
}

PairingReport pair_alt(int m, int n, ClausenVariant variant, const PairingOptions& opts) {
  check_degrees(m, n);
  PairingReport r;
  r.branch = Branch::alt;
  r.m = m;
  r.n = n;
  r.a_variant = variant;
  set_exact(r, m == n ? closed_form_alt(m) : Rational(0));
  r.paper_target = paper_target(Branch::alt, m, n);
  if (variant == ClausenVariant::literal) r.note = "literal phase: A reduces to a cosine series";
  evaluate(r, {2 * m, ClausenFamily::A, 2 * n + 1, variant}, WeightSpec::alt(), opts);
  return r;
}

PairingReport pair_sym(int m, int n, const PairingOptions& opts) {
  check_degrees(m, n);
  PairingReport r;
  r.branch = Branch::sym;
  r.m = m;
  r.n = n;
  set_exact(r, m == n ? closed_form_sym(m) : Rational(0));
  r.paper_target = paper_target(Branch::sym, m, n);
  evaluate(r, {2 * m + 1, ClausenFamily::C, 2 * n, ClausenVariant::standard}, WeightSpec::sym(), opts);
  return r;
}

PairingReport pair_cross(CrossKind kind, int m, int n, ClausenVariant variant, const PairingOptions& opts) {
  check_degrees(m, n);
  PairingReport r;
  r.m = m;
  r.n = n;
  set_exact(r, Rational(0));
  if (kind == CrossKind::even_with_C) {
    r.branch = Branch::cross_sym;
    r.paper_target = paper_target(r.branch, m, n);
    r.note = "weight assumed: cot(pi x), home branch of C";
    evaluate(r, {2 * m, ClausenFamily::C, 2 * n, ClausenVariant::standard}, WeightSpec::sym(), opts);
  } else {
    r.branch = Branch::cross_alt;
    r.a_variant = variant;
    r.paper_target = paper_target(r.branch, m, n);
    r.note = "weight assumed: csc(2 pi x), home branch of A";
    evaluate(r, {2 * m + 1, ClausenFamily::A, 2 * n + 1, variant}, WeightSpec::alt(), opts);
  }
  return r;
}

bool parity_forced_zero(const PairingReport& r) {
  const bool literal = r.a_variant == ClausenVariant::literal;
  switch (r.branch) {
    case Branch::alt: return literal;
    case Branch::cross_alt: return r.a_variant.has_value() && !literal;
    case Branch::cross_sym: return true;
    default: return false;
  }
}

namespace {

IntegrandSpec rotated_spec(RotatedFamily family, int m, int n, ClausenVariant variant) {
  return family == RotatedFamily::even_A ? IntegrandSpec{2 * m, ClausenFamily::A, 2 * n + 1, variant}
                                         : IntegrandSpec{2 * m + 1, ClausenFamily::C, 2 * n, variant};
}

}  // namespace

PairingReport pair_rotated(double phi, RotatedFamily family, int m, int n, ClausenVariant variant,
                           const PairingOptions& opts) {
  check_degrees(m, n);
  PairingReport r;
  r.branch = Branch::rotated;
  r.phi = phi;
  r.m = m;
  r.n = n;
  if (m != n) {
    set_exact(r, Rational(0));
  } else if (family == RotatedFamily::even_A) {
    r.closed_form = std::cos(phi) * closed_form_alt(m).to_double();
  } else {
    r.closed_form = std::sin(phi) * closed_form_sym(m).to_double();
  }
  if (family == RotatedFamily::even_A) {
    r.a_variant = variant;
    r.note = "family B(2m) x A(2n+1)";
  } else {
    r.note = "family B(2m+1) x C(2n)";
  }
  evaluate(r, rotated_spec(family, m, n, variant), WeightSpec::rotated(phi), opts);
  return r;
}

LinearityCheck rotated_linearity(double phi, RotatedFamily family, int m, int n, ClausenVariant variant,
                                 const PairingOptions& opts) {
  check_degrees(m, n);
  const auto f = make_integrand(rotated_spec(family, m, n, variant), opts.series_terms);
  const WeightSpec rot = WeightSpec::rotated(phi);
  LinearityCheck out;
  out.rotated = quadrature::pv_integrate(f, rot, opts.quadrature);
  out.alt_part = quadrature::pv_integrate(f, WeightSpec::alt().with_singular_points(rot.singular_points),
                                          opts.quadrature);
  out.sym_part = quadrature::pv_integrate(f, WeightSpec::sym().with_singular_points(rot.singular_points),
                                          opts.quadrature);
  out.combined = std::cos(phi) * out.alt_part + std::sin(phi) * out.sym_part;
  double f_max = 0.0;
  const int nodes = opts.quadrature.nodes_n;
  for (int i = 1; i < nodes; ++i) f_max = std::max(f_max, std::abs(f(static_cast<double>(i) / nodes)));
  out.scale = std::max({std::abs(out.rotated), std::abs(out.alt_part), std::abs(out.sym_part), f_max});
  out.relative_diff = out.scale > 0.0 ? std::abs(out.rotated - out.combined) / out.scale : 0.0;
  return out;
}

std::vector<PairingReport> full_report(const ReportOptions& opts) {
  std::vector<ClausenVariant> variants;
  if (opts.variants != VariantSelection::standard) variants.push_back(ClausenVariant::literal);
  if (opts.variants != VariantSelection::literal) variants.push_back(ClausenVariant::standard);

  // Cell descriptors first, in report order; each closure fills its own slot.
  struct Cell {
    PairingReport seed;
    std::function<PairingReport()> run;
  };
  std::vector<Cell> cells;
  const int d = opts.max_degree;
  const PairingOptions& po = opts.pairing;
  auto seed = [](Branch b, int m, int n, std::optional<ClausenVariant> v, double phi = 0.0) {
    PairingReport r;
    r.branch = b;
    r.m = m;
    r.n = n;
    r.a_variant = v;
    r.phi = phi;
    r.paper_target = paper_target(b, m, n);
    return r;
  };
  for (int m = 1; m <= d; ++m)
    for (int n = 1; n <= d; ++n)
      for (auto v : variants)
        cells.push_back({seed(Branch::alt, m, n, v), [=] { return pair_alt(m, n, v, po); }});
  for (int m = 1; m <= d; ++m)
    for (int n = 1; n <= d; ++n)
      cells.push_back({seed(Branch::sym, m, n, std::nullopt), [=] { return pair_sym(m, n, po); }});
  for (int m = 1; m <= d; ++m)
    for (int n = 1; n <= d; ++n)
      for (auto v : variants)
        cells.push_back({seed(Branch::cross_alt, m, n, v),
                         [=] { return pair_cross(CrossKind::odd_with_A, m, n, v, po); }});
  for (int m = 1; m <= d; ++m)
    for (int n = 1; n <= d; ++n)
      cells.push_back({seed(Branch::cross_sym, m, n, std::nullopt),
                       [=] { return pair_cross(CrossKind::even_with_C, m, n, ClausenVariant::standard, po); }});
  if (opts.phi) {
    const double phi = *opts.phi;
    for (auto family : {RotatedFamily::even_A, RotatedFamily::odd_C})
      for (int m = 1; m <= d; ++m)
        for (int n = 1; n <= d; ++n) {
          if (family == RotatedFamily::even_A) {
            for (auto v : variants)
              cells.push_back({seed(Branch::rotated, m, n, v, phi),
                               [=] { return pair_rotated(phi, family, m, n, v, po); }});
          } else {
            cells.push_back({seed(Branch::rotated, m, n, std::nullopt, phi),
                             [=] { return pair_rotated(phi, family, m, n, ClausenVariant::standard, po); }});
          }
        }
  }

  std::vector<PairingReport> out(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        out[i] = cells[i].run();
      } catch (const std::exception& e) {
        out[i] = cells[i].seed;
        out[i].error = e.what();
        out[i].verdict = Verdict::unconverged;
      }
    }
  };
  unsigned threads = opts.threads != 0 ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, cells.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace dualbasis::pairing
