// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "dualbasis/cli/report_io.hpp"
#include "dualbasis/exactcore.hpp"
#include "dualbasis/ladder.hpp"
#include "dualbasis/pairing.hpp"
#include "dualbasis/quadrature.hpp"
#include "dualbasis/selector.hpp"
#include "dualbasis/specfun.hpp"

namespace {

using namespace dualbasis;
using std::numbers::pi;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

Outcome closed_constants() {
  Outcome o;
  struct Case {
    const char* name;
    std::function<double()> eval;
    double exact;
  };
  const std::vector<Case> cases{
      {"beta(3)", [] { return specfun::dirichlet_beta(3).value; }, std::pow(pi, 3) / 32},
      {"beta(5)", [] { return specfun::dirichlet_beta(5).value; }, 5 * std::pow(pi, 5) / 1536},
      {"zeta(4)", [] { return specfun::zeta(4).value; }, std::pow(pi, 4) / 90},
      {"zeta(6)", [] { return specfun::zeta(6).value; }, std::pow(pi, 6) / 945},
  };
  double worst = 0.0, slowest = 0.0;
  for (const auto& c : cases) {
    const auto t0 = Clock::now();
    const double v = c.eval();
    const double dt = seconds_since(t0);
    const double err = std::abs(v - c.exact);
    worst = std::max(worst, err);
    slowest = std::max(slowest, dt);
    o.require(err <= 1e-12, std::string(c.name) + " off by " + sci(err));
    o.require(dt < 1.0, std::string(c.name) + " took " + std::to_string(dt) + " s");
  }
  if (o.pass) o.detail = "max |err| " + sci(worst) + ", slowest " + sci(slowest) + " s";
  return o;
}

Outcome exact_pairing_constants() {
  Outcome o;
  o.require(pairing::closed_form_alt(1) == Rational(1, 16), "alt(1) != 1/16");
  o.require(pairing::closed_form_alt(2) == Rational(5, 64), "alt(2) != 5/64");
  o.require(pairing::closed_form_sym(1) == Rational(1, 15), "sym(1) != 1/15");
  o.require(pairing::closed_form_sym(2) == Rational(8, 63), "sym(2) != 8/63");
  double worst = 0.0;
  for (int m : {1, 2}) {
    worst = std::max(worst, std::abs(pairing::closed_form_alt(m).to_double() - pairing::closed_form_alt_numeric(m)));
    worst = std::max(worst, std::abs(pairing::closed_form_sym(m).to_double() - pairing::closed_form_sym_numeric(m)));
  }
  o.require(worst <= 1e-11, "floating route off by " + sci(worst));
  if (o.pass) o.detail = "1/16 5/64 1/15 8/63 exact; floating route within " + sci(worst);
  return o;
}

Outcome selector_tables() {
  Outcome o;
  using selector::Parity;
  using V = std::vector<double>;
  auto first8 = [](int J, Parity p) {
    const auto t = selector::kernel_table(J, p).period_values;
    return V(t.begin(), t.begin() + 8);
  };
  o.require(first8(2, Parity::sin) == V{0, 1, 0, 1, 0, -1, 0, -1}, "J=2 sin row");
  o.require(first8(2, Parity::cos) == V{0, 1, 0, -1, 0, -1, 0, 1}, "J=2 cos row");
  o.require(first8(4, Parity::sin) == V{0, 1, 0, 1, 0, 1, 0, 1}, "J=4 sin row");
  o.require(first8(4, Parity::cos) == V{0, 1, 0, -1, 0, 1, 0, -1}, "J=4 cos row");
  double anti = 0.0, even = 0.0;
  int checked = 0;
  for (int J = 1; J <= 8; ++J)
    for (Parity p : {Parity::sin, Parity::cos}) {
      if (p == Parity::cos && J % 2 == 1) continue;  // a node sits at pi/2
      ++checked;
      for (long k = 0; k <= 8L * J; ++k) {
        const double v = selector::kernel_value(J, p, k);
        anti = std::max(anti, std::abs(selector::kernel_value(J, p, k + 2L * J) + v));
        if (k % 2 == 0) even = std::max(even, std::abs(v));
      }
    }
  o.require(anti <= 1e-10, "anti-periodicity dev " + sci(anti));
  o.require(even <= 1e-10, "even-k dev " + sci(even));
  if (o.pass)
    o.detail = "golden rows exact; " + std::to_string(checked) + " kernels (cos only at even J), anti " + sci(anti) +
               ", even " + sci(even);
  return o;
}

Outcome closed_form_j2() {
  Outcome o;
  double worst = 0.0;
  for (auto p : {selector::Parity::sin, selector::Parity::cos})
    for (long k = 0; k <= 16; ++k)
      worst = std::max(worst, std::abs(selector::kernel_closed_form_J2(k, p) - selector::kernel_value(2, p, k)));
  o.require(worst <= 1e-12, "max dev " + sci(worst));
  if (o.pass) o.detail = "max dev " + sci(worst);
  return o;
}

Outcome poisson_lerch() {
  Outcome o;
  const auto t0 = Clock::now();
  int ok = 0, total = 0;
  std::ostringstream fails;
  for (int J : {2, 4})
    for (long k : {1L, 3L})
      for (int s : {2, 3})
        for (auto p : {selector::Parity::sin, selector::Parity::cos}) {
          ++total;
          const std::string tag = "J" + std::to_string(J) + "k" + std::to_string(k) + "s" + std::to_string(s) +
                                  std::string(selector::to_string(p));
          try {
            const auto r = selector::lerch_selector_identity(J, k, s, 1.0, p, 10000, 100000);
            bool monotone = true;
            double prev = 1e300;
            for (long L : {100L, 1000L, 10000L}) {
              const double d = selector::lerch_selector_identity(J, k, s, 1.0, p, L, 100000).diff;
              monotone = monotone && d < prev;
              prev = d;
            }
            if (r.diff <= 1e-6 && monotone) ++ok;
            else fails << ' ' << tag << " diff=" << sci(r.diff) << (monotone ? "" : " non-monotone");
          } catch (const std::exception& e) {
            fails << ' ' << tag << " (" << e.what() << ")";
          }
        }
  const double dt = seconds_since(t0);
  o.require(ok == total, std::to_string(ok) + "/" + std::to_string(total) + " identities hold;" + fails.str());
  o.require(dt < 30.0, "took " + std::to_string(dt) + " s");
  if (o.pass) o.detail = std::to_string(total) + " identities within 1e-6, monotone in L";
  return o;
}

Outcome ladder_exact() {
  Outcome o;
  for (unsigned n = 1; n <= 20; ++n) {
    o.require(bernoulli_poly(n).derivative() == bernoulli_poly(n - 1) * Rational(n), "B' at n=" + std::to_string(n));
    o.require(hermite_poly(n).derivative() == hermite_poly(n - 1) * Rational(2 * n), "H' at n=" + std::to_string(n));
  }
  for (std::size_t D = 1; D <= 18; ++D) {
    const auto L = ladder::op_L(D), R = ladder::op_R(D), N = ladder::op_N(D);
    const auto I = ladder::ExactMatrix::identity(ladder::BasisTag::bernoulli, D + 1);
    const std::string d = " at D=" + std::to_string(D);
    o.require(ladder::commutator(L, R).block(D - 1) == I.block(D - 1), "[L,R]" + d);
    o.require(ladder::commutator(N, L).block(D - 1) == (L * Rational(-1)).block(D - 1), "[N,L]" + d);
    o.require(ladder::commutator(N, R).block(D - 1) == R.block(D - 1), "[N,R]" + d);
  }
  for (std::size_t T = 0; T <= 12; ++T) o.require(ladder::generating_function_check(T), "egf T=" + std::to_string(T));
  for (const Rational& y : {Rational(0), Rational(1, 2), Rational(-3, 7), Rational(5)}) {
    const auto c = ladder::coherent_state_check(12, y);
    o.require(c.max_defect.is_zero(), "coherent defect at y=" + y.to_string());
  }
  if (o.pass) o.detail = "exact: derivatives n<=20, commutators D<=18, egf T<=12, coherent defect 0";
  return o;
}

Outcome ladder_normalized() {
  Outcome o;
  double worst_A = 0.0, worst_a = 0.0;
  for (std::size_t D = 1; D <= 18; ++D) {
    worst_A = std::max(worst_A, ladder::max_block_deviation(
                                    ladder::commutator(ladder::op_A(D), ladder::op_Adag(D)),
                                    ladder::RealMatrix::identity(ladder::BasisTag::bernoulli, D + 1), D - 1));
    const auto h = ladder::hermite_ladder(D);
    worst_a = std::max(worst_a, ladder::max_block_deviation(
                                    ladder::commutator(h.a, h.adag),
                                    ladder::RealMatrix::identity(ladder::BasisTag::hermite_fn, D + 1), D - 1));
  }
  o.require(worst_A <= 1e-12, "[A,A+] dev " + sci(worst_A));
  o.require(worst_a <= 1e-12, "[a,a+] dev " + sci(worst_a));
  if (o.pass) o.detail = "[A,A+] dev " + sci(worst_A) + ", [a,a+] dev " + sci(worst_a) + " for D<=18";
  return o;
}

Outcome hurwitz_fourier() {
  Outcome o;
  double worst_ratio = 0.0;
  for (int n : {2, 4, 6})
    for (double x : {0.1, 0.25, 0.37, 0.5, 0.8}) {
      const auto f = specfun::bernoulli_fourier(n, x);
      const double err = std::abs(f.value - poly_eval_real(bernoulli_poly(static_cast<unsigned>(n)), x));
      o.require(err <= f.series.tail_bound, "n=" + std::to_string(n) + " x=" + std::to_string(x) + " err " + sci(err) +
                                                " > bound " + sci(f.series.tail_bound));
      worst_ratio = std::max(worst_ratio, err / f.series.tail_bound);
    }
  if (o.pass) o.detail = "max err/bound " + sci(worst_ratio);
  return o;
}

Outcome quadrature_sanity() {
  Outcome o;
  const quadrature::QuadratureConfig cfg{quadrature::Rule::trapezoid, 200};
  const double one = quadrature::pv_integrate([](double x) { return std::sin(2 * pi * x); },
                                              quadrature::WeightSpec::alt(), cfg);
  const double zero = quadrature::pv_integrate([](double) { return 1.0; }, quadrature::WeightSpec::sym(), cfg);
  o.require(std::abs(one - 1.0) <= 1e-12, "csc case off by " + sci(one - 1.0));
  o.require(std::abs(zero) <= 1e-12, "cot case " + sci(zero));
  double worst = 0.0;
  for (double phi : {0.0, pi / 6, pi / 4, pi / 2})
    for (auto fam : {pairing::RotatedFamily::even_A, pairing::RotatedFamily::odd_C})
      for (auto v : {specfun::ClausenVariant::literal, specfun::ClausenVariant::standard})
        worst = std::max(worst, pairing::rotated_linearity(phi, fam, 1, 1, v).relative_diff);
  o.require(worst <= 1e-13, "rotated linearity rel " + sci(worst));
  if (o.pass)
    o.detail = "csc " + sci(std::abs(one - 1.0)) + ", cot " + sci(std::abs(zero)) + ", linearity rel " + sci(worst);
  return o;
}

Outcome tabulated_pairings() {
  Outcome o;
  const auto t0 = Clock::now();
  pairing::ReportOptions opts;  // N = 200 and 2000, both variants, (m,n) in {1,2}^2
  const auto reports = pairing::full_report(opts);
  const double dt = seconds_since(t0);

  std::ostringstream md;
  cli::write_reports_markdown(md, reports);
  const std::string rendered = md.str();

  int mismatches = 0, matches = 0;
  bool alt_lit = false, alt_std = false, sym_seen = false;
  for (const auto& r : reports) {
    const std::string tag = std::string(pairing::to_string(r.branch)) + "(" + std::to_string(r.m) + "," +
                            std::to_string(r.n) + ")";
    o.require(!r.error.has_value(), tag + " error");
    o.require(r.convergence_delta <= 1e-4, tag + " unconverged " + sci(r.convergence_delta));
    o.require(r.verdict != pairing::Verdict::unconverged, tag + " verdict unconverged");
    if (pairing::parity_forced_zero(r) && r.branch != pairing::Branch::alt)
      o.require(std::max(std::abs(r.quadrature_value), std::abs(r.quadrature_value_hi)) <= 1e-10,
                tag + " parity-forced cell nonzero");
    double expected = 0.0;
    if (r.m == r.n && r.branch == pairing::Branch::alt) expected = r.m == 1 ? 0.0625 : 0.078125;
    if (r.m == r.n && r.branch == pairing::Branch::sym) expected = r.m == 1 ? 0.0666666667 : 0.1269841270;
    o.require(r.paper_target.has_value() && *r.paper_target == expected, tag + " paper target");
    if (r.branch == pairing::Branch::alt) (r.a_variant == specfun::ClausenVariant::literal ? alt_lit : alt_std) = true;
    if (r.branch == pairing::Branch::sym) sym_seen = true;
    if (r.verdict == pairing::Verdict::converged_mismatch) ++mismatches;
    if (r.verdict == pairing::Verdict::match) ++matches;
  }
  o.require(alt_lit && alt_std && sym_seen, "missing branch/variant coverage");
  o.require(reports.size() >= 16, "only " + std::to_string(reports.size()) + " cells");
  if (mismatches > 0)
    o.require(rendered.find("**CONVERGED-MISMATCH**") != std::string::npos, "mismatch not rendered distinctly");
  o.require(dt < 120.0, "took " + std::to_string(dt) + " s");
  if (o.pass) {
    std::ostringstream d;
    d << reports.size() << " cells converged in " << static_cast<int>(dt + 0.5) << " s: " << matches << " match, "
      << mismatches << " converged-mismatch";
    o.detail = d.str();
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"closed constants beta(3), beta(5), zeta(4), zeta(6)", closed_constants},
      {"exact pairing constants and floating cross-route", exact_pairing_constants},
      {"selector tables and kernel properties", selector_tables},
      {"J=2 closed-form kernels", closed_form_j2},
      {"kernel-weighted Poisson-Lerch identities", poisson_lerch},
      {"exact ladder algebra", ladder_exact},
      {"normalized ladders", ladder_normalized},
      {"Hurwitz-Fourier bridge within tail bounds", hurwitz_fourier},
      {"quadrature sanity and rotated linearity", quadrature_sanity},
      {"tabulated pairings: converged, targets attached, verdicts", tabulated_pairings},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s criterion %zu: %s -- %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
