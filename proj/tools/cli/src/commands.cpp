#include "dualbasis/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "dualbasis/cli/report_io.hpp"
#include "dualbasis/exactcore.hpp"
#include "dualbasis/ladder.hpp"
#include "dualbasis/quadrature.hpp"
#include "dualbasis/selector.hpp"
#include "dualbasis/specfun.hpp"

namespace dualbasis::cli {

using pairing::PairingReport;
using selector::Parity;
using pairing::to_string;
using selector::to_string;
using ladder::to_string;

namespace {

constexpr double kDualRouteTol = 1e-11;
constexpr double kParityZeroTol = 1e-10;
constexpr double kLinearityTol = 1e-13;
constexpr double kKernelTol = 1e-10;
constexpr double kClosedFormTol = 1e-12;
constexpr double kSelectorTol = 1e-6;
constexpr double kBridgeA = 1.0;

Cell status_cell(bool ok) { return text_cell(ok ? "PASS" : "FAIL"); }

void merge(CommandResult& into, CommandResult&& part) {
  into.exit_code = std::max(into.exit_code, part.exit_code);
  if (part.has_reports) {
    into.has_reports = true;
    into.reports = std::move(part.reports);
  }
  for (auto& t : part.tables) into.tables.push_back(std::move(t));
  for (auto& d : part.diagnostics) into.diagnostics.push_back(std::move(d));
}

std::vector<Parity> parities(const RunConfig& cfg) {
  if (cfg.parity) return {*cfg.parity};
  return {Parity::sin, Parity::cos};
}

}  // namespace

// ---------------------------------------------------------------- pairings

CommandResult cmd_pairings(const RunConfig& cfg) {
  pairing::ReportOptions ro;
  ro.pairing.quadrature.nodes_n = cfg.nodes_n;
  ro.pairing.series_terms = cfg.pairing_series_k();
  ro.variants = cfg.a_variant;
  ro.phi = cfg.phi;
  ro.threads = cfg.threads;
  ro.pairing.quadrature.validate();

  CommandResult res;
  res.has_reports = true;
  res.reports = pairing::full_report(ro);

  Table inv;
  inv.title = "Invariant checks";
  inv.headers = {"check", "status", "detail"};
  bool all_ok = true;
  auto record = [&](std::string name, bool ok, std::string detail) {
    all_ok = all_ok && ok;
    if (!ok) res.diagnostics.push_back("invariant failed: " + name + " (" + detail + ")");
    inv.add_row({text_cell(std::move(name)), status_cell(ok), text_cell(std::move(detail))});
  };

  for (int m = 1; m <= ro.max_degree; ++m) {
    const double alt_diff =
        std::abs(pairing::closed_form_alt(m).to_double() - pairing::closed_form_alt_numeric(m));
    record("alt closed form m=" + std::to_string(m) + ": exact vs Gamma*beta/pi^s", alt_diff <= kDualRouteTol,
           pairing::closed_form_alt(m).to_string() + ", |diff| = " + format_double(alt_diff, 'e', 2));
    const double sym_diff =
        std::abs(pairing::closed_form_sym(m).to_double() - pairing::closed_form_sym_numeric(m));
    record("sym closed form m=" + std::to_string(m) + ": exact vs Gamma*zeta/pi^s", sym_diff <= kDualRouteTol,
           pairing::closed_form_sym(m).to_string() + ", |diff| = " + format_double(sym_diff, 'e', 2));
  }

  for (const auto& r : res.reports) {
    const std::string cell = std::string(to_string(r.branch)) + " (" + std::to_string(r.m) + "," +
                             std::to_string(r.n) + ")" +
                             (r.a_variant ? " " + std::string(to_string(*r.a_variant)) : "");
    if (r.error) {
      record(cell + " evaluates", false, *r.error);
      continue;
    }
    if (pairing::parity_forced_zero(r)) {
      const double worst = std::max(std::abs(r.quadrature_value), std::abs(r.quadrature_value_hi));
      record(cell + " parity-forced zero", worst <= kParityZeroTol, "max |value| = " + format_double(worst, 'e', 2));
    }
  }

  if (cfg.phi) {
    std::vector<specfun::ClausenVariant> variants;
    if (cfg.a_variant != pairing::VariantSelection::standard) variants.push_back(specfun::ClausenVariant::literal);
    if (cfg.a_variant != pairing::VariantSelection::literal) variants.push_back(specfun::ClausenVariant::standard);
    for (int m = 1; m <= ro.max_degree; ++m)
      for (int n = 1; n <= ro.max_degree; ++n) {
        for (auto v : variants) {
          const auto lc = pairing::rotated_linearity(*cfg.phi, pairing::RotatedFamily::even_A, m, n, v, ro.pairing);
          record("rotated linearity B(2m)A(2n+1) (" + std::to_string(m) + "," + std::to_string(n) + ") " +
                     std::string(to_string(v)),
                 lc.relative_diff <= kLinearityTol, "relative diff " + format_double(lc.relative_diff, 'e', 2));
        }
        const auto lc = pairing::rotated_linearity(*cfg.phi, pairing::RotatedFamily::odd_C, m, n,
                                                   specfun::ClausenVariant::standard, ro.pairing);
        record("rotated linearity B(2m+1)C(2n) (" + std::to_string(m) + "," + std::to_string(n) + ")",
               lc.relative_diff <= kLinearityTol, "relative diff " + format_double(lc.relative_diff, 'e', 2));
      }
  }

  Table summary;
  summary.title = "Verdict summary";
  summary.headers = {"verdict", "cells"};
  for (auto v : {pairing::Verdict::match, pairing::Verdict::converged_mismatch, pairing::Verdict::unconverged}) {
    const auto count = std::count_if(res.reports.begin(), res.reports.end(),
                                     [v](const PairingReport& r) { return r.verdict == v; });
    summary.add_row({text_cell(std::string(to_string(v))), int_cell(count)});
  }

  const bool any_unconverged = std::any_of(res.reports.begin(), res.reports.end(), [](const PairingReport& r) {
    return r.verdict == pairing::Verdict::unconverged || r.error.has_value();
  });
  if (any_unconverged) res.diagnostics.push_back("at least one pairing cell is unconverged");
  res.exit_code = (any_unconverged || !all_ok) ? kExitFailure : kExitOk;
  res.tables.push_back(std::move(summary));
  res.tables.push_back(std::move(inv));
  return res;
}

// ---------------------------------------------------------------- kernels

std::vector<double> golden_kernel_row(int J, Parity parity) {
  const bool s = parity == Parity::sin;
  if (J == 2) return s ? std::vector<double>{0, 1, 0, 1, 0, -1, 0, -1} : std::vector<double>{0, 1, 0, -1, 0, -1, 0, 1};
  if (J == 4) return s ? std::vector<double>{0, 1, 0, 1, 0, 1, 0, 1} : std::vector<double>{0, 1, 0, -1, 0, 1, 0, -1};
  return {};
}

namespace {

std::string kernel_text(double v) {
  if (v == std::round(v)) return format_double(v, 'f', 0);
  return format_double(v, 'f', 6);
}

void kernel_one(int J, Parity parity, CommandResult& res, Table& checks) {
  const std::string label = "J=" + std::to_string(J) + " " + std::string(to_string(parity));
  selector::SelectorKernel table;
  try {
    table = selector::kernel_table(J, parity);
  } catch (const std::exception& e) {
    res.exit_code = kExitFailure;
    res.diagnostics.push_back(label + ": " + e.what());
    checks.add_row({text_cell(label + " kernel"), text_cell("FAIL"), text_cell(e.what())});
    return;
  }

  Table t;
  t.title = "Selector kernel, J = " + std::to_string(J) + ", " + std::string(to_string(parity));
  t.headers = {"k"};
  for (long k = 0; k < 4L * J; ++k) t.headers.push_back(std::to_string(k));
  std::vector<Cell> row{text_cell("K(k)")};
  for (double v : table.period_values) row.push_back({kernel_text(v), v});
  t.add_row(std::move(row));
  if (J == 2) {
    std::vector<Cell> cf{text_cell("closed form")};
    for (long k = 0; k < 4L * J; ++k) {
      double v = selector::kernel_closed_form_J2(k, parity);
      if (std::abs(v - std::round(v)) <= 1e-9) v = std::round(v) + 0.0;
      cf.push_back({kernel_text(v), v});
    }
    t.add_row(std::move(cf));
  }
  res.tables.push_back(std::move(t));

  auto record = [&](const std::string& name, bool ok, std::string detail) {
    if (!ok) {
      res.exit_code = std::max(res.exit_code, kExitFailure);
      res.diagnostics.push_back(label + ": " + name + " failed");
    }
    checks.add_row({text_cell(label + " " + name), status_cell(ok), text_cell(std::move(detail))});
  };

  const auto golden = golden_kernel_row(J, parity);
  if (!golden.empty()) {
    bool ok = true;
    for (std::size_t k = 0; k < golden.size(); ++k) ok = ok && table.period_values[k] == golden[k];
    record("golden row k=0..7", ok, "tabulated values");
  }

  double anti = 0.0, even = 0.0, odd = 0.0;
  for (long k = 0; k <= 8L * J; ++k) {
    const double v = selector::kernel_value(J, parity, k);
    anti = std::max(anti, std::abs(selector::kernel_value(J, parity, k + 2L * J) + v));
    if (k % 2 == 0) even = std::max(even, std::abs(v));
    else odd = std::max(odd, std::abs(std::abs(v) - 1.0));
  }
  record("anti-periodicity K(k+2J) = -K(k), k <= 8J", anti <= kKernelTol, "max dev " + format_double(anti, 'e', 2));
  record("even k vanish", even <= kKernelTol, "max |K| " + format_double(even, 'e', 2));
  record("odd k in {-1, 1}", odd <= kKernelTol, "max dev " + format_double(odd, 'e', 2));

  if (J == 2) {
    double dev = 0.0;
    for (long k = 0; k <= 16; ++k)
      dev = std::max(dev, std::abs(selector::kernel_closed_form_J2(k, parity) - selector::kernel_value(J, parity, k)));
    record("closed form vs direct, k = 0..16", dev <= kClosedFormTol, "max dev " + format_double(dev, 'e', 2));
  }
}

}  // namespace

CommandResult cmd_kernels(const RunConfig& cfg) {
  CommandResult res;
  Table checks;
  checks.title = "Kernel checks";
  checks.headers = {"check", "status", "detail"};
  auto which = parities(cfg);
  if (!cfg.parity && cfg.j % 2 == 1) {
    which = {Parity::sin};
    res.diagnostics.push_back("cos kernel skipped: undefined for odd J");
  }
  for (Parity p : which) kernel_one(cfg.j, p, res, checks);
  res.tables.push_back(std::move(checks));
  return res;
}

// ---------------------------------------------------------------- ladder

CommandResult cmd_ladder(const RunConfig& cfg) {
  CommandResult res;
  Table t;
  t.title = "Ladder identities, D = " + std::to_string(cfg.dim) + ", T = " + std::to_string(cfg.order);
  t.headers = {"identity", "status", "detail"};
  for (const auto& c : ladder::verify_ladder(cfg.dim, cfg.order)) {
    if (c.status == ladder::CheckStatus::fail) {
      res.exit_code = kExitFailure;
      res.diagnostics.push_back("ladder identity failed: " + c.name);
    }
    t.add_row({text_cell(c.name), text_cell(std::string(to_string(c.status))), text_cell(c.detail)});
  }
  res.tables.push_back(std::move(t));
  return res;
}

// ---------------------------------------------------------------- bridge

const std::vector<SelectorCase>& bridge_selector_cases() {
  static const std::vector<SelectorCase> cases{{2, 1}, {2, 3}, {4, 1}, {4, 3}};
  return cases;
}

CommandResult cmd_bridge(const RunConfig& cfg) {
  if (cfg.s < 2) throw std::invalid_argument("s must be ≥ 2");
  const int s = cfg.s;
  const std::size_t K = cfg.bridge_series_k();
  const double sd = s;
  CommandResult res;

  Table spec;
  spec.title = "Lerch specialisations, s = " + std::to_string(s);
  spec.headers = {"quantity", "series value", "reference", "|diff|", "tail bound"};
  {
    const auto phi1 = specfun::lerch_phi(std::complex<double>(1.0, 0.0), sd, 1.0, K);
    const auto z = specfun::zeta(sd, K);
    spec.add_row({text_cell("Phi(1,s,1) vs zeta(s)"), fixed_cell(phi1.value.real(), 15), fixed_cell(z.value, 15),
                  sci_cell(std::abs(phi1.value.real() - z.value)),
                  sci_cell(phi1.series.tail_bound + z.series.tail_bound)});
    const auto phim = specfun::lerch_phi(std::complex<double>(-1.0, 0.0), sd, 1.0, K);
    const double eta = (1.0 - std::pow(2.0, 1.0 - sd)) * z.value;
    spec.add_row({text_cell("Phi(-1,s,1) vs (1-2^(1-s)) zeta(s)"), fixed_cell(phim.value.real(), 15),
                  fixed_cell(eta, 15), sci_cell(std::abs(phim.value.real() - eta)),
                  sci_cell(phim.series.tail_bound + z.series.tail_bound)});
    const auto phih = specfun::lerch_phi(std::complex<double>(-1.0, 0.0), sd, 0.5, K);
    const auto beta = specfun::dirichlet_beta(sd, K);
    const double lhs = std::pow(2.0, -sd) * phih.value.real();
    spec.add_row({text_cell("2^-s Phi(-1,s,1/2) vs beta(s)"), fixed_cell(lhs, 15), fixed_cell(beta.value, 15),
                  sci_cell(std::abs(lhs - beta.value)), sci_cell(phih.series.tail_bound + beta.series.tail_bound)});
  }
  res.tables.push_back(std::move(spec));

  const std::vector<double> xs{0.1, 0.25, 0.37, 0.5, 0.8};
  Table spot;
  spot.title = "Bridge pi^-s Gamma(s) Phi(e^(2 pi i x), s, 1), s = " + std::to_string(s);
  spot.headers = {"x", "Re", "Im", "tail bound"};
  for (double x : xs) {
    const auto b = specfun::poisson_lerch_bridge(s, x, K);
    spot.add_row({general_cell(x, 6), fixed_cell(b.value.real(), 12), fixed_cell(b.value.imag(), 12),
                  sci_cell(b.series.tail_bound)});
  }
  res.tables.push_back(std::move(spot));

  Table bern;
  bern.title = "Bernoulli polynomials from Fourier series and from the bridge";
  bern.headers = {"n", "x", "B_n(x) exact", "Fourier", "|diff|", "bound", "bridge", "|diff| bridge", "status"};
  std::set<int> orders{2, 4, 6, s};
  for (int n : orders)
    for (double x : xs) {
      const double exact = specfun::hurwitz_basis(n, x);
      const auto f = specfun::bernoulli_fourier(n, x, K);
      const auto b = specfun::bernoulli_from_bridge(n, x, K);
      const double df = std::abs(f.value - exact);
      const double db = std::abs(b.value - exact);
      bern.add_row({int_cell(n), general_cell(x, 6), fixed_cell(exact, 12), fixed_cell(f.value, 12), sci_cell(df),
                    sci_cell(f.series.tail_bound), fixed_cell(b.value, 12), sci_cell(db),
                    status_cell(df <= f.series.tail_bound && db <= b.series.tail_bound)});
    }
  res.tables.push_back(std::move(bern));

  Table sel;
  sel.title = "Kernel-weighted Lerch sums vs bilateral sums, s = " + std::to_string(s) + ", a = 1, L = " +
              std::to_string(cfg.bilateral_l);
  sel.headers = {"J", "k", "branch", "lhs", "Im lhs", "rhs", "|diff|", "status"};
  bool all_ok = true;
  for (const auto& c : bridge_selector_cases())
    for (Parity p : {Parity::sin, Parity::cos}) {
      try {
        const auto r = selector::lerch_selector_identity(c.J, c.k, sd, kBridgeA, p, cfg.bilateral_l, K);
        const bool ok = r.diff <= kSelectorTol;
        all_ok = all_ok && ok;
        sel.add_row({int_cell(c.J), int_cell(c.k), text_cell(std::string(to_string(p))), fixed_cell(r.lhs, 12),
                     fixed_cell(r.lhs_imag, 12), fixed_cell(r.rhs, 12), sci_cell(r.diff), status_cell(ok)});
      } catch (const std::domain_error& e) {
        all_ok = false;
        sel.add_row({int_cell(c.J), int_cell(c.k), text_cell(std::string(to_string(p))), text_cell("-"),
                     text_cell("-"), text_cell("-"), text_cell("-"), text_cell(std::string("FAIL: ") + e.what())});
      }
    }
  if (!all_ok) {
    res.exit_code = kExitFailure;
    res.diagnostics.push_back("kernel-weighted Lerch identity: at least one diff exceeds 1e-6 or hits a pole");
  }
  res.tables.push_back(std::move(sel));
  return res;
}

// ---------------------------------------------------------------- all

CommandResult cmd_all(const RunConfig& cfg) {
  CommandResult res;
  merge(res, cmd_pairings(cfg));
  for (int J : {2, 4}) {
    RunConfig k = cfg;
    k.j = J;
    k.parity.reset();
    merge(res, cmd_kernels(k));
  }
  merge(res, cmd_ladder(cfg));
  merge(res, cmd_bridge(cfg));
  return res;
}

// ---------------------------------------------------------------- output

void render(std::ostream& os, Command command, const CommandResult& result, Format format) {
  switch (format) {
    case Format::markdown:
      if (result.has_reports) write_reports_markdown(os, result.reports);
      render_tables(os, result.tables, format);
      break;
    case Format::csv:
      if (result.has_reports) {
        write_reports_csv(os, result.reports);
        if (command == Command::pairings) break;
        os << '\n';
      }
      render_tables(os, result.tables, format);
      break;
    case Format::json:
      if (command == Command::pairings) {
        os << reports_to_json(result.reports);
      } else {
        nlohmann::json tables = nlohmann::json::array();
        for (const auto& t : result.tables) tables.push_back(to_json(t));
        nlohmann::json doc{{"tables", std::move(tables)}};
        if (result.has_reports) doc["pairings"] = result.reports;
        os << doc.dump(2) << '\n';
      }
      break;
  }
}

}  // namespace dualbasis::cli
