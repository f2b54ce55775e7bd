#include "dualbasis/cli/app.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "dualbasis/cli/commands.hpp"

namespace dualbasis::cli {

namespace {

void add_common(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--nodes", cfg.nodes_n, "quadrature nodes N (even)");
  sub.add_option("--series-k", cfg.series_k, "series truncation K");
  sub.add_option("--bilateral-l", cfg.bilateral_l, "bilateral cutoff L");
  sub.add_option("--format", cfg.format, "markdown | csv | json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"markdown", Format::markdown}, {"csv", Format::csv}, {"json", Format::json}}));
  sub.add_option("--out", cfg.output_path, "write output to this file");
  sub.add_option("--threads", cfg.threads, "worker threads for the pairing batch (0: all cores)");
}

void add_pairing_opts(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--a-variant", cfg.a_variant, "literal | standard | both")
      ->transform(CLI::CheckedTransformer(std::map<std::string, pairing::VariantSelection>{
          {"literal", pairing::VariantSelection::literal},
          {"standard", pairing::VariantSelection::standard},
          {"both", pairing::VariantSelection::both}}));
  sub.add_option("--phi", cfg.phi, "rotation angle in radians; adds rotated-weight cells");
}

void add_kernel_opts(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--j", cfg.j, "selector order J");
  sub.add_option("--parity", cfg.parity, "sin | cos (default both)")
      ->transform(CLI::CheckedTransformer(std::map<std::string, selector::Parity>{
          {"sin", selector::Parity::sin}, {"cos", selector::Parity::cos}}));
}

void add_ladder_opts(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--dim", cfg.dim, "truncated block dimension D");
  sub.add_option("--order", cfg.order, "series order T");
}

void add_bridge_opts(CLI::App& sub, RunConfig& cfg) { sub.add_option("--s", cfg.s, "integer order s >= 2"); }

void validate(const RunConfig& cfg) {
  if (cfg.nodes_n <= 0 || cfg.nodes_n % 2 != 0) throw std::invalid_argument("N must be even");
  if (cfg.series_k && *cfg.series_k == 0) throw std::invalid_argument("series truncation must be positive");
  if (cfg.bilateral_l < 0) throw std::invalid_argument("bilateral cutoff must be nonnegative");
  if (cfg.dim < 1) throw std::invalid_argument("ladder dimension must be >= 1");
  if (cfg.j < 1) throw std::invalid_argument("selector order J must be >= 1");
  if ((cfg.command == Command::bridge || cfg.command == Command::all) && cfg.s < 2)
    throw std::invalid_argument("s must be ≥ 2");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Dual Bernoulli/Clausen basis verification suite", "dualbasis"};
  app.require_subcommand(1, 1);

  auto* pairings = app.add_subcommand("pairings", "weighted pairings against the tabulated values");
  auto* kernels = app.add_subcommand("kernels", "finite selector kernels");
  auto* ladder = app.add_subcommand("ladder", "exact ladder identities");
  auto* bridge = app.add_subcommand("bridge", "Poisson-Lerch bridge and selector identities");
  auto* all = app.add_subcommand("all", "every command");
  for (auto* sub : {pairings, kernels, ladder, bridge, all}) add_common(*sub, cfg);
  add_pairing_opts(*pairings, cfg);
  add_pairing_opts(*all, cfg);
  add_kernel_opts(*kernels, cfg);
  add_ladder_opts(*ladder, cfg);
  add_ladder_opts(*all, cfg);
  add_bridge_opts(*bridge, cfg);
  add_bridge_opts(*all, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  if (pairings->parsed()) cfg.command = Command::pairings;
  else if (kernels->parsed()) cfg.command = Command::kernels;
  else if (ladder->parsed()) cfg.command = Command::ladder;
  else if (bridge->parsed()) cfg.command = Command::bridge;
  else cfg.command = Command::all;

  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CommandResult result;
  try {
    switch (cfg.command) {
      case Command::pairings: result = cmd_pairings(cfg); break;
      case Command::kernels: result = cmd_kernels(cfg); break;
      case Command::ladder: result = cmd_ladder(cfg); break;
      case Command::bridge: result = cmd_bridge(cfg); break;
      case Command::all: result = cmd_all(cfg); break;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  std::ostringstream buf;
  render(buf, cfg.command, result, cfg.format);
  if (cfg.output_path) {
    std::ofstream f(*cfg.output_path, std::ios::binary);
    if (!f || !(f << buf.str())) {
      err << "error: cannot write " << *cfg.output_path << '\n';
      return kExitFailure;
    }
  } else {
    out << buf.str();
  }
  for (const auto& d : result.diagnostics) err << d << '\n';
  return result.exit_code;
}

}  // namespace dualbasis::cli
