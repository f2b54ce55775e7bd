#pragma once

#include <string>
#include <vector>

#include "dualbasis/cli/run_config.hpp"
#include "dualbasis/cli/table.hpp"
#include "dualbasis/pairing.hpp"

namespace dualbasis::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// What a command produced; rendering is separate so `all` can merge results.
struct CommandResult {
  int exit_code = kExitOk;
  bool has_reports = false;
  std::vector<pairing::PairingReport> reports;
  std::vector<Table> tables;
  std::vector<std::string> diagnostics;  // one line each, for stderr
};

CommandResult cmd_pairings(const RunConfig& cfg);
CommandResult cmd_kernels(const RunConfig& cfg);
CommandResult cmd_ladder(const RunConfig& cfg);
CommandResult cmd_bridge(const RunConfig& cfg);
CommandResult cmd_all(const RunConfig& cfg);

/// Golden kernel rows, k = 0..7, for J in {2, 4}; empty otherwise.
std::vector<double> golden_kernel_row(int J, selector::Parity parity);

/// Points (J, k) of the kernel-weighted Lerch comparison.
struct SelectorCase {
  int J;
  long k;
};
const std::vector<SelectorCase>& bridge_selector_cases();

void render(std::ostream& os, Command command, const CommandResult& result, Format format);

}  // namespace dualbasis::cli
