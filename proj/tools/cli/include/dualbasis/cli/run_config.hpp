#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "dualbasis/pairing.hpp"
#include "dualbasis/selector.hpp"

namespace dualbasis::cli {

enum class Command { pairings, kernels, ladder, bridge, all };
enum class Format { markdown, csv, json };

/// Flags for one invocation. Defaults reproduce the tabulated setup
/// (trapezoidal rule, N = 200).
struct RunConfig {
  Command command = Command::all;
  int nodes_n = 200;
  /// Series truncation; unset means 10^5 for bridge checks and the pairing
  /// module's node truncation (10^4) inside quadrature integrands.
  std::optional<std::size_t> series_k;
  long bilateral_l = 10000;
  Format format = Format::markdown;
  std::optional<std::string> output_path;
  pairing::VariantSelection a_variant = pairing::VariantSelection::both;
  std::optional<double> phi;
  int j = 2;
  std::optional<selector::Parity> parity;  // unset: both kernels
  std::size_t dim = 10;
  std::size_t order = 8;
  int s = 2;
  unsigned threads = 0;

  std::size_t bridge_series_k() const { return series_k.value_or(specfun::kDefaultTerms); }
  std::size_t pairing_series_k() const { return series_k.value_or(pairing::kNodeSeriesTerms); }
};

}  // namespace dualbasis::cli
