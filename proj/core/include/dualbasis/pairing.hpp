#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dualbasis/quadrature.hpp"
#include "dualbasis/rational.hpp"
#include "dualbasis/specfun.hpp"

namespace dualbasis::pairing {

enum class Branch { alt, sym, cross_alt, cross_sym, rotated };
enum class Verdict { match, converged_mismatch, unconverged };
enum class CrossKind { even_with_C, odd_with_A };
enum class RotatedFamily { even_A, odd_C };

std::string_view to_string(Branch b);
std::string_view to_string(Verdict v);
std::string_view to_string(specfun::ClausenVariant v);
Branch branch_from_string(std::string_view s);
Verdict verdict_from_string(std::string_view s);
specfun::ClausenVariant variant_from_string(std::string_view s);

/// Series truncation used for the Clausen factor at quadrature nodes.
inline constexpr std::size_t kNodeSeriesTerms = 10000;

struct Tolerances {
  double target = 1e-6;       // |value at 10N - reference| for a match
  double convergence = 1e-4;  // |value at N - value at 10N| for convergence
};

struct PairingOptions {
  quadrature::QuadratureConfig quadrature{};
  int refine_factor = 10;
  std::size_t series_terms = kNodeSeriesTerms;
  Tolerances tolerances{};
};

/// One cell of the comparison against the tabulated pairings.
struct PairingReport {
  Branch branch = Branch::alt;
  double phi = 0.0;  // rotated only
  int m = 1;
  int n = 1;
  std::optional<specfun::ClausenVariant> a_variant;  // absent for C-family cells
  int nodes_n = 0;
  int nodes_n_hi = 0;
  double quadrature_value = 0.0;
  double quadrature_value_hi = 0.0;
  std::optional<double> closed_form;
  std::optional<std::string> closed_form_exact;  // rational literal when exact
  std::optional<double> paper_target;
  double convergence_delta = 0.0;
  double basis_tail_bound = 0.0;
  Verdict verdict = Verdict::unconverged;
  std::string note;
  std::optional<std::string> error;

  friend bool operator==(const PairingReport&, const PairingReport&) = default;
};

/// Gamma(2m+1) beta(2m+1) / pi^{2m+1} = (-1)^m E_{2m} / 4^{m+1}, exact.
Rational closed_form_alt(int m);
/// Gamma(2m+2) zeta(2m+2) / pi^{2m+2} = (-1)^m 2^{2m+1} B_{2m+2} / (2m+2), exact.
Rational closed_form_sym(int m);

/// The same constants by the floating route through specfun.
double closed_form_alt_numeric(int m);
double closed_form_sym_numeric(int m);

/// Tabulated values for (m,n) in {1,2}^2; cross-branch cells are 0.
std::optional<double> paper_target(Branch b, int m, int n);

PairingReport pair_alt(int m, int n, specfun::ClausenVariant variant, const PairingOptions& opts = {});
PairingReport pair_sym(int m, int n, const PairingOptions& opts = {});
PairingReport pair_cross(CrossKind kind, int m, int n, specfun::ClausenVariant variant,
                         const PairingOptions& opts = {});
PairingReport pair_rotated(double phi, RotatedFamily family, int m, int n,
                           specfun::ClausenVariant variant, const PairingOptions& opts = {});

/// True when reflection x -> 1-x makes the integrand odd, so the exact
/// value is 0: literal alt cells, standard cross-alt cells, cross-sym cells.
bool parity_forced_zero(const PairingReport& r);

/// Rotated pairing next to cos(phi) * alt + sin(phi) * sym of the same
/// integrand, all on the rotated (union) singular set at opts' N.
struct LinearityCheck {
  double rotated = 0.0;
  double alt_part = 0.0;
  double sym_part = 0.0;
  double combined = 0.0;
  /// Normaliser: the largest of the three values and max |f| over the nodes,
  /// so an integral that is zero by symmetry is judged against its integrand.
  double scale = 0.0;
  double relative_diff = 0.0;
};
LinearityCheck rotated_linearity(double phi, RotatedFamily family, int m, int n,
                                 specfun::ClausenVariant variant, const PairingOptions& opts = {});

enum class VariantSelection { literal, standard, both };

struct ReportOptions {
  PairingOptions pairing{};
  VariantSelection variants = VariantSelection::both;
  std::optional<double> phi;  // adds rotated cells when set
  int max_degree = 2;         // (m,n) in {1..max_degree}^2
  unsigned threads = 0;       // 0: hardware concurrency
};

/// Every cell, ordered by (branch, m, n, variant). Cells run concurrently; a
/// failing cell carries its error and never aborts the batch.
std::vector<PairingReport> full_report(const ReportOptions& opts = {});

}  // namespace dualbasis::pairing
