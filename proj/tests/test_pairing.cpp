#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dualbasis/pairing.hpp"

namespace pr = dualbasis::pairing;
using dualbasis::Rational;
using dualbasis::specfun::ClausenVariant;
using std::numbers::pi;

TEST(ClosedForms, AltConstants) {
  EXPECT_EQ(pr::closed_form_alt(1), Rational(1, 16));
  EXPECT_EQ(pr::closed_form_alt(2), Rational(5, 64));
  EXPECT_EQ(pr::closed_form_alt(3), Rational(61, 256));
  // 720 beta(7) / pi^7, numerically
  EXPECT_NEAR(720.0 * dualbasis::specfun::dirichlet_beta(7).value / std::pow(pi, 7), 61.0 / 256.0, 1e-12);
}

TEST(ClosedForms, SymConstants) {
  EXPECT_EQ(pr::closed_form_sym(1), Rational(1, 15));
  EXPECT_EQ(pr::closed_form_sym(2), Rational(8, 63));
  EXPECT_EQ(pr::closed_form_sym(3), Rational(8, 15));
  EXPECT_NEAR(5040.0 * dualbasis::specfun::zeta(8).value / std::pow(pi, 8), 8.0 / 15.0, 1e-12);
}

TEST(ClosedForms, TwoRoutesAgree) {
  for (int m = 1; m <= 4; ++m) {
    EXPECT_NEAR(pr::closed_form_alt(m).to_double(), pr::closed_form_alt_numeric(m), 1e-11) << m;
    EXPECT_NEAR(pr::closed_form_sym(m).to_double(), pr::closed_form_sym_numeric(m), 1e-11) << m;
  }
}

TEST(PaperTargets, Tabulated) {
  EXPECT_EQ(pr::paper_target(pr::Branch::alt, 1, 1), 0.0625);
  EXPECT_EQ(pr::paper_target(pr::Branch::alt, 2, 2), 0.078125);
  EXPECT_EQ(pr::paper_target(pr::Branch::alt, 1, 2), 0.0);
  EXPECT_EQ(pr::paper_target(pr::Branch::sym, 1, 1), 0.0666666667);
  EXPECT_EQ(pr::paper_target(pr::Branch::sym, 2, 2), 0.1269841270);
  EXPECT_EQ(pr::paper_target(pr::Branch::sym, 2, 1), 0.0);
  EXPECT_EQ(pr::paper_target(pr::Branch::cross_sym, 1, 2), 0.0);
  EXPECT_FALSE(pr::paper_target(pr::Branch::alt, 3, 3).has_value());
}

namespace {

void expect_report_consistent(const pr::PairingReport& r) {
  EXPECT_FALSE(r.error.has_value());
  EXPECT_EQ(r.nodes_n, 200);
  EXPECT_EQ(r.nodes_n_hi, 2000);
  EXPECT_EQ(r.convergence_delta, std::abs(r.quadrature_value - r.quadrature_value_hi));
  const auto ref = r.paper_target ? r.paper_target : r.closed_form;
  ASSERT_TRUE(ref.has_value());
  const bool match = std::abs(r.quadrature_value_hi - *ref) <= 1e-6;
  if (match) EXPECT_EQ(r.verdict, pr::Verdict::match);
  else if (r.convergence_delta <= 1e-4) EXPECT_EQ(r.verdict, pr::Verdict::converged_mismatch);
  else EXPECT_EQ(r.verdict, pr::Verdict::unconverged);
}

}  // namespace

TEST(PairAlt, CarriesTargetsAndClosedForms) {
  const auto r11 = pr::pair_alt(1, 1, ClausenVariant::standard);
  EXPECT_EQ(r11.paper_target, 0.0625);
  EXPECT_EQ(r11.closed_form_exact, "1/16");
  expect_report_consistent(r11);
  const auto r22 = pr::pair_alt(2, 2, ClausenVariant::literal);
  EXPECT_EQ(r22.paper_target, 0.078125);
  EXPECT_EQ(r22.closed_form_exact, "5/64");
  expect_report_consistent(r22);
  const auto r12 = pr::pair_alt(1, 2, ClausenVariant::standard);
  EXPECT_EQ(r12.paper_target, 0.0);
  expect_report_consistent(r12);
}

TEST(PairAlt, LiteralVariantVanishesByParity) {
  // B_2m even about 1/2, literal A a cosine series (even), csc(2 pi x) odd.
  const auto r = pr::pair_alt(1, 1, ClausenVariant::literal);
  EXPECT_LE(std::abs(r.quadrature_value), 1e-12);
  EXPECT_LE(std::abs(r.quadrature_value_hi), 1e-12);
  EXPECT_TRUE(pr::parity_forced_zero(r));
}

TEST(PairSym, CarriesTargets) {
  const auto r11 = pr::pair_sym(1, 1);
  EXPECT_EQ(r11.paper_target, 0.0666666667);
  EXPECT_EQ(r11.closed_form_exact, "1/15");
  expect_report_consistent(r11);
  EXPECT_EQ(pr::pair_sym(2, 2).paper_target, 0.1269841270);
  const auto r21 = pr::pair_sym(2, 1);
  EXPECT_EQ(r21.paper_target, 0.0);
  expect_report_consistent(r21);
}

TEST(PairCross, EvenWithCIsParityForced) {
  const auto r = pr::pair_cross(pr::CrossKind::even_with_C, 1, 2, ClausenVariant::standard);
  EXPECT_EQ(r.branch, pr::Branch::cross_sym);
  EXPECT_LE(std::abs(r.quadrature_value), 1e-12);
  EXPECT_LE(std::abs(r.quadrature_value_hi), 1e-12);
  EXPECT_EQ(r.closed_form, 0.0);
  EXPECT_FALSE(r.note.empty());
  expect_report_consistent(r);
}

TEST(PairCross, OddWithAIsReportedWithVerdict) {
  const auto std11 = pr::pair_cross(pr::CrossKind::odd_with_A, 1, 1, ClausenVariant::standard);
  EXPECT_EQ(std11.branch, pr::Branch::cross_alt);
  expect_report_consistent(std11);
  // B_3, sine-Clausen and csc(2 pi x) are all odd about 1/2.
  EXPECT_LE(std::abs(std11.quadrature_value_hi), 1e-12);
  const auto lit11 = pr::pair_cross(pr::CrossKind::odd_with_A, 1, 1, ClausenVariant::literal);
  expect_report_consistent(lit11);
  EXPECT_FALSE(pr::parity_forced_zero(lit11));
}

TEST(PairRotated, EndpointsReduceToTheBranches) {
  const auto alt = pr::pair_alt(1, 1, ClausenVariant::standard);
  const auto rot0 = pr::pair_rotated(0.0, pr::RotatedFamily::even_A, 1, 1, ClausenVariant::standard);
  EXPECT_EQ(rot0.quadrature_value, alt.quadrature_value);
  EXPECT_EQ(rot0.quadrature_value_hi, alt.quadrature_value_hi);

  const auto sym = pr::pair_sym(1, 1);
  const auto rot90 = pr::pair_rotated(pi / 2, pr::RotatedFamily::odd_C, 1, 1, ClausenVariant::standard);
  EXPECT_NEAR(rot90.quadrature_value, sym.quadrature_value, 1e-13 * std::abs(sym.quadrature_value));
  ASSERT_TRUE(rot90.closed_form.has_value());
  EXPECT_NEAR(*rot90.closed_form, 1.0 / 15.0, 1e-15);
}

TEST(PairRotated, LiteralFamilyScalesByCosPhi) {
  // The sym part of B_2 * literal A_3 is odd about 1/2 and drops out.
  const auto rot = pr::pair_rotated(pi / 6, pr::RotatedFamily::even_A, 1, 1, ClausenVariant::literal);
  const auto lc = pr::rotated_linearity(pi / 6, pr::RotatedFamily::even_A, 1, 1, ClausenVariant::literal);
  EXPECT_NEAR(rot.quadrature_value, std::cos(pi / 6) * lc.alt_part, 1e-13);
}

TEST(PairRotated, LinearityInTheWeight) {
  for (double phi : {0.0, pi / 6, pi / 4, pi / 2})
    for (auto fam : {pr::RotatedFamily::even_A, pr::RotatedFamily::odd_C})
      for (auto v : {ClausenVariant::literal, ClausenVariant::standard}) {
        const auto lc = pr::rotated_linearity(phi, fam, 1, 1, v);
        EXPECT_LE(lc.relative_diff, 1e-13) << phi;
      }
}

TEST(FullReport, CoversTheTablesDeterministically) {
  pr::ReportOptions opts;
  opts.max_degree = 1;
  opts.threads = 1;
  const auto one = pr::full_report(opts);
  opts.threads = 3;
  const auto three = pr::full_report(opts);
  EXPECT_EQ(one, three);
  // alt x2 variants, sym, cross-alt x2, cross-sym
  ASSERT_EQ(one.size(), 6u);
  EXPECT_EQ(one[0].branch, pr::Branch::alt);
  EXPECT_EQ(one[0].a_variant, ClausenVariant::literal);
  EXPECT_EQ(one[1].a_variant, ClausenVariant::standard);
  EXPECT_EQ(one[2].branch, pr::Branch::sym);
  EXPECT_EQ(one[5].branch, pr::Branch::cross_sym);
  EXPECT_EQ(one[0].paper_target, 0.0625);
  for (const auto& r : one) expect_report_consistent(r);
}

TEST(FullReport, RotatedCellsWhenPhiGiven) {
  pr::ReportOptions opts;
  opts.max_degree = 1;
  opts.variants = pr::VariantSelection::standard;
  opts.phi = pi / 4;
  const auto cells = pr::full_report(opts);
  // alt, sym, cross-alt, cross-sym, rotated even-A, rotated odd-C
  ASSERT_EQ(cells.size(), 6u);
  EXPECT_EQ(cells[4].branch, pr::Branch::rotated);
  EXPECT_EQ(cells[4].phi, pi / 4);
  ASSERT_TRUE(cells[4].closed_form.has_value());
  EXPECT_NEAR(*cells[4].closed_form, std::cos(pi / 4) / 16.0, 1e-15);
}

TEST(FullReport, CellErrorsAreCaptured) {
  pr::ReportOptions opts;
  opts.max_degree = 1;
  opts.pairing.quadrature.nodes_n = 201;
  const auto cells = pr::full_report(opts);
  ASSERT_FALSE(cells.empty());
  for (const auto& r : cells) {
    ASSERT_TRUE(r.error.has_value());
    EXPECT_EQ(*r.error, "N must be even");
    EXPECT_EQ(r.verdict, pr::Verdict::unconverged);
  }
}

TEST(Enums, RoundTripThroughStrings) {
  for (auto b : {pr::Branch::alt, pr::Branch::sym, pr::Branch::cross_alt, pr::Branch::cross_sym, pr::Branch::rotated})
    EXPECT_EQ(pr::branch_from_string(pr::to_string(b)), b);
  for (auto v : {pr::Verdict::match, pr::Verdict::converged_mismatch, pr::Verdict::unconverged})
    EXPECT_EQ(pr::verdict_from_string(pr::to_string(v)), v);
  EXPECT_EQ(pr::to_string(pr::Verdict::converged_mismatch), "converged-mismatch");
  EXPECT_THROW((void)pr::branch_from_string("diagonal"), std::invalid_argument);
}
