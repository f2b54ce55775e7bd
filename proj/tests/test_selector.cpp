#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dualbasis/selector.hpp"

using dualbasis::selector::Parity;
namespace sel = dualbasis::selector;
using std::numbers::pi;

namespace {

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "<no exception>";
}

bool cos_defined(int J) { return J % 2 == 0; }

}  // namespace

TEST(KernelValue, TabulatedEntries) {
  EXPECT_NEAR(sel::kernel_value(2, Parity::sin, 1), 1.0, 1e-12);
  EXPECT_NEAR(sel::kernel_value(2, Parity::cos, 3), -1.0, 1e-12);
  EXPECT_NEAR(sel::kernel_value(4, Parity::sin, 5), 1.0, 1e-12);
}

TEST(KernelValue, CosRejectedWhereANodeIsHalfPi) {
  EXPECT_EQ(message_of([] { (void)sel::kernel_value(1, Parity::cos, 1); }), "cos node vanishes at theta_0 = pi/2");
  EXPECT_THROW((void)sel::kernel_table(1, Parity::cos), std::domain_error);
  // theta_1 = pi/2 for J = 3, theta_2 for J = 5
  EXPECT_THROW((void)sel::kernel_value(3, Parity::cos, 1), std::domain_error);
  EXPECT_THROW((void)sel::kernel_value(5, Parity::cos, 1), std::domain_error);
  EXPECT_THROW((void)sel::kernel_value(0, Parity::sin, 1), std::domain_error);
}

TEST(KernelTable, GoldenRows) {
  using V = std::vector<double>;
  EXPECT_EQ(sel::kernel_table(2, Parity::sin).period_values, (V{0, 1, 0, 1, 0, -1, 0, -1}));
  EXPECT_EQ(sel::kernel_table(2, Parity::cos).period_values, (V{0, 1, 0, -1, 0, -1, 0, 1}));
  const auto s4 = sel::kernel_table(4, Parity::sin).period_values;
  EXPECT_EQ(V(s4.begin(), s4.begin() + 8), (V{0, 1, 0, 1, 0, 1, 0, 1}));
  const auto c4 = sel::kernel_table(4, Parity::cos).period_values;
  EXPECT_EQ(V(c4.begin(), c4.begin() + 8), (V{0, 1, 0, -1, 0, 1, 0, -1}));
}

TEST(KernelTable, ThreeHasTwelveAntiperiodicEntries) {
  const auto t = sel::kernel_table(3, Parity::sin);
  ASSERT_EQ(t.period_values.size(), 12u);
  for (long k = 0; k < 6; ++k) {
    // oracle: direct trigonometric average
    double direct = 0.0;
    for (int j = 0; j < 3; ++j) {
      const double th = (2.0 * j + 1.0) * pi / 6.0;
      direct += std::sin(k * th) / std::sin(th);
    }
    direct /= 3.0;
    EXPECT_NEAR(t.period_values[k], direct, 1e-9) << k;
    EXPECT_EQ(t.period_values[k + 6], -t.period_values[k]) << k;
  }
}

TEST(KernelTable, PeriodicLookupIncludingNegativeK) {
  const auto t = sel::kernel_table(4, Parity::cos);
  for (long k = -40; k <= 40; ++k) EXPECT_NEAR(t.at(k), sel::kernel_value(4, Parity::cos, k), 1e-9) << k;
}

TEST(KernelProperties, AntiPeriodicity) {
  for (int J = 1; J <= 8; ++J)
    for (Parity p : {Parity::sin, Parity::cos}) {
      if (p == Parity::cos && !cos_defined(J)) continue;
      for (long k = 0; k <= 8L * J; ++k) {
        const double v = sel::kernel_value(J, p, k);
        EXPECT_NEAR(sel::kernel_value(J, p, k + 2L * J), -v, 1e-10) << J << " " << k;
        EXPECT_NEAR(sel::kernel_value(J, p, k + 4L * J), v, 1e-10) << J << " " << k;
      }
    }
}

TEST(KernelProperties, EvenVanishOddUnit) {
  for (int J = 1; J <= 8; ++J)
    for (Parity p : {Parity::sin, Parity::cos}) {
      if (p == Parity::cos && !cos_defined(J)) continue;
      for (long k = 0; k <= 4L * J; ++k) {
        const double v = sel::kernel_value(J, p, k);
        if (k % 2 == 0) EXPECT_NEAR(v, 0.0, 1e-12) << J << " " << k;
        else EXPECT_NEAR(std::abs(v), 1.0, 1e-12) << J << " " << k;
      }
    }
}

TEST(ClosedFormJ2, Examples) {
  EXPECT_NEAR(sel::kernel_closed_form_J2(1, Parity::sin), 1.0, 1e-15);
  EXPECT_NEAR(sel::kernel_closed_form_J2(2, Parity::sin), 0.0, 1e-15);
  EXPECT_NEAR(sel::kernel_closed_form_J2(3, Parity::cos), -1.0, 1e-15);
}

TEST(ClosedFormJ2, MatchesDirectKernel) {
  for (Parity p : {Parity::sin, Parity::cos})
    for (long k = 0; k <= 16; ++k)
      EXPECT_NEAR(sel::kernel_closed_form_J2(k, p), sel::kernel_value(2, p, k), 1e-12) << k;
}

TEST(LerchSelector, KZeroVanishesOnBothSides) {
  const auto r = sel::lerch_selector_identity(2, 0, 2.0, 1.0, Parity::sin, 10000);
  EXPECT_EQ(r.lhs, 0.0);
  EXPECT_EQ(r.rhs, 0.0);
  EXPECT_EQ(r.diff, 0.0);
}

TEST(LerchSelector, NonIntegerOrderRejected) {
  EXPECT_EQ(message_of([] { (void)sel::lerch_selector_identity(2, 1, 2.5, 1.0, Parity::sin, 100); }),
            "bilateral sum undefined for negative bases");
}

TEST(LerchSelector, ZeroBaseIsAPole) {
  // a = 1, k = 1: the l = 0 term of (2Jl - k + a)^{-s} has base 0.
  for (int J : {2, 4})
    for (Parity p : {Parity::sin, Parity::cos})
      EXPECT_EQ(message_of([&] { (void)sel::lerch_selector_identity(J, 1, 2.0, 1.0, p, 100); }),
                "pole in bilateral chain");
  // J = 2, k = 3, a = 1: 2*2*(-1) + 3 + 1 = 0.
  EXPECT_EQ(message_of([] { (void)sel::lerch_selector_identity(2, 3, 2.0, 1.0, Parity::sin, 100); }),
            "pole in bilateral chain");
}

namespace {

// Both sides written out directly, for comparison with the module.
struct TwoSides {
  std::complex<double> lhs;
  double rhs;
};

TwoSides direct_sides(int J, long k, int s, double a, Parity p, long L, long K) {
  std::complex<double> lhs = 0.0;
  for (int j = 0; j < J; ++j) {
    const double th = (2.0 * j + 1.0) * pi / (2.0 * J);
    const double w = p == Parity::sin ? std::sin(k * th) / std::sin(th) : std::cos(k * th) / std::cos(th);
    const std::complex<double> z = (p == Parity::sin ? -1.0 : 1.0) * std::polar(1.0, th);
    std::complex<double> phi = 0.0, zn = 1.0;
    for (long n = 0; n < K; ++n) {
      phi += zn / std::pow(n + a, s);
      zn *= z;
    }
    lhs += w * phi;
  }
  lhs /= static_cast<double>(J);
  double rhs = 0.0;
  for (long l = -L; l <= L; ++l) {
    const double u = std::pow(2.0 * J * l + k + a, -s);
    const double v = std::pow(2.0 * J * l - k + a, -s);
    rhs += p == Parity::sin ? u - v : u + v;
  }
  return {lhs, rhs};
}

}  // namespace

TEST(LerchSelector, BothSidesMatchDirectEvaluation) {
  for (Parity p : {Parity::sin, Parity::cos})
    for (int s : {2, 3}) {
      const auto r = sel::lerch_selector_identity(4, 3, s, 1.0, p, 10000);
      const auto d = direct_sides(4, 3, s, 1.0, p, 10000, 200000);
      EXPECT_NEAR(r.lhs, d.lhs.real(), 1e-8) << s;
      EXPECT_NEAR(r.lhs_imag, d.lhs.imag(), 1e-8) << s;
      EXPECT_NEAR(r.rhs, d.rhs, 1e-12) << s;
      EXPECT_NEAR(r.diff, std::abs(r.lhs - r.rhs), 1e-15);
    }
}

TEST(LerchSelector, ImaginaryPartIsReportedNotHidden) {
  // The kernel-weighted sum is not real for J = 4, k = 3; the value is carried.
  const auto r = sel::lerch_selector_identity(4, 3, 2.0, 1.0, Parity::sin, 1000);
  EXPECT_GT(std::abs(r.lhs_imag), sel::kImagTolerance);
}

TEST(LerchSelector, BilateralSumSettlesAsLGrows) {
  // The right side converges in L at rate L^{1-s}; successive changes shrink.
  double prev = 0.0, prev_change = 1e300;
  for (long L : {100L, 1000L, 10000L}) {
    const auto r = sel::lerch_selector_identity(4, 3, 2.0, 1.0, Parity::cos, L, 1000);
    if (L > 100) {
      const double change = std::abs(r.rhs - prev);
      EXPECT_LT(change, prev_change) << L;
      prev_change = change;
    }
    prev = r.rhs;
  }
}
