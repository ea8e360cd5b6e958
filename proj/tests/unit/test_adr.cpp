#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tenom/adr.hpp"

using tenom::SchemeConfig;

TEST(Adr, LinearCoefficientsMatchCentralStencils) {
  const auto c6 = tenom::adr::linear_coefficients(SchemeConfig::from_name("teno6"));
  const double six[] = {1, -8, 37, 37, -8, 1};
  ASSERT_EQ(c6.size(), 6u);
  for (int j = 0; j < 6; ++j) EXPECT_NEAR(c6[j], six[j] / 60.0, 1e-15);
  const auto c8 = tenom::adr::linear_coefficients(SchemeConfig::from_name("teno8am-mp"));
  const double eight[] = {-3, 29, -139, 533, 533, -139, 29, -3};
  ASSERT_EQ(c8.size(), 8u);
  for (int j = 0; j < 8; ++j) EXPECT_NEAR(c8[j], eight[j] / 840.0, 1e-15);
  EXPECT_TRUE(tenom::adr::linear_coefficients(SchemeConfig::from_name("weno-js5")).empty());
}

TEST(Adr, LinearPathMatchesAnalyticSymbol) {
  for (const auto& name : {"teno6", "teno8a", "teno6m-mp", "teno8am-tvd5"}) {
    auto cfg = SchemeConfig::from_name(name);
    cfg.linear = true;
    const auto rows = tenom::adr::adr_sweep(cfg);
    ASSERT_EQ(rows.size(), 32u);
    EXPECT_EQ(rows.back().phi, std::numbers::pi);
    for (const auto& r : rows) {
      const auto s = tenom::adr::analytic_symbol(cfg, r.phi);
      EXPECT_NEAR(r.re, s.real(), 1e-8) << name << " phi " << r.phi;
      EXPECT_NEAR(r.im, s.imag(), 1e-8) << name << " phi " << r.phi;
    }
  }
}

TEST(Adr, FirstBinIsConsistent) {
  for (const auto& name : tenom::scheme_names()) {
    const auto rows = tenom::adr::adr_sweep(SchemeConfig::from_name(name));
    EXPECT_NEAR(rows.front().re / rows.front().phi, 1.0, 1e-3) << name;
  }
}

TEST(Adr, UpwindSchemesAreNeverAntiDissipative) {
  for (const auto& name : tenom::scheme_names()) {
    const auto rows = tenom::adr::adr_sweep(SchemeConfig::from_name(name));
    for (const auto& r : rows) EXPECT_LE(r.im, 1e-12) << name << " phi " << r.phi;
  }
}

TEST(Adr, SweepIsDeterministic) {
  const auto cfg = SchemeConfig::from_name("teno8am-va");
  const auto a = tenom::adr::adr_sweep(cfg);
  const auto b = tenom::adr::adr_sweep(cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].re, b[k].re);
    EXPECT_EQ(a[k].im, b[k].im);
  }
}

TEST(Adr, RejectsOffBinWavenumbers) {
  const auto cfg = SchemeConfig::from_name("teno6");
  EXPECT_THROW(tenom::adr::modified_wavenumber(cfg, 0.3), tenom::Error);
  EXPECT_THROW(tenom::adr::modified_wavenumber(cfg, 4.0), tenom::Error);
  EXPECT_THROW(tenom::adr::analytic_symbol(SchemeConfig::from_name("weno-js5"), 1.0), tenom::Error);
  tenom::adr::AdrConfig bad;
  bad.n = 7;
  EXPECT_THROW(tenom::adr::adr_sweep(cfg, bad), tenom::Error);
}
