#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "tenom/stencil.hpp"

namespace st = tenom::stencil;
using tenom_test::beta_oracle;
using tenom_test::monomial_average;

namespace {

std::vector<double> slice(const std::vector<double>& w, int order, int k) {
  const auto& c = st::kCandidates[k];
  const int first = st::upwind_index(order) + c.offset;
  return {w.begin() + first, w.begin() + first + c.width};
}

std::vector<double> random_window(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> w(n);
  for (auto& x : w) x = dist(rng);
  return w;
}

}  // namespace

TEST(Candidates, RowsSumToOne) {
  for (const auto& c : st::kCandidates) {
    double s = 0.0;
    for (int m = 0; m < c.width; ++m) s += c.coeff[m];
    EXPECT_NEAR(s, 1.0, 1e-15);
  }
}

TEST(Candidates, ReproduceMonomialsUpToWidthMinusOne) {
  for (int order : {6, 8}) {
    const int i = st::upwind_index(order);
    for (int k = 0; k < st::num_candidates(order); ++k) {
      for (int l = 0; l < st::kCandidates[k].width; ++l) {
        std::vector<double> w(order);
        for (int j = 0; j < order; ++j) w[j] = static_cast<double>(monomial_average(l, j - i));
        EXPECT_NEAR(st::candidate_flux(order, k, w), std::pow(0.5, l), 1e-12)
            << "order " << order << " candidate " << k << " degree " << l;
      }
    }
  }
}

TEST(Candidates, Examples) {
  EXPECT_DOUBLE_EQ(st::candidate_flux(6, 0, std::vector<double>{9, 1, 1, 1, 9, 9}), 1.0);
  EXPECT_DOUBLE_EQ(st::candidate_flux(6, 0, std::vector<double>{9, 0, 1, 2, 9, 9}), 1.5);
  EXPECT_THROW(st::candidate_flux(6, 4, std::vector<double>(6)), tenom::Error);
  EXPECT_THROW(st::candidate_flux(6, 0, std::vector<double>(5)), tenom::Error);
}

TEST(Smoothness, CandidateExamples) {
  EXPECT_EQ(st::beta_candidate(6, 0, std::vector<double>(6, 3.0)), 0.0);
  EXPECT_NEAR(st::beta_candidate(6, 0, std::vector<double>{9, 0, 1, 2, 9, 9}), 1.0, 1e-14);
  EXPECT_NEAR(st::beta_candidate(6, 0, std::vector<double>{9, 1, 2, 4, 9, 9}), 10.0 / 3.0, 1e-14);
}

TEST(Smoothness, GlobalExamples) {
  for (int order : {6, 8}) {
    std::vector<double> w(order, -2.5);
    EXPECT_EQ(st::beta_global(w), 0.0);
    for (int j = 0; j < order; ++j) w[j] = j;
    EXPECT_NEAR(st::beta_global(w), 1.0, 1e-13);
  }
}

TEST(Smoothness, MatchesQuadratureOracle) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    for (int order : {6, 8}) {
      const auto w = random_window(rng, order);
      for (int k = 0; k < st::num_candidates(order); ++k) {
        const double oracle = beta_oracle(st::kCandidates[k].offset, slice(w, order, k));
        EXPECT_NEAR(st::beta_candidate(order, k, w), oracle, 1e-12 * std::max(1.0, oracle));
      }
      const double oracle = beta_oracle(-st::upwind_index(order), w);
      EXPECT_NEAR(st::beta_global(w), oracle, 1e-12 * std::max(1.0, oracle));
    }
  }
}

TEST(Tau, Examples) {
  EXPECT_EQ(st::tau(std::vector<double>(6, 1.0)), 0.0);
  for (int order : {6, 8}) {
    std::vector<double> w(order);
    for (int j = 0; j < order; ++j) w[j] = static_cast<double>(j * j);
    EXPECT_LT(st::tau(w), 1e-10 * st::beta_global(w));
  }
  const std::vector<double> step{0, 0, 0, 1, 1, 1};
  const double oracle =
      std::abs(beta_oracle(-2, step) -
               (beta_oracle(0, {0, 1, 1}) + beta_oracle(-2, {0, 0, 0}) + 4.0 * beta_oracle(-1, {0, 0, 1})) /
                   6.0);
  EXPECT_GT(st::tau(step), 0.0);
  EXPECT_NEAR(st::tau(step), oracle, 1e-12);
}

TEST(Gamma, Examples) {
  EXPECT_EQ(st::gamma(0.7, 0.0), 1.0);
  const double huge = st::gamma(0.0, 1.0);
  EXPECT_TRUE(std::isfinite(huge));
  EXPECT_DOUBLE_EQ(huge, std::pow(1.0 + 1e40, 6));
  EXPECT_DOUBLE_EQ(st::gamma(1.0, 1.0), 64.0);
}

TEST(Chi, Examples) {
  const auto equal = st::normalize_chi(std::vector<double>(4, 3.0));
  for (double c : equal) EXPECT_DOUBLE_EQ(c, 0.25);
  const auto skew = st::normalize_chi(std::vector<double>{64, 1, 1, 1});
  EXPECT_DOUBLE_EQ(skew[0], 64.0 / 67.0);
  const auto single = st::normalize_chi(std::vector<double>{5.0});
  EXPECT_EQ(single[0], 1.0);
}

TEST(Cutoff, StrictInequality) {
  EXPECT_EQ(st::cutoff_delta(std::vector<double>{1e-8}, 1e-7)[0], 0);
  EXPECT_EQ(st::cutoff_delta(std::vector<double>{1e-7}, 1e-7)[0], 1);
  const auto smooth = st::cutoff_delta(std::vector<double>(4, 0.25), 1e-5);
  for (auto d : smooth) EXPECT_EQ(d, 1);
}

TEST(AdaptiveCutoff, LimitCases) {
  EXPECT_EQ(st::adapt_ct(std::vector<double>{0, 1, 2, 3, 4, 5}), 1e-10);
  EXPECT_EQ(st::adapt_ct(std::vector<double>{0, 0, 0, 1, 1, 1}), 1e-7);
  EXPECT_EQ(st::adapt_ct(std::vector<double>(6, 2.0)), 1e-10);
  EXPECT_THROW(st::adapt_ct(std::vector<double>(8, 2.0)), tenom::Error);
}

TEST(OptimalWeights, SolveMomentSystem) {
  const std::vector<double> six{1, -8, 37, 37, -8, 1};
  const std::vector<double> eight{-3, 29, -139, 533, 533, -139, 29, -3};
  for (int order : {6, 8}) {
    const int nc = st::num_candidates(order);
    const int i = st::upwind_index(order);
    const double scale = order == 6 ? 60.0 : 840.0;
    const auto& target = order == 6 ? six : eight;
    // Column k holds candidate k's coefficients spread over the window.
    std::vector<std::vector<double>> a(order, std::vector<double>(nc, 0.0));
    for (int k = 0; k < nc; ++k) {
      const auto& c = st::kCandidates[k];
      for (int m = 0; m < c.width; ++m) a[i + c.offset + m][k] = c.coeff[m];
    }
    // Normal equations A^T A d = A^T b.
    std::vector<std::vector<double>> n(nc, std::vector<double>(nc + 1, 0.0));
    for (int p = 0; p < nc; ++p) {
      for (int q = 0; q < nc; ++q) {
        for (int r = 0; r < order; ++r) n[p][q] += a[r][p] * a[r][q];
      }
      for (int r = 0; r < order; ++r) n[p][nc] += a[r][p] * target[r] / scale;
    }
    for (int c = 0; c < nc; ++c) {
      for (int r = 0; r < nc; ++r) {
        if (r == c) continue;
        const double s = n[r][c] / n[c][c];
        for (int l = c; l <= nc; ++l) n[r][l] -= s * n[c][l];
      }
    }
    const auto w = st::optimal_weights(order);
    double sum = 0.0;
    for (int k = 0; k < nc; ++k) {
      EXPECT_NEAR(w.d[k], n[k][nc] / n[k][k], 1e-12) << "order " << order << " k " << k;
      sum += w.d[k];
    }
    EXPECT_NEAR(sum, 1.0, 1e-15);
    for (int r = 0; r < order; ++r) {
      double row = 0.0;
      for (int k = 0; k < nc; ++k) row += a[r][k] * w.d[k];
      EXPECT_NEAR(row, target[r] / scale, 1e-15);
    }
  }
}

TEST(TenoFlux, SmoothSineIsLinear) {
  const int n = 64;
  for (int order : {6, 8}) {
    st::TenoParams p;
    p.weights = st::optimal_weights(order);
    p.cutoff.adaptive = order == 8;
    const int i0 = st::upwind_index(order);
    for (int f = 0; f < n; ++f) {
      std::vector<double> w(order);
      for (int j = 0; j < order; ++j) w[j] = std::sin(2.0 * M_PI * (f + j - i0 + 0.5) / n);
      double linear = 0.0;
      for (int k = 0; k < st::num_candidates(order); ++k) {
        linear += p.weights.d[k] * st::candidate_flux(order, k, w);
      }
      EXPECT_EQ(st::teno_flux(w, p), linear) << "order " << order << " face " << f;
    }
  }
}

TEST(TenoFlux, SingleSurvivorReturnsItsCandidate) {
  const std::vector<double> w{10, 0, 0, 0, 10, 10};
  st::TenoParams p;
  p.weights = st::optimal_weights(6);
  std::vector<double> gammas;
  const double t = st::tau(w);
  for (int k = 0; k < 4; ++k) gammas.push_back(st::gamma(st::beta_candidate(6, k, w), t));
  const auto delta = st::cutoff_delta(st::normalize_chi(gammas), p.cutoff.fixed);
  EXPECT_EQ(delta, (std::vector<std::uint8_t>{1, 0, 0, 0}));
  EXPECT_EQ(st::teno_flux(w, p), st::candidate_flux(6, 0, w));
}
