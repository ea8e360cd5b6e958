#pragma once

// Candidate stencils and the ENO-like selection machinery of TENO schemes.
//
// A window holds K point values ordered left to right around interface
// i+1/2: f_{i-2..i+3} for K = 6 and f_{i-3..i+4} for K = 8. Cell i sits at
// index K/2 - 1. Candidates are numbered as in the incremental-width
// arrangement: 0 centred, 1 downwind-biased, 2 upwind-biased (three points),
// then alternately downwind/upwind with four points, then five.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "tenom/detail/smoothness_tables.hpp"
#include "tenom/error.hpp"

namespace tenom::stencil {

/// gamma_k = (C + tau / (beta_k + epsilon))^q
struct SmoothnessParams {
  double c = 1.0;
  int q = 6;
  double epsilon = 1e-40;

  bool operator==(const SmoothnessParams&) const = default;
};

/// Parameters of the locally adapted cut-off C_T.
struct AdaptParams {
  double xi = 1e-3;
  double cr = 0.23;
  double alpha1 = 10.5;
  double alpha2 = 3.5;

  bool operator==(const AdaptParams&) const = default;
};

/// Fixed or locally adapted cut-off.
struct Cutoff {
  bool adaptive = false;
  double fixed = 1e-5;
  AdaptParams adapt{};

  bool operator==(const Cutoff&) const = default;
};

/// One row of the candidate table: first cell relative to i, width, and the
/// interface-value coefficients.
struct Candidate {
  int offset;
  int width;
  std::array<double, 5> coeff;
};

inline constexpr int kMaxCandidates = 6;

inline constexpr std::array<Candidate, kMaxCandidates> kCandidates{{
    {-1, 3, {-1.0 / 6.0, 5.0 / 6.0, 2.0 / 6.0, 0.0, 0.0}},
    {0, 3, {2.0 / 6.0, 5.0 / 6.0, -1.0 / 6.0, 0.0, 0.0}},
    {-2, 3, {2.0 / 6.0, -7.0 / 6.0, 11.0 / 6.0, 0.0, 0.0}},
    {0, 4, {3.0 / 12.0, 13.0 / 12.0, -5.0 / 12.0, 1.0 / 12.0, 0.0}},
    {-3, 4, {-3.0 / 12.0, 13.0 / 12.0, -23.0 / 12.0, 25.0 / 12.0, 0.0}},
    {0, 5, {12.0 / 60.0, 77.0 / 60.0, -43.0 / 60.0, 17.0 / 60.0, -3.0 / 60.0}},
}};

constexpr int num_candidates(int order) { return order - 2; }

/// Index of cell i inside a window of the given order.
constexpr int upwind_index(int order) { return order / 2 - 1; }

/// Optimal linear weights d_k; only the first order-2 entries are used.
struct OptimalWeights {
  int order = 6;
  std::array<double, kMaxCandidates> d{};

  std::span<const double> values() const {
    return {d.data(), static_cast<std::size_t>(num_candidates(order))};
  }

  bool operator==(const OptimalWeights&) const = default;
};

/// Everything the TENO selection needs besides the window.
struct TenoParams {
  SmoothnessParams smooth{};
  Cutoff cutoff{};
  OptimalWeights weights{};

  bool operator==(const TenoParams&) const = default;
};

double candidate_flux(int order, int k, std::span<const double> window);
double beta_candidate(int order, int k, std::span<const double> window);
double beta_global(std::span<const double> window);
double tau(std::span<const double> window);
double gamma(double beta_k, double tau, const SmoothnessParams& p = {});
std::vector<double> normalize_chi(std::span<const double> gamma);
std::vector<std::uint8_t> cutoff_delta(std::span<const double> chi, double ct);

/// Adaptive cut-off from the six point values f_{i-2..i+3}.
double adapt_ct(std::span<const double> f, const AdaptParams& p = {});

/// Maximum-order weights for K in {6, 8}.
OptimalWeights optimal_weights(int order);

/// Standard TENO reconstruction: optimal weights renormalised over the
/// candidates that survive the cut-off.
double teno_flux(std::span<const double> window, const TenoParams& p);

namespace detail {

template <int R, std::size_t T>
inline double sum_squares(const std::array<SquareTerm<R>, T>& terms, const double* f) {
  double s = 0.0;
  for (const auto& t : terms) {
    double v = 0.0;
    for (int r = 0; r < R; ++r) v += t.coeff[r] * f[r];
    s += t.weight * v * v;
  }
  return s;
}

/// beta of candidate k given a pointer to cell i.
inline double beta_at(int k, const double* fi) {
  switch (k) {
    case 0: return sum_squares(kCentered3, fi - 1);
    case 1: return sum_squares(kDownwind3, fi);
    case 2: return sum_squares(kUpwind3, fi - 2);
    case 3: return sum_squares(kDownwind4, fi);
    case 4: return sum_squares(kUpwind4, fi - 3);
    default: return sum_squares(kDownwind5, fi);
  }
}

template <int K>
inline double beta_full(const double* w) {
  static_assert(K == 6 || K == 8);
  if constexpr (K == 6) {
    return sum_squares(kFull6, w);
  } else {
    return sum_squares(kFull8, w);
  }
}

template <int K>
inline double candidate_at(int k, const double* fi) {
  const auto& c = kCandidates[k];
  const double* f = fi + c.offset;
  double s = 0.0;
  for (int m = 0; m < c.width; ++m) s += c.coeff[m] * f[m];
  return s;
}

inline double ipow(double x, int q) {
  double r = 1.0;
  for (int i = 0; i < q; ++i) r *= x;
  return r;
}

/// Candidate fluxes and cut-off flags of one window.
template <int K>
struct Selection {
  std::array<double, K - 2> flux{};
  std::array<bool, K - 2> smooth{};
  bool all_smooth = true;
};

inline double adapt_ct_ptr(const double* f, const AdaptParams& p) {
  const double eps = 0.9 * p.cr / (1.0 - 0.9 * p.cr) * p.xi * p.xi;
  double eta_min = 1.0e300;
  for (int j = 1; j <= 4; ++j) {
    const double dm = f[j] - f[j - 1];
    const double dp = f[j + 1] - f[j];
    const double eta = (std::abs(2.0 * dp * dm) + eps) / (dp * dp + dm * dm + eps);
    eta_min = std::min(eta_min, eta);
  }
  const double m = 1.0 - std::min(1.0, eta_min / p.cr);
  const double g = ipow(1.0 - m, 4) * (1.0 + 4.0 * m);
  const double beta = p.alpha1 - p.alpha2 * (1.0 - g);
  const double exponent = std::max(1.0, std::floor(beta));
  constexpr std::array<double, 16> kNegPow10{1e0,  1e-1,  1e-2,  1e-3,  1e-4,  1e-5,
                                             1e-6, 1e-7,  1e-8,  1e-9,  1e-10, 1e-11,
                                             1e-12, 1e-13, 1e-14, 1e-15};
  if (exponent < 16.0) return kNegPow10[static_cast<std::size_t>(exponent)];
  return std::pow(10.0, -exponent);
}

template <int K>
inline Selection<K> select(const double* w, const TenoParams& p) {
  constexpr int nc = K - 2;
  const double* fi = w + (K / 2 - 1);
  Selection<K> s;
  std::array<double, nc> beta{};
  for (int k = 0; k < nc; ++k) {
    s.flux[k] = candidate_at<K>(k, fi);
    beta[k] = beta_at(k, fi);
  }
  const double t = std::abs(beta_full<K>(w) - (beta[1] + beta[2] + 4.0 * beta[0]) / 6.0);
  // Normalise with the largest base so gamma^q never overflows.
  std::array<double, nc> base{};
  double bmax = 0.0;
  for (int k = 0; k < nc; ++k) {
    base[k] = p.smooth.c + t / (beta[k] + p.smooth.epsilon);
    bmax = std::max(bmax, base[k]);
  }
  double sum = 0.0;
  for (int k = 0; k < nc; ++k) {
    base[k] = ipow(base[k] / bmax, p.smooth.q);
    sum += base[k];
  }
  const double ct =
      p.cutoff.adaptive ? adapt_ct_ptr(fi - 2, p.cutoff.adapt) : p.cutoff.fixed;
  for (int k = 0; k < nc; ++k) {
    s.smooth[k] = !(base[k] / sum < ct);
    s.all_smooth = s.all_smooth && s.smooth[k];
  }
  return s;
}

template <int K>
inline double linear_sum(const std::array<double, K - 2>& flux, const OptimalWeights& wts) {
  double r = 0.0;
  for (int k = 0; k < K - 2; ++k) r += wts.d[k] * flux[k];
  return r;
}

template <int K>
inline double teno(const double* w, const TenoParams& p) {
  const auto s = select<K>(w, p);
  if (s.all_smooth) return linear_sum<K>(s.flux, p.weights);
  double num = 0.0;
  double den = 0.0;
  for (int k = 0; k < K - 2; ++k) {
    if (s.smooth[k]) {
      num += p.weights.d[k] * s.flux[k];
      den += p.weights.d[k];
    }
  }
  if (!(den > 0.0)) throw Error("teno: every candidate was cut off");
  return num / den;
}

}  // namespace detail

}  // namespace tenom::stencil
