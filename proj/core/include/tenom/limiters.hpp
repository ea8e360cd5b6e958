#pragma once

// Nonlinear limiters used to filter nonsmooth TENO candidates.
//
// Every function takes point values ordered left to right with the upwind
// cell i at a fixed position; windows are assumed already oriented so that
// the wind blows towards increasing index.

#include <algorithm>
#include <cmath>

namespace tenom::limiter {

enum class LimiterKind { VanAlbada, Tvd5, MonotonicityPreserving };

enum class Curvature { M4, MM };

struct MPParams {
  double alpha = 1.25;
  double beta = 4.0;
  Curvature curvature = Curvature::M4;

  bool operator==(const MPParams&) const = default;
};

/// Slope ratios below this magnitude in the denominator count as a plateau.
inline constexpr double kSlopeGuard = 1e-100;

inline double sgn(double x) { return static_cast<double>((x > 0.0) - (x < 0.0)); }

inline double minmod2(double x, double y) {
  return 0.5 * (sgn(x) + sgn(y)) * std::min(std::abs(x), std::abs(y));
}

inline double minmod4(double a, double b, double c, double d) {
  const double sa = sgn(a);
  return 0.125 * (sa + sgn(b)) * std::abs((sa + sgn(c)) * (sa + sgn(d))) *
         std::min({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

inline double median(double x, double y, double z) { return x + minmod2(y - x, z - x); }

/// delta+ / delta- with a sign-preserving guard on the denominator.
inline double slope_ratio(double dminus, double dplus) {
  return dplus / (dminus + std::copysign(kSlopeGuard, dminus));
}

/// Van Albada reconstruction from (f_{i-1}, f_i, f_{i+1}), kappa = 1/3.
inline double va_flux(double fm1, double f0, double fp1) {
  constexpr double kappa = 1.0 / 3.0;
  const double dm = f0 - fm1;
  const double dp = fp1 - f0;
  if (std::abs(dm) < kSlopeGuard) return f0;
  const double r = slope_ratio(dm, dp);
  const double phi = 2.0 * r / (r * r + 1.0);
  return f0 + 0.25 * phi * ((1.0 - kappa * phi) * dm + (1.0 + kappa * phi) * dp);
}

/// Fifth-order TVD slope function from the ratios at cells i-1, i, i+1.
/// Always in [0, 2]; NaN from overflowing ratios maps to 0.
inline double tvd5_phi(double r_im1, double r_i, double r_ip1) {
  constexpr double alpha = 2.0;
  const double beta = (-2.0 / r_im1 + 11.0 + 24.0 * r_i - 3.0 * r_i * r_ip1) / 30.0;
  if (std::isnan(beta)) return 0.0;
  return std::max(0.0, std::min({alpha, alpha * r_i, beta}));
}

/// Fifth-order TVD reconstruction; `f` points at f_{i-2} of five values.
inline double tvd5_flux(const double* f) {
  const double dm = f[2] - f[1];
  if (std::abs(dm) < kSlopeGuard) return f[2];
  const double r_im1 = slope_ratio(f[1] - f[0], dm);
  const double r_i = slope_ratio(dm, f[3] - f[2]);
  const double r_ip1 = slope_ratio(f[3] - f[2], f[4] - f[3]);
  return f[2] + 0.5 * tvd5_phi(r_im1, r_i, r_ip1) * dm;
}

inline double cell_curvature(double fm1, double f0, double fp1) {
  return fp1 - 2.0 * f0 + fm1;
}

inline double interface_curvature(double d0, double d1, Curvature variant) {
  if (variant == Curvature::MM) return minmod2(d0, d1);
  return minmod4(4.0 * d0 - d1, 4.0 * d1 - d0, d0, d1);
}

struct MPBounds {
  double lo = 0.0;
  double hi = 0.0;
};

/// Lower and upper MP bounds at i+1/2; `f` points at f_{i-2} of five values.
inline MPBounds mp_bounds(const double* f, const MPParams& p) {
  const double fm1 = f[1];
  const double f0 = f[2];
  const double fp1 = f[3];
  const double d_m1 = cell_curvature(f[0], fm1, f0);
  const double d_0 = cell_curvature(fm1, f0, fp1);
  const double d_p1 = cell_curvature(f0, fp1, f[4]);
  const double d_half_p = interface_curvature(d_0, d_p1, p.curvature);
  const double d_half_m = interface_curvature(d_m1, d_0, p.curvature);
  const double f_ul = f0 + p.alpha * (f0 - fm1);
  const double f_md = 0.5 * (f0 + fp1) - 0.5 * d_half_p;
  const double f_lc = f0 + 0.5 * (f0 - fm1) + p.beta / 3.0 * d_half_m;
  MPBounds b;
  b.lo = std::max(std::min({f0, fp1, f_md}), std::min({f0, f_ul, f_lc}));
  b.hi = std::min(std::max({f0, fp1, f_md}), std::max({f0, f_ul, f_lc}));
  return b;
}

inline double mp_filter(double fhat, const MPBounds& b) { return median(fhat, b.lo, b.hi); }

inline double mp_filter(double fhat, const double* f, const MPParams& p) {
  return mp_filter(fhat, mp_bounds(f, p));
}

}  // namespace tenom::limiter
