#pragma once

// Interface reconstruction for every supported scheme family.

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tenom/error.hpp"
#include "tenom/limiters.hpp"
#include "tenom/stencil.hpp"

namespace tenom {

enum class Family { WenoJs5, Teno6, Teno8A, Teno6M, Teno8AM };

/// Scheme family plus every nonlinear parameter.
///
/// `limiter` is set iff the family is a TENO-M one. `linear` bypasses the
/// cut-off and returns the optimal linear combination (TENO families only).
struct SchemeConfig {
  Family family = Family::Teno6;
  std::optional<limiter::LimiterKind> limiter{};
  stencil::TenoParams teno{};
  limiter::MPParams mp{};
  bool linear = false;

  /// Point values per window: 6 for WENO-JS5 (the last one is unused), else K.
  int window_width() const { return family == Family::Teno8A || family == Family::Teno8AM ? 8 : 6; }
  int ghost_cells() const { return window_width() / 2; }
  bool is_teno_m() const { return family == Family::Teno6M || family == Family::Teno8AM; }

  /// Throws tenom::Error on inconsistent combinations.
  void validate() const;

  /// Canonical name such as "teno8am-mp"; parameter overrides are not encoded.
  std::string name() const;

  /// Defaults for weno-js5, teno6, teno8a, teno6m-{va,tvd5,mp}, teno8am-{va,tvd5,mp}.
  static SchemeConfig from_name(std::string_view name);

  bool operator==(const SchemeConfig&) const = default;
};

/// Names accepted by SchemeConfig::from_name, in a fixed order.
const std::vector<std::string>& scheme_names();

/// Classic fifth-order WENO with eps = 1e-6; `f` points at f_{i-2} of five values.
inline double weno_js5(const double* f) {
  constexpr double eps = 1e-6;
  const double b0 = 13.0 / 12.0 * (f[0] - 2.0 * f[1] + f[2]) * (f[0] - 2.0 * f[1] + f[2]) +
                    0.25 * (f[0] - 4.0 * f[1] + 3.0 * f[2]) * (f[0] - 4.0 * f[1] + 3.0 * f[2]);
  const double b1 = 13.0 / 12.0 * (f[1] - 2.0 * f[2] + f[3]) * (f[1] - 2.0 * f[2] + f[3]) +
                    0.25 * (f[1] - f[3]) * (f[1] - f[3]);
  const double b2 = 13.0 / 12.0 * (f[2] - 2.0 * f[3] + f[4]) * (f[2] - 2.0 * f[3] + f[4]) +
                    0.25 * (3.0 * f[2] - 4.0 * f[3] + f[4]) * (3.0 * f[2] - 4.0 * f[3] + f[4]);
  const double a0 = 0.1 / ((eps + b0) * (eps + b0));
  const double a1 = 0.6 / ((eps + b1) * (eps + b1));
  const double a2 = 0.3 / ((eps + b2) * (eps + b2));
  const double q0 = (2.0 * f[0] - 7.0 * f[1] + 11.0 * f[2]) / 6.0;
  const double q1 = (-f[1] + 5.0 * f[2] + 2.0 * f[3]) / 6.0;
  const double q2 = (2.0 * f[2] + 5.0 * f[3] - f[4]) / 6.0;
  return (a0 * q0 + a1 * q1 + a2 * q2) / (a0 + a1 + a2);
}

namespace detail {

/// TENO-M: nonsmooth candidates are replaced by limited values and the
/// optimal weights are applied without renormalisation.
template <int K>
inline double teno_m(const double* w, const SchemeConfig& cfg) {
  auto s = stencil::detail::select<K>(w, cfg.teno);
  if (s.all_smooth) return stencil::detail::linear_sum<K>(s.flux, cfg.teno.weights);
  const double* fi = w + (K / 2 - 1);
  if (*cfg.limiter == limiter::LimiterKind::MonotonicityPreserving) {
    const auto bounds = limiter::mp_bounds(fi - 2, cfg.mp);
    for (int k = 0; k < K - 2; ++k) {
      if (!s.smooth[k]) s.flux[k] = limiter::mp_filter(s.flux[k], bounds);
    }
  } else {
    const double lim = *cfg.limiter == limiter::LimiterKind::VanAlbada
                           ? limiter::va_flux(fi[-1], fi[0], fi[1])
                           : limiter::tvd5_flux(fi - 2);
    for (int k = 0; k < K - 2; ++k) {
      if (!s.smooth[k]) s.flux[k] = lim;
    }
  }
  return stencil::detail::linear_sum<K>(s.flux, cfg.teno.weights);
}

template <int K>
inline double linear(const double* w, const SchemeConfig& cfg) {
  const double* fi = w + (K / 2 - 1);
  std::array<double, K - 2> flux{};
  for (int k = 0; k < K - 2; ++k) flux[k] = stencil::detail::candidate_at<K>(k, fi);
  return stencil::detail::linear_sum<K>(flux, cfg.teno.weights);
}

}  // namespace detail

/// Interface value at i+1/2 from window_width() oriented point values.
/// The config is assumed validated.
inline double reconstruct_interface(const double* w, const SchemeConfig& cfg) {
  switch (cfg.family) {
    case Family::WenoJs5:
      return weno_js5(w);
    case Family::Teno6:
      return cfg.linear ? detail::linear<6>(w, cfg) : stencil::detail::teno<6>(w, cfg.teno);
    case Family::Teno8A:
      return cfg.linear ? detail::linear<8>(w, cfg) : stencil::detail::teno<8>(w, cfg.teno);
    case Family::Teno6M:
      return cfg.linear ? detail::linear<6>(w, cfg) : detail::teno_m<6>(w, cfg);
    case Family::Teno8AM:
      return cfg.linear ? detail::linear<8>(w, cfg) : detail::teno_m<8>(w, cfg);
  }
  throw Error("reconstruct_interface: unknown family");
}

/// Checked variant: validates the config and the window length.
double reconstruct_interface(std::span<const double> w, const SchemeConfig& cfg);

/// Direction +1 passes through; -1 mirrors the points about the interface.
std::vector<double> orient(std::span<const double> values, int direction);

/// Upwind interface flux of f = a u from window_width() values of u.
double scalar_interface_flux(std::span<const double> u, const SchemeConfig& cfg, double a);

}  // namespace tenom
