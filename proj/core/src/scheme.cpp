#include "tenom/scheme.hpp"

#include <algorithm>

namespace tenom {

namespace {

struct NamedScheme {
  const char* name;
  Family family;
  std::optional<limiter::LimiterKind> limiter;
};

constexpr std::array<NamedScheme, 9> kNamed{{
    {"weno-js5", Family::WenoJs5, std::nullopt},
    {"teno6", Family::Teno6, std::nullopt},
    {"teno8a", Family::Teno8A, std::nullopt},
    {"teno6m-va", Family::Teno6M, limiter::LimiterKind::VanAlbada},
    {"teno6m-tvd5", Family::Teno6M, limiter::LimiterKind::Tvd5},
    {"teno6m-mp", Family::Teno6M, limiter::LimiterKind::MonotonicityPreserving},
    {"teno8am-va", Family::Teno8AM, limiter::LimiterKind::VanAlbada},
    {"teno8am-tvd5", Family::Teno8AM, limiter::LimiterKind::Tvd5},
    {"teno8am-mp", Family::Teno8AM, limiter::LimiterKind::MonotonicityPreserving},
}};

int order_of(Family f) {
  return f == Family::Teno8A || f == Family::Teno8AM ? 8 : 6;
}

}  // namespace

void SchemeConfig::validate() const {
  if (is_teno_m() != limiter.has_value()) {
    throw Error("scheme: a limiter is required for TENO-M families and forbidden otherwise");
  }
  if (family == Family::WenoJs5) {
    if (linear) throw Error("scheme: weno-js5 has no linear path");
    return;
  }
  const int k = order_of(family);
  if (teno.cutoff.adaptive && k != 8) {
    throw Error("scheme: adaptive cut-off is only defined for eight-point families");
  }
  if (!teno.cutoff.adaptive && !(teno.cutoff.fixed > 0.0 && teno.cutoff.fixed < 1.0)) {
    throw Error("scheme: fixed cut-off must lie in (0, 1)");
  }
  if (teno.weights.order != k) throw Error("scheme: optimal weights built for another order");
  if (teno.smooth.q < 1 || !(teno.smooth.epsilon > 0.0)) {
    throw Error("scheme: smoothness parameters out of range");
  }
  const auto& ap = teno.cutoff.adapt;
  if (!(0.9 * ap.cr > 0.0 && 0.9 * ap.cr < 1.0)) throw Error("scheme: C_r out of range");
  if (!(mp.alpha > 0.0)) throw Error("scheme: MP alpha must be positive");
}

std::string SchemeConfig::name() const {
  for (const auto& s : kNamed) {
    if (s.family == family && s.limiter == limiter) return s.name;
  }
  throw Error("scheme: no canonical name for this family/limiter pair");
}

SchemeConfig SchemeConfig::from_name(std::string_view name) {
  const auto it = std::find_if(kNamed.begin(), kNamed.end(),
                               [&](const NamedScheme& s) { return name == s.name; });
  if (it == kNamed.end()) throw Error("scheme: unknown scheme '" + std::string(name) + "'");
  SchemeConfig cfg;
  cfg.family = it->family;
  cfg.limiter = it->limiter;
  if (cfg.family != Family::WenoJs5) {
    const int k = order_of(cfg.family);
    cfg.teno.weights = stencil::optimal_weights(k);
    cfg.teno.cutoff.adaptive = k == 8;
  }
  return cfg;
}

const std::vector<std::string>& scheme_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kNamed) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

double reconstruct_interface(std::span<const double> w, const SchemeConfig& cfg) {
  cfg.validate();
  if (static_cast<int>(w.size()) != cfg.window_width()) {
    throw Error("reconstruct_interface: window has " + std::to_string(w.size()) +
                " points, scheme needs " + std::to_string(cfg.window_width()));
  }
  return reconstruct_interface(w.data(), cfg);
}

std::vector<double> orient(std::span<const double> values, int direction) {
  if (direction != 1 && direction != -1) throw Error("orient: direction must be +1 or -1");
  if (values.empty() || values.size() % 2 != 0) {
    throw Error("orient: need an even, non-zero number of points around the interface");
  }
  std::vector<double> out(values.begin(), values.end());
  if (direction == -1) std::reverse(out.begin(), out.end());
  return out;
}

double scalar_interface_flux(std::span<const double> u, const SchemeConfig& cfg, double a) {
  cfg.validate();
  const int width = cfg.window_width();
  if (static_cast<int>(u.size()) != width) {
    throw Error("scalar_interface_flux: stencil size does not match the scheme width");
  }
  if (!std::isfinite(a)) throw Error("scalar_interface_flux: wave speed must be finite");
  std::array<double, 8> f{};
  if (a >= 0.0) {
    for (int j = 0; j < width; ++j) f[j] = a * u[j];
  } else {
    for (int j = 0; j < width; ++j) f[j] = a * u[width - 1 - j];
  }
  return reconstruct_interface(f.data(), cfg);
}

}  // namespace tenom
