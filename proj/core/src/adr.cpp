#include "tenom/adr.hpp"

#include <cmath>
#include <numbers>

#include "tenom/integrator.hpp"

namespace tenom::adr {

namespace {

void require_valid(const AdrConfig& cfg) {
  if (cfg.n < 8 || cfg.n % 2 != 0) throw Error("adr: probe size must be even and at least 8");
  if (!(cfg.cfl > 0.0) || !(cfg.amplitude > 0.0) || !(cfg.speed > 0.0)) {
    throw Error("adr: cfl, amplitude and speed must be positive");
  }
}

std::complex<double> project(const Field& u, double phi) {
  const int n = u.grid().n[0];
  std::complex<double> acc{0.0, 0.0};
  for (int j = 0; j < n; ++j) acc += u(j, 0, 0) * std::polar(1.0, -phi * j);
  return acc / static_cast<double>(n);
}

}  // namespace

std::vector<double> linear_coefficients(const SchemeConfig& scheme) {
  if (scheme.family == Family::WenoJs5) return {};
  const int k = scheme.window_width();
  const int shift = k / 2 - 1;
  std::vector<double> c(static_cast<std::size_t>(k), 0.0);
  for (int s = 0; s < stencil::num_candidates(k); ++s) {
    const auto& row = stencil::kCandidates[s];
    for (int m = 0; m < row.width; ++m) {
      c[static_cast<std::size_t>(row.offset + m + shift)] += scheme.teno.weights.d[s] * row.coeff[m];
    }
  }
  return c;
}

std::complex<double> analytic_symbol(const SchemeConfig& scheme, double phi) {
  const auto c = linear_coefficients(scheme);
  if (c.empty()) throw Error("adr: scheme has no linear path");
  const int shift = static_cast<int>(c.size()) / 2 - 1;
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t j = 0; j < c.size(); ++j) {
    sum += c[j] * std::polar(1.0, phi * (static_cast<int>(j) - shift));
  }
  const std::complex<double> i{0.0, 1.0};
  return -i * (1.0 - std::polar(1.0, -phi)) * sum;
}

AdrPoint modified_wavenumber(const SchemeConfig& scheme, double phi, const AdrConfig& cfg) {
  require_valid(cfg);
  if (!(phi > 0.0) || phi > std::numbers::pi * (1.0 + 1e-12)) {
    throw Error("adr: phi must lie in (0, pi]");
  }
  const double bin = phi * cfg.n / (2.0 * std::numbers::pi);
  if (std::abs(bin - std::round(bin)) > 1e-9) {
    throw Error("adr: phi is not a Fourier bin of the probe grid");
  }
  Problem p;
  p.grid = UniformGrid::line(0.0, 1.0, cfg.n, scheme.ghost_cells());
  p.model.equations = Equations::Advection;
  p.model.speed = cfg.speed;
  p.bc = BoundarySpec::uniform(BoundaryKind::Periodic);
  p.scheme = scheme;
  Field u(p.grid, 1);
  for (int j = 0; j < cfg.n; ++j) u(j, 0, 0) = cfg.amplitude * std::cos(phi * j);
  const auto c0 = project(u, phi);
  Solver solver(p, u);
  const double dt = solver.compute_dt(cfg.cfl);
  solver.step(dt);
  const auto c1 = project(solver.state(), phi);
  const double floor = 1e-14 * cfg.amplitude;
  if (std::abs(c0) < floor || std::abs(c1) < floor) {
    throw Error("adr: mode amplitude fell below round-off");
  }
  const double sigma = cfg.speed * dt / p.grid.dx[0];
  const std::complex<double> i{0.0, 1.0};
  const auto big_phi = i * std::log(c1 / c0) / sigma;
  return {phi, big_phi.real(), big_phi.imag()};
}

std::vector<AdrPoint> adr_sweep(const SchemeConfig& scheme, const AdrConfig& cfg) {
  require_valid(cfg);
  scheme.validate();
  std::vector<AdrPoint> rows;
  for (int k = 1; k <= cfg.n / 2; ++k) {
    const double phi = k == cfg.n / 2 ? std::numbers::pi : 2.0 * std::numbers::pi * k / cfg.n;
    rows.push_back(modified_wavenumber(scheme, phi, cfg));
  }
  return rows;
}

}  // namespace tenom::adr
