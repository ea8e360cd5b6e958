#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <utility>

#include "tenom/error.hpp"
#include "tenom/scheme.hpp"

namespace tenom::euler {

template <int M>
using Vec = std::array<double, M>;
template <int M>
using Mat = std::array<Vec<M>, M>;

/// Primitive variables. One-dimensional states leave vel[1] at zero.
struct PrimState {
  double rho = 1.0;
  std::array<double, 2> vel{0.0, 0.0};
  double p = 1.0;

  bool operator==(const PrimState&) const = default;
};

/// Conserved variables: density, momentum, total energy per unit volume.
struct ConsState {
  double rho = 1.0;
  std::array<double, 2> mom{0.0, 0.0};
  double energy = 1.0;
};

ConsState prim_to_cons(const PrimState& q, double gamma);
PrimState cons_to_prim(const ConsState& u, double gamma);

/// Packs a conserved state into the component layout used by the solver:
/// (rho, rho u, E) for M = 3 and (rho, rho u, rho v, E) for M = 4.
template <int M>
Vec<M> pack(const ConsState& u) {
  static_assert(M == 3 || M == 4);
  if constexpr (M == 3) {
    return {u.rho, u.mom[0], u.energy};
  } else {
    return {u.rho, u.mom[0], u.mom[1], u.energy};
  }
}

template <int M>
ConsState unpack(const Vec<M>& u) {
  static_assert(M == 3 || M == 4);
  ConsState s;
  s.rho = u[0];
  s.mom[0] = u[1];
  s.mom[1] = M == 4 ? u[2] : 0.0;
  s.energy = u[M - 1];
  return s;
}

/// Pressure of a packed conserved state.
template <int M>
inline double pressure(const Vec<M>& u, double gamma) {
  double ke = u[1] * u[1];
  if constexpr (M == 4) ke += u[2] * u[2];
  return (gamma - 1.0) * (u[M - 1] - 0.5 * ke / u[0]);
}

/// Flux along the first spatial axis of a packed conserved state.
template <int M>
inline Vec<M> physical_flux(const Vec<M>& u, double gamma) {
  const double vn = u[1] / u[0];
  const double p = pressure<M>(u, gamma);
  Vec<M> f;
  f[0] = u[1];
  f[1] = u[1] * vn + p;
  if constexpr (M == 4) f[2] = u[2] * vn;
  f[M - 1] = (u[M - 1] + p) * vn;
  return f;
}

/// Roe-averaged state between two admissible states.
struct RoeState {
  double rho = 0.0;
  double u = 0.0;  ///< velocity along the sweep axis
  double v = 0.0;  ///< transverse velocity
  double h = 0.0;  ///< total enthalpy
  double c = 0.0;  ///< sound speed from the averaged enthalpy
};

RoeState roe_average(const PrimState& left, const PrimState& right, double gamma);

template <int M>
RoeState roe_average(const Vec<M>& ul, const Vec<M>& ur, double gamma) {
  const double rl = ul[0];
  const double rr = ur[0];
  const double pl = pressure<M>(ul, gamma);
  const double pr = pressure<M>(ur, gamma);
  if (!(rl > 0.0 && rr > 0.0 && pl > 0.0 && pr > 0.0)) {
    throw PositivityError("roe_average: non-positive density or pressure");
  }
  const double sl = std::sqrt(rl);
  const double sr = std::sqrt(rr);
  const double inv = 1.0 / (sl + sr);
  RoeState s;
  s.rho = sl * sr;
  s.u = (ul[1] / sl + ur[1] / sr) * inv;
  if constexpr (M == 4) s.v = (ul[2] / sl + ur[2] / sr) * inv;
  s.h = ((ul[M - 1] + pl) / sl + (ur[M - 1] + pr) / sr) * inv;
  const double q2 = s.u * s.u + s.v * s.v;
  const double c2 = (gamma - 1.0) * (s.h - 0.5 * q2);
  if (!(c2 > 0.0)) throw PositivityError("roe_average: non-positive sound speed");
  s.c = std::sqrt(c2);
  return s;
}

/// Eigenvalues and eigenvectors of the flux Jacobian at a Roe state.
/// Fields are ordered (u - c, u, [u,] u + c); rows of `left` and columns of
/// `right` are matching eigenvectors.
template <int M>
struct EigenSystem {
  Vec<M> lambda{};
  Mat<M> left{};
  Mat<M> right{};
};

template <int M>
EigenSystem<M> eigensystem(const RoeState& s, double gamma) {
  static_assert(M == 3 || M == 4);
  EigenSystem<M> e;
  const double u = s.u;
  const double v = s.v;
  const double c = s.c;
  const double h = s.h;
  const double q2 = u * u + (M == 4 ? v * v : 0.0);
  const double b1 = (gamma - 1.0) / (c * c);
  const double b2 = 0.5 * q2 * b1;
  if constexpr (M == 3) {
    e.lambda = {u - c, u, u + c};
    e.right = {{{1.0, 1.0, 1.0}, {u - c, u, u + c}, {h - u * c, 0.5 * q2, h + u * c}}};
    e.left = {{{0.5 * (b2 + u / c), -0.5 * (b1 * u + 1.0 / c), 0.5 * b1},
               {1.0 - b2, b1 * u, -b1},
               {0.5 * (b2 - u / c), -0.5 * (b1 * u - 1.0 / c), 0.5 * b1}}};
  } else {
    e.lambda = {u - c, u, u, u + c};
    e.right = {{{1.0, 1.0, 0.0, 1.0},
                {u - c, u, 0.0, u + c},
                {v, v, 1.0, v},
                {h - u * c, 0.5 * q2, v, h + u * c}}};
    e.left = {{{0.5 * (b2 + u / c), -0.5 * (b1 * u + 1.0 / c), -0.5 * b1 * v, 0.5 * b1},
               {1.0 - b2, b1 * u, b1 * v, -b1},
               {-v, 0.0, 1.0, 0.0},
               {0.5 * (b2 - u / c), -0.5 * (b1 * u - 1.0 / c), -0.5 * b1 * v, 0.5 * b1}}};
  }
  return e;
}

/// Local Lax-Friedrichs splitting f^{+-} = (f +- lambda u) / 2.
template <int M>
std::pair<Vec<M>, Vec<M>> rusanov_split(const Vec<M>& f, const Vec<M>& u, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw Error("rusanov_split: splitting speed must be finite and non-negative");
  }
  std::pair<Vec<M>, Vec<M>> out;
  for (int s = 0; s < M; ++s) {
    out.first[s] = 0.5 * (f[s] + lambda * u[s]);
    out.second[s] = 0.5 * (f[s] - lambda * u[s]);
  }
  return out;
}

enum class FluxKind { Rusanov, RoeEntropyFix };

/// Characteristic-wise reconstruction of one interface flux.
///
/// `u`, `f` and `cell_lambda` hold K = cfg.window_width() consecutive cells
/// centred on the interface (cell i is at index K/2 - 1). Each state and
/// flux is projected with the left eigenvectors of `sys`; with Rusanov
/// splitting the positive part is reconstructed from the left-biased window
/// and the negative part from the mirrored one. RoeEntropyFix reconstructs
/// one-sided by the sign of the Roe eigenvalue and falls back to the split
/// path when |lambda| < entropy_fix. The result is mapped back with `right`.
template <int M>
Vec<M> characteristic_flux(const Vec<M>* u, const Vec<M>* f, const Vec<M>* cell_lambda,
                           const EigenSystem<M>& sys, const SchemeConfig& cfg,
                           FluxKind kind, double entropy_fix) {
  constexpr int kMaxWidth = 8;
  const int width = cfg.window_width();
  double w[kMaxWidth];
  double g[kMaxWidth];
  double plus[kMaxWidth];
  double minus[kMaxWidth];
  Vec<M> ghat{};
  for (int s = 0; s < M; ++s) {
    const auto& l = sys.left[s];
    double lmax = std::abs(sys.lambda[s]);
    for (int j = 0; j < width; ++j) {
      double ws = 0.0;
      double gs = 0.0;
      for (int q = 0; q < M; ++q) {
        ws += l[q] * u[j][q];
        gs += l[q] * f[j][q];
      }
      w[j] = ws;
      g[j] = gs;
      lmax = std::max(lmax, std::abs(cell_lambda[j][s]));
    }
    const double lr = sys.lambda[s];
    if (kind == FluxKind::RoeEntropyFix && lr >= entropy_fix) {
      ghat[s] = reconstruct_interface(g, cfg);
    } else if (kind == FluxKind::RoeEntropyFix && lr <= -entropy_fix) {
      for (int j = 0; j < width; ++j) minus[j] = g[width - 1 - j];
      ghat[s] = reconstruct_interface(minus, cfg);
    } else {
      for (int j = 0; j < width; ++j) {
        plus[j] = 0.5 * (g[j] + lmax * w[j]);
        minus[width - 1 - j] = 0.5 * (g[j] - lmax * w[j]);
      }
      ghat[s] = reconstruct_interface(plus, cfg) + reconstruct_interface(minus, cfg);
    }
  }
  Vec<M> out{};
  for (int q = 0; q < M; ++q) {
    double acc = 0.0;
    for (int s = 0; s < M; ++s) acc += sys.right[q][s] * ghat[s];
    out[q] = acc;
  }
  return out;
}

/// Eigenvalues (u - c, u, [u,] u + c) of a single packed state.
template <int M>
inline Vec<M> cell_eigenvalues(const Vec<M>& u, double gamma) {
  const double vn = u[1] / u[0];
  const double c = std::sqrt(gamma * pressure<M>(u, gamma) / u[0]);
  Vec<M> l;
  l[0] = vn - c;
  for (int s = 1; s < M - 1; ++s) l[s] = vn;
  l[M - 1] = vn + c;
  return l;
}

/// Interface flux from K packed states centred on the interface.
template <int M>
Vec<M> char_interface_flux(std::span<const Vec<M>> states, const SchemeConfig& cfg,
                           FluxKind kind, double gamma, double entropy_fix_ratio = 0.05) {
  const int width = cfg.window_width();
  if (static_cast<int>(states.size()) != width) {
    throw Error("char_interface_flux: stencil size does not match the scheme width");
  }
  constexpr int kMaxWidth = 8;
  std::array<Vec<M>, kMaxWidth> f{};
  std::array<Vec<M>, kMaxWidth> lam{};
  for (int j = 0; j < width; ++j) {
    if (!(states[j][0] > 0.0 && pressure<M>(states[j], gamma) > 0.0)) {
      throw PositivityError("char_interface_flux: inadmissible stencil state");
    }
    f[j] = physical_flux<M>(states[j], gamma);
    lam[j] = cell_eigenvalues<M>(states[j], gamma);
  }
  const int i = width / 2 - 1;
  const RoeState roe = roe_average<M>(states[i], states[i + 1], gamma);
  const auto sys = eigensystem<M>(roe, gamma);
  const double eps = entropy_fix_ratio * (std::abs(roe.u) + roe.c);
  return characteristic_flux<M>(states.data(), f.data(), lam.data(), sys, cfg, kind, eps);
}

/// First-order local Lax-Friedrichs flux, used by the positivity fallback.
template <int M>
Vec<M> lax_friedrichs_flux(const Vec<M>& ul, const Vec<M>& ur, double gamma) {
  const auto fl = physical_flux<M>(ul, gamma);
  const auto fr = physical_flux<M>(ur, gamma);
  const double cl = std::sqrt(std::max(0.0, gamma * pressure<M>(ul, gamma) / ul[0]));
  const double cr = std::sqrt(std::max(0.0, gamma * pressure<M>(ur, gamma) / ur[0]));
  const double a = std::max(std::abs(ul[1] / ul[0]) + cl, std::abs(ur[1] / ur[0]) + cr);
  Vec<M> out;
  for (int q = 0; q < M; ++q) out[q] = 0.5 * (fl[q] + fr[q]) - 0.5 * a * (ur[q] - ul[q]);
  return out;
}

/// Computes all n + 1 interface fluxes of a line of n interior cells.
///
/// `cells` holds n + 2*ghosts packed states; face f lies between interior
/// cells f - 1 and f. Requires ghosts >= cfg.window_width() / 2.
template <int M>
void line_fluxes(std::span<const Vec<M>> cells, int ghosts, const SchemeConfig& cfg,
                 FluxKind kind, double gamma, std::span<Vec<M>> faces,
                 std::span<Vec<M>> scratch_flux, std::span<Vec<M>> scratch_lambda) {
  const int width = cfg.window_width();
  const int n = static_cast<int>(cells.size()) - 2 * ghosts;
  const int half = width / 2;
  if (ghosts < half) throw Error("line_fluxes: ghost layer narrower than the stencil");
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const auto& uj = cells[j];
    if (!(uj[0] > 0.0 && pressure<M>(uj, gamma) > 0.0)) {
      throw PositivityError("line_fluxes: non-positive density or pressure");
    }
    scratch_flux[j] = physical_flux<M>(uj, gamma);
    scratch_lambda[j] = cell_eigenvalues<M>(uj, gamma);
  }
  for (int face = 0; face <= n; ++face) {
    const int i = face - 1 + ghosts;
    const int start = i - (half - 1);
    const RoeState roe = roe_average<M>(cells[i], cells[i + 1], gamma);
    const auto sys = eigensystem<M>(roe, gamma);
    const double eps = 0.05 * (std::abs(roe.u) + roe.c);
    faces[face] = characteristic_flux<M>(cells.data() + start, scratch_flux.data() + start,
                                         scratch_lambda.data() + start, sys, cfg, kind, eps);
  }
}

}  // namespace tenom::euler
