#include "tenom/integrator.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>
#include <utility>

namespace tenom {

namespace {

constexpr int kFallbackRounds = 3;

template <int M>
void to_sweep_order(euler::Vec<M>& v, int axis) {
  if constexpr (M == 4) {
    if (axis == 1) std::swap(v[1], v[2]);
  }
}

std::size_t x_face(const UniformGrid& g, int f, int j) {
  return static_cast<std::size_t>(j) * static_cast<std::size_t>(g.n[0] + 1) +
         static_cast<std::size_t>(f);
}

std::size_t y_face(const UniformGrid& g, int i, int f) {
  return static_cast<std::size_t>(f) * static_cast<std::size_t>(g.n[0]) +
         static_cast<std::size_t>(i);
}

template <int M>
void euler_sweep(const Field& v, const Problem& p, int axis, std::vector<double>& faces) {
  const auto& g = v.grid();
  const int ng = g.n_ghost;
  const int n = g.n[axis];
  const int across = g.n[1 - axis];
  std::vector<euler::Vec<M>> cells(static_cast<std::size_t>(n + 2 * ng));
  std::vector<euler::Vec<M>> flux(cells.size());
  std::vector<euler::Vec<M>> lambda(cells.size());
  std::vector<euler::Vec<M>> out(static_cast<std::size_t>(n + 1));
  for (int tr = 0; tr < across; ++tr) {
    for (int k = -ng; k < n + ng; ++k) {
      const double* src = axis == 0 ? v.cell(k, tr) : v.cell(tr, k);
      auto& c = cells[static_cast<std::size_t>(k + ng)];
      for (int q = 0; q < M; ++q) c[q] = src[q];
      to_sweep_order<M>(c, axis);
    }
    euler::line_fluxes<M>(cells, ng, p.scheme, p.flux, p.model.gamma, out, flux, lambda);
    for (int f = 0; f <= n; ++f) {
      auto fv = out[static_cast<std::size_t>(f)];
      to_sweep_order<M>(fv, axis);
      const std::size_t idx = axis == 0 ? x_face(g, f, tr) : y_face(g, tr, f);
      for (int q = 0; q < M; ++q) faces[idx * M + q] = fv[q];
    }
  }
}

void scalar_sweep(const Field& v, const Problem& p, std::vector<double>& faces) {
  const auto& g = v.grid();
  const int n = g.n[0];
  const int width = p.scheme.window_width();
  const int half = width / 2;
  const double a = p.model.speed;
  std::array<double, 8> w{};
  for (int f = 0; f <= n; ++f) {
    const int start = f - 1 - (half - 1);
    if (a >= 0.0) {
      for (int j = 0; j < width; ++j) w[j] = a * v(start + j, 0, 0);
    } else {
      for (int j = 0; j < width; ++j) w[j] = a * v(start + width - 1 - j, 0, 0);
    }
    faces[static_cast<std::size_t>(f)] = reconstruct_interface(w.data(), p.scheme);
  }
}

template <int M>
void lf_face(const Field& v, const Problem& p, int axis, int i, int j, std::vector<double>& faces) {
  // Face on the low side of cell (i, j) along `axis`.
  const auto& g = v.grid();
  const double* lo = axis == 0 ? v.cell(i - 1, j) : v.cell(i, j - 1);
  const double* hi = v.cell(i, j);
  euler::Vec<M> ul;
  euler::Vec<M> ur;
  for (int q = 0; q < M; ++q) {
    ul[q] = lo[q];
    ur[q] = hi[q];
  }
  to_sweep_order<M>(ul, axis);
  to_sweep_order<M>(ur, axis);
  auto f = euler::lax_friedrichs_flux<M>(ul, ur, p.model.gamma);
  to_sweep_order<M>(f, axis);
  const std::size_t idx = axis == 0 ? x_face(g, i, j) : y_face(g, i, j);
  for (int q = 0; q < M; ++q) faces[idx * M + q] = f[q];
}

}  // namespace

void Problem::validate() const {
  grid.validate();
  bc.validate(grid.dims);
  scheme.validate();
  if (grid.n_ghost < scheme.ghost_cells()) {
    throw Error("problem: ghost layer of " + std::to_string(grid.n_ghost) + " is narrower than the " +
                std::to_string(scheme.ghost_cells()) + " cells the scheme needs");
  }
  if (model.equations == Equations::Advection) {
    if (grid.dims != 1) throw Error("problem: scalar advection is one-dimensional");
    if (source.gravity) throw Error("problem: gravity needs the Euler equations");
    if (!std::isfinite(model.speed)) throw Error("problem: wave speed must be finite");
  } else if (!(model.gamma > 1.0)) {
    throw Error("problem: gamma must exceed 1");
  }
  if (source.gravity && (source.axis < 0 || source.axis >= grid.dims)) {
    throw Error("problem: gravity axis out of range");
  }
}

double compute_dt(const Field& u, const Model& model, double cfl) {
  if (!(cfl > 0.0)) throw Error("compute_dt: cfl must be positive");
  const auto& g = u.grid();
  if (model.equations == Equations::Advection) {
    const double a = std::abs(model.speed);
    if (!(a > 0.0) || !std::isfinite(a)) throw Error("compute_dt: wave speed must be non-zero");
    return cfl * g.dx[0] / a;
  }
  const int m = u.components();
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i) {
      const double* c = u.cell(i, j);
      const double rho = c[0];
      double ke = 0.0;
      for (int a = 0; a < g.dims; ++a) ke += c[1 + a] * c[1 + a];
      const double p = (model.gamma - 1.0) * (c[m - 1] - 0.5 * ke / rho);
      if (!(rho > 0.0 && p > 0.0) || !std::isfinite(rho) || !std::isfinite(p)) {
        throw PositivityError("compute_dt: inadmissible state in cell (" + std::to_string(i) +
                              ", " + std::to_string(j) + ")");
      }
      const double c_s = std::sqrt(model.gamma * p / rho);
      for (int a = 0; a < g.dims; ++a) {
        const double speed = std::abs(c[1 + a] / rho) + c_s;
        best = std::min(best, g.dx[a] / speed);
      }
    }
  }
  if (!std::isfinite(best)) throw Error("compute_dt: non-finite signal speed");
  return cfl * best;
}

Solver::Solver(Problem problem, Field initial, double t0)
    : problem_(std::move(problem)), u_(std::move(initial)), t_(t0) {
  problem_.validate();
  if (!(u_.grid() == problem_.grid)) throw Error("solver: field grid differs from the problem");
  if (u_.components() != problem_.model.components(problem_.grid.dims)) {
    throw Error("solver: field component count does not match the model");
  }
  if (!u_.interior_finite()) throw Error("solver: initial field is not finite");
  const auto& g = problem_.grid;
  const int m = u_.components();
  faces_.x.assign(static_cast<std::size_t>(g.n[0] + 1) * g.n[1] * m, 0.0);
  if (g.dims == 2) faces_.y.assign(static_cast<std::size_t>(g.n[1] + 1) * g.n[0] * m, 0.0);
  tend_ = Field(g, m);
  u1_ = Field(g, m);
  u2_ = Field(g, m);
  w_ = Field(g, m);
}

double Solver::compute_dt(double cfl) const { return tenom::compute_dt(u_, problem_.model, cfl); }

void Solver::compute_faces(Field& v, double t) {
  fill_ghosts(v, problem_.bc, problem_.model, t);
  const auto& g = problem_.grid;
  if (problem_.model.equations == Equations::Advection) {
    scalar_sweep(v, problem_, faces_.x);
    return;
  }
  if (g.dims == 1) {
    euler_sweep<3>(v, problem_, 0, faces_.x);
  } else {
    euler_sweep<4>(v, problem_, 0, faces_.x);
    euler_sweep<4>(v, problem_, 1, faces_.y);
  }
}

void Solver::divergence(const Field& v, Field& out) const {
  const auto& g = problem_.grid;
  const int m = v.components();
  const double rdx = 1.0 / g.dx[0];
  const double rdy = 1.0 / g.dx[1];
  const auto& src = problem_.source;
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i) {
      double* o = out.cell(i, j);
      const double* fl = faces_.x.data() + x_face(g, i, j) * m;
      const double* fr = faces_.x.data() + x_face(g, i + 1, j) * m;
      for (int q = 0; q < m; ++q) o[q] = -(fr[q] - fl[q]) * rdx;
      if (g.dims == 2) {
        const double* fb = faces_.y.data() + y_face(g, i, j) * m;
        const double* ft = faces_.y.data() + y_face(g, i, j + 1) * m;
        for (int q = 0; q < m; ++q) o[q] -= (ft[q] - fb[q]) * rdy;
      }
      if (src.gravity) {
        const double* c = v.cell(i, j);
        o[1 + src.axis] += c[0] * src.g;
        o[m - 1] += c[1 + src.axis] * src.g;
      }
    }
  }
}

void Solver::lf_cell_faces(const Field& v, int i, int j) {
  const auto& g = problem_.grid;
  if (g.dims == 1) {
    lf_face<3>(v, problem_, 0, i, j, faces_.x);
    lf_face<3>(v, problem_, 0, i + 1, j, faces_.x);
    return;
  }
  lf_face<4>(v, problem_, 0, i, j, faces_.x);
  lf_face<4>(v, problem_, 0, i + 1, j, faces_.x);
  lf_face<4>(v, problem_, 1, i, j, faces_.y);
  lf_face<4>(v, problem_, 1, i, j + 1, faces_.y);
}

bool Solver::admissible(const double* u) const {
  const int m = u_.components();
  for (int q = 0; q < m; ++q) {
    if (!std::isfinite(u[q])) return false;
  }
  if (problem_.model.equations == Equations::Advection) return true;
  double ke = 0.0;
  for (int a = 0; a < problem_.grid.dims; ++a) ke += u[1 + a] * u[1 + a];
  const double p = (problem_.model.gamma - 1.0) * (u[m - 1] - 0.5 * ke / u[0]);
  return u[0] > 0.0 && p > 0.0;
}

long Solver::first_bad_cell(const Field& w) const {
  const auto& g = problem_.grid;
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i) {
      if (!admissible(w.cell(i, j))) return static_cast<long>(j) * g.n[0] + i;
    }
  }
  return -1;
}

void Solver::forward_euler(Field& v, double t, double dt, double weight, Field& out) {
  const auto& g = problem_.grid;
  const int m = v.components();
  compute_faces(v, t);
  std::vector<long> bad;
  for (int round = 0;; ++round) {
    divergence(v, tend_);
    auto o = out.storage();
    const auto in = v.storage();
    const auto l = tend_.storage();
    for (std::size_t k = 0; k < o.size(); ++k) o[k] = in[k] + dt * l[k];

    if (first_bad_cell(out) < 0) break;
    bad.clear();
    for (int j = 0; j < g.n[1]; ++j) {
      for (int i = 0; i < g.n[0]; ++i) {
        if (!admissible(out.cell(i, j))) bad.push_back(static_cast<long>(j) * g.n[0] + i);
      }
    }
    const long b0 = bad.front();
    const double bx = g.center(0, static_cast<int>(b0 % g.n[0]));
    const double by = g.dims == 2 ? g.center(1, static_cast<int>(b0 / g.n[0])) : 0.0;
    if (problem_.model.equations == Equations::Advection) {
      throw InstabilityError("non-finite state", steps_ + 1, bx, by);
    }
    if (round == kFallbackRounds) {
      throw InstabilityError("inadmissible state persists after first-order fallback",
                             steps_ + 1, bx, by);
    }
    fallback_ += static_cast<long>(bad.size());
    // Widen the first-order region by one cell per failed round.
    for (const long b : bad) {
      const int bi = static_cast<int>(b % g.n[0]);
      const int bj = static_cast<int>(b / g.n[0]);
      const int rj = g.dims == 2 ? round : 0;
      for (int jj = std::max(0, bj - rj); jj <= std::min(g.n[1] - 1, bj + rj); ++jj) {
        for (int ii = std::max(0, bi - round); ii <= std::min(g.n[0] - 1, bi + round); ++ii) {
          lf_cell_faces(v, ii, jj);
        }
      }
    }
  }
  double net = 0.0;
  for (int j = 0; j < g.n[1]; ++j) {
    net += (faces_.x[x_face(g, g.n[0], j) * m] - faces_.x[x_face(g, 0, j) * m]) * g.dx[1];
  }
  if (g.dims == 2) {
    for (int i = 0; i < g.n[0]; ++i) {
      net += (faces_.y[y_face(g, i, g.n[1]) * m] - faces_.y[y_face(g, i, 0) * m]) * g.dx[0];
    }
  }
  outflow_ += weight * dt * net;
}

Field Solver::rhs(const Field& u, double t) {
  if (!(u.grid() == problem_.grid) || u.components() != u_.components()) {
    throw Error("rhs: field does not match the problem");
  }
  Field v = u;
  compute_faces(v, t);
  Field out(problem_.grid, u.components());
  divergence(v, out);
  return out;
}

double Solver::step(double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw Error("step: dt must be positive and finite");
  forward_euler(u_, t_, dt, 1.0 / 6.0, u1_);
  forward_euler(u1_, t_ + dt, dt, 1.0 / 6.0, w_);
  {
    auto o = u2_.storage();
    const auto u = u_.storage();
    const auto w = w_.storage();
    for (std::size_t k = 0; k < o.size(); ++k) o[k] = 0.75 * u[k] + 0.25 * w[k];
  }
  forward_euler(u2_, t_ + 0.5 * dt, dt, 2.0 / 3.0, w_);
  {
    auto u = u_.storage();
    const auto w = w_.storage();
    for (std::size_t k = 0; k < u.size(); ++k) u[k] = (1.0 / 3.0) * u[k] + (2.0 / 3.0) * w[k];
  }
  ++steps_;
  t_ += dt;
  return dt;
}

void Solver::advance(const TimeConfig& tc, const std::function<void(const Solver&)>& on_step) {
  if (!(tc.cfl > 0.0)) throw Error("advance: cfl must be positive");
  if (tc.dt_override && !(*tc.dt_override > 0.0)) throw Error("advance: dt override must be positive");
  const auto& s = problem_.scheme;
  if (!tc.dt_override && s.limiter == limiter::LimiterKind::MonotonicityPreserving &&
      tc.cfl > 1.0 / (1.0 + s.mp.alpha) + 1e-12) {
    throw Error("advance: cfl exceeds 1/(1+alpha) required by the MP limiter");
  }
  while (t_ < tc.t_end) {
    if (steps_ >= tc.max_steps) throw Error("advance: step limit reached before t_end");
    double dt = tc.dt_override ? *tc.dt_override : compute_dt(tc.cfl);
    const double remaining = tc.t_end - t_;
    // Relative slack keeps accumulated round-off from adding a sliver step.
    const bool last = dt * (1.0 + 1e-10) >= remaining;
    if (last) dt = remaining;
    step(dt);
    if (last) t_ = tc.t_end;
    if (on_step) on_step(*this);
  }
}

}  // namespace tenom
