#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "tenom/boundary.hpp"
#include "tenom/error.hpp"
#include "tenom/euler.hpp"
#include "tenom/grid.hpp"
#include "tenom/scheme.hpp"

namespace tenom {

struct TimeConfig {
  double cfl = 0.4;
  double t_end = 1.0;
  long max_steps = 10'000'000;
  std::optional<double> dt_override{};

  bool operator==(const TimeConfig&) const = default;
};

/// Optional body force along one axis: adds rho g to that momentum and
/// rho v_axis g to the energy.
struct SourceSpec {
  bool gravity = false;
  double g = 1.0;
  int axis = 1;

  bool operator==(const SourceSpec&) const = default;
};

/// Everything that defines a semi-discretisation except the state.
struct Problem {
  UniformGrid grid{};
  Model model{};
  BoundarySpec bc{};
  SchemeConfig scheme{};
  euler::FluxKind flux = euler::FluxKind::Rusanov;
  SourceSpec source{};

  void validate() const;
};

/// cfl * min over cells and axes of dx / (|u_axis| + c); cfl * dx / |a| for
/// scalar advection. Throws on non-finite or inadmissible states.
double compute_dt(const Field& u, const Model& model, double cfl);

namespace detail {

inline bool finite(double x) { return std::isfinite(x); }
inline bool finite(const std::complex<double>& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace detail

/// One Shu-Osher SSP-RK3 step for a vector-valued ODE u' = rhs(u).
template <class T, class Rhs>
std::vector<T> ssp_rk3_step(const std::vector<T>& u, double dt, Rhs&& rhs) {
  if (!(dt > 0.0)) throw Error("ssp_rk3_step: dt must be positive");
  const std::size_t n = u.size();
  auto check = [](const std::vector<T>& v) {
    for (const auto& x : v) {
      if (!detail::finite(x)) throw Error("ssp_rk3_step: non-finite intermediate state");
    }
  };
  std::vector<T> l = rhs(u);
  std::vector<T> u1(n);
  for (std::size_t i = 0; i < n; ++i) u1[i] = u[i] + dt * l[i];
  check(u1);
  l = rhs(u1);
  std::vector<T> u2(n);
  // Stages are written as u + w (v - u) so fixed points of rhs stay bit-exact.
  for (std::size_t i = 0; i < n; ++i) u2[i] = u[i] + 0.25 * ((u1[i] + dt * l[i]) - u[i]);
  check(u2);
  l = rhs(u2);
  std::vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = u[i] + (2.0 / 3.0) * ((u2[i] + dt * l[i]) - u[i]);
  }
  check(out);
  return out;
}

/// Method-of-lines solver: flux-difference divergence, optional source, and
/// SSP-RK3 with a first-order fallback for inadmissible stage states.
class Solver {
 public:
  Solver(Problem problem, Field initial, double t0 = 0.0);

  const Problem& problem() const { return problem_; }
  const Field& state() const { return u_; }
  double time() const { return t_; }
  long steps() const { return steps_; }

  /// Cells whose stage update was redone with Lax-Friedrichs face fluxes.
  long fallback_activations() const { return fallback_; }

  /// Time-integrated net mass that left through the domain boundary.
  double boundary_mass_outflow() const { return outflow_; }

  double compute_dt(double cfl) const;

  /// Tendency L(u) at time t on the interior; ghosts of the result are zero.
  Field rhs(const Field& u, double t);

  /// Advances by exactly dt and returns it.
  double step(double dt);

  /// Steps until t_end, recomputing dt from the current state each step.
  void advance(const TimeConfig& tc, const std::function<void(const Solver&)>& on_step = {});

 private:
  struct Faces {
    std::vector<double> x;  ///< (nx + 1) * ny faces, row-major
    std::vector<double> y;  ///< nx * (ny + 1) faces, face-row-major
  };

  void compute_faces(Field& v, double t);
  void divergence(const Field& v, Field& out) const;
  void lf_cell_faces(const Field& v, int i, int j);
  /// out = v + dt L(v); `weight` is the stage's share of the final update.
  void forward_euler(Field& v, double t, double dt, double weight, Field& out);
  long first_bad_cell(const Field& w) const;
  bool admissible(const double* u) const;

  Problem problem_;
  Field u_;
  double t_ = 0.0;
  long steps_ = 0;
  long fallback_ = 0;
  double outflow_ = 0.0;

  Faces faces_;
  Field stage_in_;
  Field tend_;
  Field u1_;
  Field u2_;
  Field w_;
  std::vector<double> line_u_;
  std::vector<double> line_f_;
  std::vector<double> line_l_;
  std::vector<double> line_faces_;
};

}  // namespace tenom
