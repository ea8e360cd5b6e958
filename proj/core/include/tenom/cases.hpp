#pragma once

// Registry of the benchmark problems and their reference recipes.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "tenom/boundary.hpp"
#include "tenom/integrator.hpp"

namespace tenom::bench {

enum class ReferenceKind { None, Exact, FineGrid };

/// Exact: periodic translation of the initial data. FineGrid: WENO-JS5 at
/// `n` cells with `flux`, same domain, boundaries and end time.
struct ReferenceRecipe {
  ReferenceKind kind = ReferenceKind::None;
  int n = 0;
  euler::FluxKind flux = euler::FluxKind::Rusanov;

  bool operator==(const ReferenceRecipe&) const = default;
};

/// One benchmark. The initial condition is selected by `name`.
struct CaseSpec {
  std::string name;
  int dims = 1;
  std::array<double, 4> domain{0.0, 1.0, 0.0, 1.0};  ///< x0, x1, y0, y1
  std::array<int, 2> resolution{100, 1};
  Equations equations = Equations::Euler;
  double gamma = 1.4;
  double speed = 1.0;
  BoundarySpec bc{};
  SourceSpec source{};
  euler::FluxKind flux = euler::FluxKind::Rusanov;
  double t_end = 1.0;
  ReferenceRecipe reference{};

  Model model() const { return {equations, gamma, speed}; }
  bool operator==(const CaseSpec&) const = default;
};

const std::vector<std::string>& case_names();

/// Throws tenom::Error for unknown names.
CaseSpec make_case(std::string_view name);

std::string case_to_json(const CaseSpec& spec);
CaseSpec case_from_json(std::string_view text);

/// Grid at the case resolution, or at an explicit one.
UniformGrid case_grid(const CaseSpec& spec, int n_ghost);
UniformGrid case_grid(const CaseSpec& spec, int nx, int ny, int n_ghost);

/// Conserved initial state sampled at cell centres.
Field initial_field(const CaseSpec& spec, const UniformGrid& grid);

/// Initial scalar profile u0(x) of the advection cases.
double advection_profile(std::string_view name, double x);

/// Exact interior solution for ReferenceKind::Exact cases at time t.
std::vector<double> exact_solution(const CaseSpec& spec, const UniformGrid& grid, double t);

/// Problem ready for the solver, with n_ghost sized for the scheme.
Problem make_problem(const CaseSpec& spec, const SchemeConfig& scheme, int nx, int ny);

}  // namespace tenom::bench
