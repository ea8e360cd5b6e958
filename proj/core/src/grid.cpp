#include "tenom/grid.hpp"

#include <cmath>
#include <string>

#include "tenom/error.hpp"

namespace tenom {

UniformGrid UniformGrid::line(double x0, double x1, int nx, int n_ghost) {
  UniformGrid g;
  g.dims = 1;
  g.origin = {x0, 0.0};
  g.n = {nx, 1};
  g.dx = {(x1 - x0) / nx, 1.0};
  g.n_ghost = n_ghost;
  g.validate();
  return g;
}

UniformGrid UniformGrid::rect(double x0, double x1, double y0, double y1, int nx, int ny,
                              int n_ghost) {
  UniformGrid g;
  g.dims = 2;
  g.origin = {x0, y0};
  g.n = {nx, ny};
  g.dx = {(x1 - x0) / nx, (y1 - y0) / ny};
  g.n_ghost = n_ghost;
  g.validate();
  return g;
}

void UniformGrid::validate() const {
  if (dims != 1 && dims != 2) throw Error("grid: dims must be 1 or 2");
  if (n_ghost < 1) throw Error("grid: n_ghost must be positive");
  for (int a = 0; a < dims; ++a) {
    if (!(dx[a] > 0.0) || !std::isfinite(dx[a])) {
      throw Error("grid: cell width must be positive on axis " + std::to_string(a));
    }
    if (n[a] < 2 * n_ghost) {
      throw Error("grid: axis " + std::to_string(a) + " has " + std::to_string(n[a]) +
                  " cells, fewer than twice the ghost width");
    }
  }
  if (dims == 1 && n[1] != 1) throw Error("grid: 1D grid must have n[1] == 1");
}

Field::Field(const UniformGrid& grid, int components) : grid_(grid), m_(components) {
  grid_.validate();
  if (components < 1) throw Error("field: component count must be positive");
  data_.assign(static_cast<std::size_t>(grid_.extent(0)) *
                   static_cast<std::size_t>(grid_.extent(1)) *
                   static_cast<std::size_t>(m_),
               0.0);
}

std::vector<double> Field::interior(int component) const {
  std::vector<double> out;
  out.reserve(grid_.interior_cells());
  for (int j = 0; j < grid_.n[1]; ++j) {
    for (int i = 0; i < grid_.n[0]; ++i) out.push_back((*this)(i, j, component));
  }
  return out;
}

bool Field::interior_finite() const {
  for (int j = 0; j < grid_.n[1]; ++j) {
    for (int i = 0; i < grid_.n[0]; ++i) {
      const double* u = cell(i, j);
      for (int c = 0; c < m_; ++c) {
        if (!std::isfinite(u[c])) return false;
      }
    }
  }
  return true;
}

}  // namespace tenom
