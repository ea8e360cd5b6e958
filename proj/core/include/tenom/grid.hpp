#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace tenom {

/// Which conservation law a field carries.
enum class Equations { Advection, Euler };

/// Equation set plus its constants. Advection uses `speed`, Euler uses `gamma`.
struct Model {
  Equations equations = Equations::Advection;
  double gamma = 1.4;
  double speed = 1.0;

  int components(int dims) const {
    return equations == Equations::Advection ? 1 : dims + 2;
  }

  bool operator==(const Model&) const = default;
};

/// Uniform Cartesian grid in one or two dimensions.
///
/// Cell i on an axis spans [origin + i*dx, origin + (i+1)*dx], so the domain
/// endpoints are cell faces. Interior indices run over [0, n); ghost cells use
/// indices in [-n_ghost, 0) and [n, n + n_ghost).
struct UniformGrid {
  int dims = 1;
  std::array<double, 2> origin{0.0, 0.0};
  std::array<double, 2> dx{1.0, 1.0};
  std::array<int, 2> n{1, 1};
  int n_ghost = 3;

  static UniformGrid line(double x0, double x1, int nx, int n_ghost);
  static UniformGrid rect(double x0, double x1, double y0, double y1, int nx, int ny,
                          int n_ghost);

  double center(int axis, int i) const { return origin[axis] + (i + 0.5) * dx[axis]; }
  int ghosts(int axis) const { return axis < dims ? n_ghost : 0; }
  int extent(int axis) const { return n[axis] + 2 * ghosts(axis); }
  std::size_t interior_cells() const {
    return static_cast<std::size_t>(n[0]) * static_cast<std::size_t>(n[1]);
  }

  /// Throws tenom::Error when the invariants (dx > 0, n >= 2*n_ghost) fail.
  void validate() const;

  bool operator==(const UniformGrid&) const = default;
};

/// Cell-centred field with ghost layers, stored cell-major (components contiguous).
class Field {
 public:
  Field() = default;
  Field(const UniformGrid& grid, int components);

  const UniformGrid& grid() const { return grid_; }
  int components() const { return m_; }

  double* cell(int i, int j = 0) { return data_.data() + offset(i, j); }
  const double* cell(int i, int j = 0) const { return data_.data() + offset(i, j); }

  double& operator()(int i, int j, int c) { return data_[offset(i, j) + c]; }
  double operator()(int i, int j, int c) const { return data_[offset(i, j) + c]; }

  std::span<double> storage() { return data_; }
  std::span<const double> storage() const { return data_; }

  /// Interior values of one component in row-major (x fastest) order.
  std::vector<double> interior(int component) const;

  /// True when every interior value is finite.
  bool interior_finite() const;

 private:
  std::size_t offset(int i, int j) const {
    const auto ii = static_cast<std::size_t>(i + grid_.ghosts(0));
    const auto jj = static_cast<std::size_t>(j + grid_.ghosts(1));
    return (jj * static_cast<std::size_t>(grid_.extent(0)) + ii) *
           static_cast<std::size_t>(m_);
  }

  UniformGrid grid_{};
  int m_ = 0;
  std::vector<double> data_;
};

}  // namespace tenom
