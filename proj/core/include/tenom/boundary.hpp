#pragma once

#include <array>
#include <string>
#include <string_view>

#include "tenom/euler.hpp"
#include "tenom/grid.hpp"

namespace tenom {

enum class BoundaryKind { Periodic, Reflective, Fixed, ZeroGradient, DmrTop, DmrBottom };

enum class Side { XLo = 0, XHi = 1, YLo = 2, YHi = 3 };

/// One side of the domain.
///
/// Fixed writes `state` converted to conserved variables (its density for
/// scalar fields). DmrTop writes `state` where the cell centre lies left of
/// the moving shock x_s(t) = 1/6 + (1 + 20 t)/sqrt(3) and `alt` elsewhere.
/// DmrBottom writes `state` for x < `split` and reflects otherwise.
struct SideCondition {
  BoundaryKind kind = BoundaryKind::Periodic;
  euler::PrimState state{};
  euler::PrimState alt{};
  double split = 1.0 / 6.0;

  bool operator==(const SideCondition&) const = default;
};

struct BoundarySpec {
  std::array<SideCondition, 4> sides{};

  SideCondition& operator[](Side s) { return sides[static_cast<int>(s)]; }
  const SideCondition& operator[](Side s) const { return sides[static_cast<int>(s)]; }

  /// Same kind on every side.
  static BoundarySpec uniform(BoundaryKind kind);

  /// Throws tenom::Error when periodic sides are unpaired or a kind does not
  /// fit the side it is placed on.
  void validate(int dims) const;

  bool operator==(const BoundarySpec&) const = default;
};

std::string_view to_string(BoundaryKind kind);
BoundaryKind boundary_kind_from_string(std::string_view name);

/// Shock position along the top boundary of the double Mach reflection.
double dmr_shock_x(double t);

/// Populates every ghost cell of `field`; interior values are untouched.
void fill_ghosts(Field& field, const BoundarySpec& bc, const Model& model, double t);

}  // namespace tenom
