#include "tenom/boundary.hpp"

#include <cmath>
#include <vector>

#include "tenom/error.hpp"

namespace tenom {

namespace {

constexpr std::array<std::string_view, 6> kKindNames{
    "periodic", "reflective", "fixed", "zero-gradient", "dmr-top", "dmr-bottom"};

std::vector<double> conserved(const euler::PrimState& q, const Model& model, int m) {
  if (model.equations == Equations::Advection) return {q.rho};
  const auto u = euler::prim_to_cons(q, model.gamma);
  if (m == 3) return {u.rho, u.mom[0], u.energy};
  return {u.rho, u.mom[0], u.mom[1], u.energy};
}

/// Fills ghost layers along one axis, including transverse ghost rows.
void fill_axis(Field& field, const BoundarySpec& bc, const Model& model, double t, int axis) {
  const auto& g = field.grid();
  const int m = field.components();
  const int ng = g.n_ghost;
  const int n = g.n[axis];
  const int other = 1 - axis;
  const int tlo = -g.ghosts(other);
  const int thi = g.n[other] + g.ghosts(other);
  // Momentum component normal to this axis; absent for scalar fields.
  const int normal = model.equations == Equations::Euler ? 1 + axis : -1;

  auto at = [&](int along, int across) -> double* {
    return axis == 0 ? field.cell(along, across) : field.cell(across, along);
  };

  for (int hi = 0; hi < 2; ++hi) {
    const auto& sc = bc.sides[2 * axis + hi];
    std::vector<double> fixed;
    if (sc.kind == BoundaryKind::Fixed) fixed = conserved(sc.state, model, m);
    std::vector<double> pre;
    std::vector<double> post;
    if (sc.kind == BoundaryKind::DmrTop || sc.kind == BoundaryKind::DmrBottom) {
      post = conserved(sc.state, model, m);
      if (sc.kind == BoundaryKind::DmrTop) pre = conserved(sc.alt, model, m);
    }
    const double xs = dmr_shock_x(t);
    for (int tr = tlo; tr < thi; ++tr) {
      const double x = g.center(0, tr);
      for (int k = 1; k <= ng; ++k) {
        const int ghost = hi ? n - 1 + k : -k;
        const int mirror = hi ? n - k : k - 1;
        const int edge = hi ? n - 1 : 0;
        const int wrap = hi ? k - 1 : n - k;
        double* dst = at(ghost, tr);
        const double* src = nullptr;
        bool reflect = false;
        switch (sc.kind) {
          case BoundaryKind::Periodic: src = at(wrap, tr); break;
          case BoundaryKind::ZeroGradient: src = at(edge, tr); break;
          case BoundaryKind::Reflective:
            src = at(mirror, tr);
            reflect = true;
            break;
          case BoundaryKind::Fixed: src = fixed.data(); break;
          case BoundaryKind::DmrTop: src = x < xs ? post.data() : pre.data(); break;
          case BoundaryKind::DmrBottom:
            if (x < sc.split) {
              src = post.data();
            } else {
              src = at(mirror, tr);
              reflect = true;
            }
            break;
        }
        for (int c = 0; c < m; ++c) dst[c] = src[c];
        if (reflect && normal >= 0) dst[normal] = -dst[normal];
      }
    }
  }
}

}  // namespace

BoundarySpec BoundarySpec::uniform(BoundaryKind kind) {
  BoundarySpec b;
  for (auto& s : b.sides) s.kind = kind;
  return b;
}

void BoundarySpec::validate(int dims) const {
  for (int axis = 0; axis < dims; ++axis) {
    const bool lo = sides[2 * axis].kind == BoundaryKind::Periodic;
    const bool hi = sides[2 * axis + 1].kind == BoundaryKind::Periodic;
    if (lo != hi) throw Error("boundary: periodic sides must be paired on axis " +
                              std::to_string(axis));
  }
  for (int s = 0; s < 2 * dims; ++s) {
    const auto kind = sides[s].kind;
    if (kind == BoundaryKind::DmrTop && s != static_cast<int>(Side::YHi)) {
      throw Error("boundary: dmr-top is only valid on the upper y side");
    }
    if (kind == BoundaryKind::DmrBottom && s != static_cast<int>(Side::YLo)) {
      throw Error("boundary: dmr-bottom is only valid on the lower y side");
    }
  }
}

std::string_view to_string(BoundaryKind kind) { return kKindNames[static_cast<int>(kind)]; }

BoundaryKind boundary_kind_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<BoundaryKind>(i);
  }
  throw Error("boundary: unknown kind '" + std::string(name) + "'");
}

double dmr_shock_x(double t) { return 1.0 / 6.0 + (1.0 + 20.0 * t) / std::sqrt(3.0); }

void fill_ghosts(Field& field, const BoundarySpec& bc, const Model& model, double t) {
  const auto& g = field.grid();
  bc.validate(g.dims);
  if (model.components(g.dims) != field.components()) {
    throw Error("fill_ghosts: field component count does not match the model");
  }
  // x-ghosts first, then y-ghosts over full rows so corners take y values.
  fill_axis(field, bc, model, t, 0);
  if (g.dims == 2) fill_axis(field, bc, model, t, 1);
}

}  // namespace tenom
