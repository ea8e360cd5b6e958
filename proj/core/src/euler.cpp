#include "tenom/euler.hpp"

namespace tenom::euler {

ConsState prim_to_cons(const PrimState& q, double gamma) {
  if (!(q.rho > 0.0) || !(q.p > 0.0)) {
    throw PositivityError("prim_to_cons: density and pressure must be positive");
  }
  ConsState u;
  u.rho = q.rho;
  u.mom = {q.rho * q.vel[0], q.rho * q.vel[1]};
  u.energy = q.p / (gamma - 1.0) +
             0.5 * q.rho * (q.vel[0] * q.vel[0] + q.vel[1] * q.vel[1]);
  return u;
}

PrimState cons_to_prim(const ConsState& u, double gamma) {
  if (!(u.rho > 0.0)) throw PositivityError("cons_to_prim: density must be positive");
  PrimState q;
  q.rho = u.rho;
  q.vel = {u.mom[0] / u.rho, u.mom[1] / u.rho};
  q.p = (gamma - 1.0) *
        (u.energy - 0.5 * (u.mom[0] * u.mom[0] + u.mom[1] * u.mom[1]) / u.rho);
  if (!(q.p > 0.0)) throw PositivityError("cons_to_prim: pressure must be positive");
  return q;
}

RoeState roe_average(const PrimState& left, const PrimState& right, double gamma) {
  return roe_average<4>(pack<4>(prim_to_cons(left, gamma)), pack<4>(prim_to_cons(right, gamma)),
                        gamma);
}

}  // namespace tenom::euler
