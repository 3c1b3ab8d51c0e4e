#pragma once

#include "hs/explicit_engine.hpp"
#include "hs/group_element.hpp"
#include "hs/periodic_field.hpp"

namespace hs {

// A pair of fields (f1, f2) in L2(S; R^2). On the unit pseudosphere
// int (f1^2 - f2^2) = 1; tangent vectors use the same type.
struct SpherePoint {
  GridFunction f1;
  GridFunction f2;

  bool on_sphere(double tol = 1e-9) const;
  // f1 > 0 and f1^2 - f2^2 > 0 at every node.
  bool in_u() const;
  // min over nodes of f1^2 - f2^2.
  double min_gap() const;
  // min over nodes of f1 - |f2|; U is where this is positive. Unlike
  // min_gap it changes sign where f2 = 0 and f1 has a simple zero.
  double boundary_margin() const;
};

// Indefinite pairing int (X1 Y1 - X2 Y2) dx.
double pairing(const SpherePoint& X, const SpherePoint& Y);

// Geodesic with f(0) = (1, 0), f_t(0) = (u0x, rho0) / 2, where
// c = <<f_t(0), f_t(0)>> selects the trigonometric, linear or hyperbolic
// branch.
SpherePoint geodesic(const InitialData& d, double t);
SpherePoint geodesic_velocity(const InitialData& d, double t);

// sqrt(phi_x) (cosh(alpha/2), sinh(alpha/2)).
SpherePoint phi_iso(const GroupElement& g);

// (int_0^x (f1^2 - f2^2), 2 artanh(f2 / f1)); throws NotInU outside U.
GroupElement phi_iso_inverse(const SpherePoint& f);

// Differential of phi_iso at g applied to (U1, U2).
SpherePoint phi_iso_tangent(const GroupElement& g, const GridFunction& U1,
                            const GridFunction& U2);

// Pointwise hyperbolic rotation [[cosh b, -sinh b], [-sinh b, cosh b]].
SpherePoint lorentz(const GridFunction& beta, const SpherePoint& f);
SpherePoint lorentz(double beta, const SpherePoint& f);

// Representative of the orbit of f under constant Lorentz rotations chosen
// so that its group coordinates satisfy int alpha phi_x dx = 0.
SpherePoint quotient_representative(const SpherePoint& f);

struct BoundaryScan {
  double horizon = 10.0;  // latest time examined
  double step = 1e-3;     // scan spacing before bisection
};

// First t > 0 where geodesic(d, .) leaves U (boundary_margin = 0), by a
// forward scan followed by bisection; +inf if none up to the horizon.
// This is where min_x (f1^2 - f2^2) first vanishes.
double boundary_hit_time(const InitialData& d, BoundaryScan scan = {});

}  // namespace hs
