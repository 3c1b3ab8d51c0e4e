#pragma once

#include <vector>

#include "hs/explicit_engine.hpp"
#include "hs/group_geometry.hpp"
#include "hs/periodic_field.hpp"

namespace hs {

// Hypotheses of the global weak geodesic flow, evaluated on the data as
// given (no rescaling): (A) c = -1 to 1e-9, (B) |rho0| <= u0x + 2 at every
// node up to 1e-12.
struct AdmissibilityReport {
  double c_value = 0.0;
  bool condition_A = false;
  bool condition_B = false;
  std::vector<int> violating_nodes;  // nodes failing (B)

  bool admissible() const { return condition_A && condition_B; }
};

AdmissibilityReport admissibility(const InitialData& d);

// Closed-form weak geodesic at time t, built from
// f1 = cosh t + (u0x / 2) sinh t, f2 = (rho0 / 2) sinh t.
// Everything is evaluated through the characteristic factors
// w+- = f1 +- f2 = (e^t (1 + s+-) + e^-t (1 - s+-)) / 2, s+- = (u0x +- rho0) / 2,
// so that phi_x = w+ w- keeps its relative accuracy where it is tiny.
struct WeakState {
  double t = 0.0;
  GridFunction f1, f2;
  GridFunction w_plus, w_minus;      // f1 + f2, f1 - f2
  GridFunction w_plus_t, w_minus_t;  // their time derivatives
  GridFunction phi, phi_x, alpha;
  GridFunction phi_t, phi_tx, alpha_t;
};

// Throws NotAdmissible unless both hypotheses hold; t >= 0.
WeakState weak_state(const InitialData& d, double t);

// int (phi_tx^2 / phi_x - alpha_t^2 phi_x) over nodes with phi_x >= 1e-14.
// The integrand is evaluated as the equal product 4 w+_t w-_t: the two
// terms separately are of size e^{2t} and cancel.
double energy(const WeakState& s);

// Second time derivatives (phi_tt, alpha_tt) of the closed forms.
struct WeakAcceleration {
  GridFunction phi_tt, alpha_tt;
};

WeakAcceleration weak_acceleration(const InitialData& d, double t);

enum class Differencing { kClosedForm, kCentral };

// sup-norm of (phi_tt, alpha_tt) - Gamma((phi_t, alpha_t), (phi_t, alpha_t))
// at the state's base. kCentral obtains the second derivatives by central
// differences of phi_t, alpha_t with step dt.
double geodesic_residual(const InitialData& d, double t,
                         Differencing mode = Differencing::kCentral,
                         double dt = 1e-4);

// Eulerian (u, rho)(t, y) of the conservative weak solution:
// u(t, phi(t, x)) = phi_t(t, x), rho(t, phi(t, x)) = alpha_t(t, x).
EulerianFields weak_solution(const InitialData& d, double t);

// L2 norms of the residuals of
//   u_t + u u_x - 1/2 (int_0^y (u_x^2 - rho^2) - y int (u_x^2 - rho^2)),
//   rho_t + (u rho)_x,
// with u_t, rho_t by central differences of step dt at fixed y.
struct WeakResidual {
  double momentum = 0.0;
  double density = 0.0;
};

WeakResidual weak_form_residual(const InitialData& d, double t,
                                double dt = 1e-4);

// u_x(t, phi(t, x)) at the Lagrangian nodes. Admissible data use the weak
// flow for all t >= 0; otherwise the classical solution is used and
// BlowupReached is thrown from the breaking time on (t in original units).
GridFunction lagrangian_snapshot(const InitialData& d, double t);

}  // namespace hs
