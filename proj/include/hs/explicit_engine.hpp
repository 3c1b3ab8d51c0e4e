#pragma once

#include <limits>

#include "hs/group_element.hpp"
#include "hs/periodic_field.hpp"

namespace hs {

// Initial data (u0, rho0) with u0(0) = 0. The slope u0x is kept next to u0
// because every closed form is written in terms of it.
class InitialData {
 public:
  // u0 = int_0^x u0x; u0x must have zero mean so that u0 is periodic.
  static InitialData from_slope(GridFunction u0x, GridFunction rho0,
                                Kappa kappa = Kappa::kMinus);
  // u0 must be periodic with u0(0) = 0.
  static InitialData from_velocity(GridFunction u0, GridFunction rho0,
                                   Kappa kappa = Kappa::kMinus);

  const GridFunction& u0() const { return u0_; }
  const GridFunction& u0x() const { return u0x_; }
  const GridFunction& rho0() const { return rho0_; }
  Kappa kappa() const { return kappa_; }
  const Grid& grid() const { return u0_.grid(); }

  // (s u0, s rho0): the data of the rescaled solution s u(s t, x).
  InitialData scaled(double s) const;

 private:
  InitialData(GridFunction u0, GridFunction u0x, GridFunction rho0,
              Kappa kappa);

  GridFunction u0_;
  GridFunction u0x_;
  GridFunction rho0_;
  Kappa kappa_;
};

enum class CausalType { kSpacelike, kLightlike, kTimelike };

const char* to_string(CausalType type);

struct Classification {
  double c = 0.0;  // Casimir of the data it describes
  CausalType type = CausalType::kLightlike;
  // Factor applied by normalize(); original-time quantities are
  // scale * normalized-time quantities.
  double scale = 1.0;

  // Normalized Casimir: +1, 0 or -1.
  int unit_c() const;
};

// Data rescaled so that its Casimir is in {1, 0, -1}, together with the
// classification of the original data.
struct NormalizedData {
  InitialData data;
  Classification cls;
};

inline constexpr double kLightlikeTolerance = 1e-12;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// c = 1/4 int (u0x^2 + kappa rho0^2) dx.
double casimir_c(const InitialData& d);

NormalizedData normalize(const InitialData& d);

// Closed-form solution of z' = -z^2/2 - 2c, z(0) = z0, for c in {1, 0, -1}.
// Throws Singular when the denominator falls below 1e-12 in magnitude.
double riccati(double z0, int c, double t);

// Characteristic factor C(t) + (z0/2) S(t) with (C, S) = (cos, sin), (1, t),
// (cosh, sinh) for c = 1, 0, -1; phi_x factors as the product of the factors
// for z0 = u0x + rho0 and z0 = u0x - rho0.
double characteristic_factor(double z0, int c, double t);

// First zero of characteristic_factor in t > 0, or +inf.
double characteristic_zero(double z0, int c);

struct LagrangianFields {
  double t = 0.0;
  GridFunction U;       // u_x(t, phi(t, x))
  GridFunction varrho;  // rho(t, phi(t, x))
  GridFunction phi;
  GridFunction phi_x;
};

// Closed-form Lagrangian solution. kappa = -1 only. Throws BlowupReached for
// t >= blowup_time(d).
LagrangianFields lagrangian_fields(const NormalizedData& d, double t);

// First breaking time in normalized time: earliest zero over nodes and both
// characteristic families. kappa = -1 only.
double blowup_time(const NormalizedData& d);

// Breaking time evaluated by transcribing the piecewise inf/arccoth/arctan
// expression term by term over the node set (reported alongside
// blowup_time; it disagrees for some timelike data).
double blowup_time_formula_literal(const NormalizedData& d);

// Timelike data only: |rho0| <= u0x + 2 at every node (+1e-12).
bool is_global(const NormalizedData& d);

struct EulerianFields {
  GridFunction u;
  GridFunction rho;
};

// (u, rho)(t, y) at the Eulerian nodes, obtained by inverting phi(t, .).
// Throws NotInvertible when min phi_x < 1e-8.
EulerianFields eulerian_solution(const NormalizedData& d, double t);

// phi_t = int_0^x U phi_x dy from the Lagrangian fields.
GridFunction flow_velocity(const LagrangianFields& lf);

}  // namespace hs
