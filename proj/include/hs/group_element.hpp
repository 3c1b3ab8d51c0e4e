#pragma once

#include "hs/periodic_field.hpp"

namespace hs {

// Element (phi, alpha) of the semidirect product of Diff_0(S) with
// functions on S. The flow map phi is not periodic (phi(1) = 1), so its
// derivative phi_x is stored alongside it instead of being re-derived
// spectrally.
class GroupElement {
 public:
  // phi = int_0^x phi_x; requires phi_x > 0 and int phi_x = 1 (1e-9).
  static GroupElement from_density(GridFunction phi_x, GridFunction alpha);
  // Accepts phi directly: phi_x = 1 + d/dx (phi - x).
  static GroupElement from_map(const GridFunction& phi, GridFunction alpha);
  static GroupElement identity(const Grid& grid);

  const GridFunction& phi() const { return phi_; }
  const GridFunction& phi_x() const { return phi_x_; }
  const GridFunction& alpha() const { return alpha_; }
  const Grid& grid() const { return phi_.grid(); }

  bool is_identity(double tol = 1e-14) const;

 private:
  GroupElement(GridFunction phi, GridFunction phi_x, GridFunction alpha);

  GridFunction phi_;
  GridFunction phi_x_;
  GridFunction alpha_;
};

// Coupling constant kappa = +1 or -1.
enum class Kappa { kMinus = -1, kPlus = 1 };

constexpr double value(Kappa k) { return k == Kappa::kMinus ? -1.0 : 1.0; }

Kappa kappa_from_int(int k);

}  // namespace hs
