#pragma once

#include <vector>

#include "hs/periodic_field.hpp"

namespace hs {

// Inverse of a nondecreasing flow map phi(x) = int_0^x phi_x with
// int phi_x = 1. For each Eulerian node y_j it finds xi_j with
// phi(xi_j) = y_j and pulls periodic Lagrangian fields back to the
// Eulerian grid: F(xi_j).
//
// When phi_x is bounded away from zero, phi - x and the pulled-back fields
// are evaluated by trigonometric interpolation and xi_j is found by
// safeguarded Newton iteration. Otherwise (degenerate flow maps, phi_x below
// `degenerate_below` somewhere) the graph (phi(x_j), F(x_j)) is interpolated
// by a monotone piecewise cubic, skipping nodes where phi is flat.
class FlowInverse {
 public:
  explicit FlowInverse(const GridFunction& phi_x,
                       double degenerate_below = 1e-6);

  bool degenerate() const { return degenerate_; }
  // Lagrangian preimages xi_j of the Eulerian nodes (smooth case only).
  const std::vector<double>& preimages() const { return xi_; }

  GridFunction pull(const GridFunction& lagrangian) const;

 private:
  Grid grid_;
  bool degenerate_;
  std::vector<double> phi_nodes_;  // phi at x_0..x_n (x_n = 1)
  std::vector<double> xi_;
};

// Monotone piecewise cubic Hermite interpolation (Fritsch-Carlson slopes) of
// data (xs, ys) with strictly increasing xs.
class MonotoneCubic {
 public:
  MonotoneCubic(std::vector<double> xs, std::vector<double> ys);
  double operator()(double x) const;

 private:
  std::vector<double> xs_, ys_, slopes_;
};

}  // namespace hs
