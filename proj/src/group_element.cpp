#include "hs/group_element.hpp"

#include <sstream>
#include <stdexcept>

namespace hs {

GroupElement::GroupElement(GridFunction phi, GridFunction phi_x,
                           GridFunction alpha)
    : phi_(std::move(phi)), phi_x_(std::move(phi_x)), alpha_(std::move(alpha)) {
  if (!(phi_x_.grid() == alpha_.grid())) {
    throw std::invalid_argument("phi and alpha live on different grids");
  }
  if (phi_x_.min() <= 0.0) {
    throw std::invalid_argument("group element needs phi_x > 0 at every node");
  }
  const double total = integrate(phi_x_);
  if (std::abs(total - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "group element needs phi(1) = 1, got " << total;
    throw std::invalid_argument(msg.str());
  }
}

GroupElement GroupElement::from_density(GridFunction phi_x,
                                        GridFunction alpha) {
  auto phi = antiderivative_from_zero(phi_x);
  return GroupElement(std::move(phi), std::move(phi_x), std::move(alpha));
}

GroupElement GroupElement::from_map(const GridFunction& phi,
                                    GridFunction alpha) {
  if (std::abs(phi[0]) > 1e-12) {
    throw std::invalid_argument("group element needs phi(0) = 0");
  }
  const auto id = GridFunction::identity(phi.grid());
  auto phi_x = 1.0 + derivative(phi - id);
  return GroupElement(phi, std::move(phi_x), std::move(alpha));
}

GroupElement GroupElement::identity(const Grid& grid) {
  return GroupElement(GridFunction::identity(grid),
                      GridFunction::constant(grid, 1.0),
                      GridFunction::zeros(grid));
}

bool GroupElement::is_identity(double tol) const {
  return (phi_x_ - 1.0).max_abs() <= tol && alpha_.max_abs() <= tol;
}

Kappa kappa_from_int(int k) {
  if (k == 1) return Kappa::kPlus;
  if (k == -1) return Kappa::kMinus;
  throw std::invalid_argument("kappa must be +1 or -1, got " +
                              std::to_string(k));
}

}  // namespace hs
