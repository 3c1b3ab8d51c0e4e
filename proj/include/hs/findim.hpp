#pragma once

#include <Eigen/Dense>
#include <random>
#include <vector>

namespace hs::findim {

// Vectors of R^{2(n+1)} are stored as (x_1 .. x_{n+1}, y_1 .. y_{n+1}) with
// the indefinite form g(a, b) = sum(a_x b_x) - sum(a_y b_y).
using Vec = Eigen::VectorXd;

double g(const Vec& a, const Vec& b);

// (X, Y) -> (-Y, -X).
Vec j(const Vec& a);

// Point of the pseudosphere g(p, p) = 1 (checked to 1e-12).
class FinPoint {
 public:
  explicit FinPoint(Vec z);

  const Vec& z() const { return z_; }
  int n() const { return static_cast<int>(z_.size()) / 2 - 1; }
  // Vertical direction V = J p, g(V, V) = -1.
  Vec vertical() const { return j(z_); }

 private:
  Vec z_;
};

// Tangent vector at base: g(v, base) = 0 (1e-12 relative).
struct FinTangent {
  FinTangent(Vec v, FinPoint base);

  Vec v;
  FinPoint base;
};

double fin_metric(const FinTangent& a, const FinTangent& b);
FinTangent j_action(const FinTangent& a);
// omega(X, X') = g(JX, X').
double fin_omega(const FinTangent& a, const FinTangent& b);

struct Split {
  FinTangent vertical;    // -g(X, V) V
  FinTangent horizontal;  // X + g(X, V) V
};

Split split(const FinTangent& a);

bool is_horizontal(const FinTangent& a, double tol = 1e-10);

// Sectional curvature of the quotient by the R-action on the plane of two
// horizontal vectors:
// (g(X,X) g(Y,Y) - g(X,Y)^2 - 3 omega(X,Y)^2) / (g(X,X) g(Y,Y) - g(X,Y)^2).
// Throws DegeneratePlane when the Gram determinant is below 1e-12 and
// std::invalid_argument for non-horizontal input.
double quotient_sec(const FinTangent& a, const FinTangent& b);

// Lambda_beta = [[cosh b, -sinh b], [-sinh b, cosh b]] acting blockwise.
Vec lorentz(double beta, const Vec& a);
FinPoint lorentz(double beta, const FinPoint& p);
FinTangent lorentz(double beta, const FinTangent& a);

// Random point with f = sum x_i^2 - sum y_i^2 > 0 before rescaling.
FinPoint random_point(int n, std::mt19937_64& rng);
FinTangent random_tangent(const FinPoint& p, std::mt19937_64& rng);
FinTangent random_horizontal(const FinPoint& p, std::mt19937_64& rng);

// Horizontal projection at an arbitrary q with g(q, q) > 0, used to extend
// a tangent vector to a vector field near the pseudosphere.
Vec horizontal_projection(const Vec& q, const Vec& a);

// Horizontal extensions Xb(q) = P_q X, Yb(q) = P_q Y. Returns the
// difference between 1/2 [Xb, Yb]^v at the base, with the bracket
// DYb Xb - DXb Yb from central differences of step h, and
// omega(X, Y) V.
double bracket_vertical_defect(const FinTangent& X, const FinTangent& Y,
                               double h = 1e-5);

struct PlaneSample {
  int i = 0, j = 0;  // ambient coordinate indices projected to span the plane
  double sec = 0.0;
};

// Projects every ambient coordinate vector horizontally at p and evaluates
// quotient_sec on each nondegenerate pair.
std::vector<PlaneSample> scan_coordinate_planes(const FinPoint& p);

// (1, 0, ..., 0; 0, ..., 0).
FinPoint canonical_point(int n);

}  // namespace hs::findim
