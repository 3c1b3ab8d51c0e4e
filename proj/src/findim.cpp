#include "hs/findim.hpp"

#include <cmath>
#include <stdexcept>

#include "hs/errors.hpp"

namespace hs::findim {

namespace {

void require_dims(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("vectors have different dimensions");
  }
}

Vec gaussian(int size, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vec v(size);
  for (int i = 0; i < size; ++i) v[i] = normal(rng);
  return v;
}

}  // namespace

double g(const Vec& a, const Vec& b) {
  require_dims(a, b);
  const auto m = a.size() / 2;
  return a.head(m).dot(b.head(m)) - a.tail(m).dot(b.tail(m));
}

Vec j(const Vec& a) {
  const auto m = a.size() / 2;
  Vec out(a.size());
  out.head(m) = -a.tail(m);
  out.tail(m) = -a.head(m);
  return out;
}

FinPoint::FinPoint(Vec z) : z_(std::move(z)) {
  if (z_.size() < 4 || z_.size() % 2 != 0) {
    throw std::invalid_argument("point needs 2(n+1) coordinates with n >= 1");
  }
  if (std::abs(g(z_, z_) - 1.0) > 1e-12) {
    throw std::invalid_argument("point is not on the pseudosphere");
  }
}

FinTangent::FinTangent(Vec vec, FinPoint at) : v(std::move(vec)), base(std::move(at)) {
  require_dims(v, base.z());
  if (std::abs(g(v, base.z())) > 1e-12 * std::max(1.0, v.norm())) {
    throw std::invalid_argument("vector is not tangent at the base point");
  }
}

double fin_metric(const FinTangent& a, const FinTangent& b) {
  return g(a.v, b.v);
}

FinTangent j_action(const FinTangent& a) { return {j(a.v), a.base}; }

double fin_omega(const FinTangent& a, const FinTangent& b) {
  return g(j(a.v), b.v);
}

Split split(const FinTangent& a) {
  const Vec V = a.base.vertical();
  const double c = g(a.v, V);
  return {{-c * V, a.base}, {a.v + c * V, a.base}};
}

bool is_horizontal(const FinTangent& a, double tol) {
  return std::abs(g(a.v, a.base.vertical())) <= tol * std::max(1.0, a.v.norm());
}

double quotient_sec(const FinTangent& a, const FinTangent& b) {
  if (!is_horizontal(a) || !is_horizontal(b)) {
    throw std::invalid_argument("quotient_sec needs horizontal vectors");
  }
  const double ab = g(a.v, b.v);
  const double gram = g(a.v, a.v) * g(b.v, b.v) - ab * ab;
  if (std::abs(gram) < 1e-12) {
    throw DegeneratePlane("horizontal plane is degenerate");
  }
  const double w = fin_omega(a, b);
  return (gram - 3.0 * w * w) / gram;
}

Vec lorentz(double beta, const Vec& a) {
  const auto m = a.size() / 2;
  const double ch = std::cosh(beta), sh = std::sinh(beta);
  Vec out(a.size());
  out.head(m) = ch * a.head(m) - sh * a.tail(m);
  out.tail(m) = -sh * a.head(m) + ch * a.tail(m);
  return out;
}

FinPoint lorentz(double beta, const FinPoint& p) {
  Vec z = lorentz(beta, p.z());
  // Renormalize away the rounding of cosh^2 - sinh^2.
  z /= std::sqrt(g(z, z));
  return FinPoint(std::move(z));
}

FinTangent lorentz(double beta, const FinTangent& a) {
  const FinPoint q = lorentz(beta, a.base);
  Vec v = lorentz(beta, a.v);
  v -= g(v, q.z()) * q.z();
  return {std::move(v), q};
}

FinPoint random_point(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("dimension parameter n must be >= 1");
  for (;;) {
    Vec z = gaussian(2 * (n + 1), rng);
    const double f = g(z, z);
    if (f > 0.1) {
      z /= std::sqrt(f);
      z /= std::sqrt(g(z, z));
      return FinPoint(std::move(z));
    }
  }
}

FinTangent random_tangent(const FinPoint& p, std::mt19937_64& rng) {
  Vec v = gaussian(static_cast<int>(p.z().size()), rng);
  v -= g(v, p.z()) * p.z();
  return {std::move(v), p};
}

FinTangent random_horizontal(const FinPoint& p, std::mt19937_64& rng) {
  return split(random_tangent(p, rng)).horizontal;
}

Vec horizontal_projection(const Vec& q, const Vec& a) {
  const double qq = g(q, q);
  if (!(qq > 0.0)) throw std::invalid_argument("projection needs g(q,q) > 0");
  const Vec Jq = j(q);
  // g(Jq, Jq) = -g(q, q).
  return a - (g(a, q) / qq) * q + (g(a, Jq) / qq) * Jq;
}

double bracket_vertical_defect(const FinTangent& X, const FinTangent& Y,
                               double h) {
  const Vec& p = X.base.z();
  auto Xb = [&](const Vec& q) { return horizontal_projection(q, X.v); };
  auto Yb = [&](const Vec& q) { return horizontal_projection(q, Y.v); };
  const Vec x0 = Xb(p), y0 = Yb(p);
  const Vec dY = (Yb(p + h * x0) - Yb(p - h * x0)) / (2.0 * h);
  const Vec dX = (Xb(p + h * y0) - Xb(p - h * y0)) / (2.0 * h);
  const Vec br = dY - dX;
  const Vec V = X.base.vertical();
  const Vec half_vertical = -0.5 * g(br, V) * V;
  const Vec expected = g(j(x0), y0) * V;
  return (half_vertical - expected).lpNorm<Eigen::Infinity>();
}

std::vector<PlaneSample> scan_coordinate_planes(const FinPoint& p) {
  const int m = static_cast<int>(p.z().size());
  std::vector<Vec> basis(m);
  for (int i = 0; i < m; ++i) {
    basis[i] = horizontal_projection(p.z(), Vec::Unit(m, i));
  }
  std::vector<PlaneSample> out;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (basis[a].norm() < 1e-12 || basis[b].norm() < 1e-12) continue;
      try {
        out.push_back({a, b,
                       quotient_sec({basis[a], p}, {basis[b], p})});
      } catch (const DegeneratePlane&) {
      }
    }
  }
  return out;
}

FinPoint canonical_point(int n) {
  if (n < 1) throw std::invalid_argument("dimension parameter n must be >= 1");
  return FinPoint(Vec::Unit(2 * (n + 1), 0));
}

}  // namespace hs::findim
