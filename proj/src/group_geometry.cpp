#include "hs/group_geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "hs/errors.hpp"
#include "hs/sampling.hpp"

namespace hs {

namespace {

constexpr double kDegenerateDensity = 1e-14;

void require_identity(const TangentPair& t, const char* op) {
  if (t.base && !t.base->is_identity()) {
    throw std::invalid_argument(std::string(op) +
                                " is defined at the identity only");
  }
}

bool same_base(const TangentPair& a, const TangentPair& b) {
  const bool ia = !a.base || a.base->is_identity();
  const bool ib = !b.base || b.base->is_identity();
  if (ia || ib) return ia && ib;
  auto eq = [](const GridFunction& f, const GridFunction& g) {
    for (int j = 0; j < f.size(); ++j) {
      if (f[j] != g[j]) return false;
    }
    return true;
  };
  return a.base->grid() == b.base->grid() &&
         eq(a.base->phi_x(), b.base->phi_x()) &&
         eq(a.base->alpha(), b.base->alpha());
}

void require_same_base(const TangentPair& a, const TangentPair& b) {
  if (!same_base(a, b)) {
    throw std::invalid_argument("tangent vectors live at different bases");
  }
}

BValue combine(const BValue& a, double sa, const BValue& b, double sb) {
  return {TangentPair(sa * a.value.u1 + sb * b.value.u1,
                      sa * a.value.u2 + sb * b.value.u2),
          sa * a.moment + sb * b.moment};
}

TangentPair k_bracket(const TangentPair& u, const TangentPair& v) {
  auto b = bracket(u, v);
  return {b.u1, mean_zero_project(b.u2)};
}

TangentPair sum(const TangentPair& a, double sa, const TangentPair& b,
                double sb) {
  return {sa * a.u1 + sb * b.u1, sa * a.u2 + sb * b.u2, a.base};
}

}  // namespace

TangentPair::TangentPair(GridFunction first, GridFunction second,
                         std::optional<GroupElement> at)
    : u1(std::move(first)), u2(std::move(second)), base(std::move(at)) {
  if (!(u1.grid() == u2.grid()) || (base && !(base->grid() == u1.grid()))) {
    throw GridMismatch("tangent components and base use different grids");
  }
  if (std::abs(u1[0]) > 1e-9 * std::max(1.0, u1.max_abs())) {
    throw std::invalid_argument("first tangent component must vanish at 0");
  }
}

GridFunction TangentPair::phi_x() const {
  return base ? base->phi_x() : GridFunction::constant(u1.grid(), 1.0);
}

KTangent::KTangent(GridFunction first, GridFunction second)
    : u1(std::move(first)), u2_class(mean_zero_project(second)) {
  TangentPair check(u1, u2_class);  // validates grids and u1(0)
}

KTangent::KTangent(const TangentPair& t) : KTangent(t.u1, t.u2) {}

TangentPair random_tangent(const Grid& grid, std::mt19937_64& rng,
                           bool mean_zero) {
  const int modes = band_limit(grid);
  auto u1 = random_trig_polynomial(grid, modes, rng);
  u1 += -u1[0];
  auto u2 = random_trig_polynomial(grid, modes, rng);
  if (!mean_zero) {
    std::normal_distribution<double> normal;
    u2 += normal(rng);
  }
  return {std::move(u1), std::move(u2)};
}

double metric_G(const TangentPair& U, const TangentPair& V, Kappa kappa) {
  require_same_base(U, V);
  const auto px = U.phi_x();
  return 0.25 * integrate(derivative(U.u1) * derivative(V.u1) / px +
                          value(kappa) * U.u2 * V.u2 * px);
}

TangentPair bracket(const TangentPair& u, const TangentPair& v) {
  require_identity(u, "bracket");
  require_identity(v, "bracket");
  const auto u1x = derivative(u.u1);
  const auto v1x = derivative(v.u1);
  return {v1x * u.u1 - u1x * v.u1,
          derivative(v.u2) * u.u1 - derivative(u.u2) * v.u1};
}

BValue b_operator(const TangentPair& u, const TangentPair& v, Kappa kappa) {
  require_identity(u, "b_operator");
  require_identity(v, "b_operator");
  const auto u1xx = second_derivative(u.u1);
  auto h = u1xx * derivative(v.u1) + derivative(u1xx * v.u1) -
           value(kappa) * u.u2 * derivative(v.u2);
  auto first = a_inverse(h, MeanPolicy::kLiteral);
  return {TangentPair(std::move(first), -derivative(u.u2 * v.u1)),
          std::move(h)};
}

double pair_weak(const BValue& b, const TangentPair& w, Kappa kappa) {
  require_identity(w, "pair_weak");
  return 0.25 * integrate(b.moment * w.u1 + value(kappa) * b.value.u2 * w.u2);
}

double arnold_curvature(const TangentPair& u, const TangentPair& v,
                        Kappa kappa) {
  const auto buv = b_operator(u, v, kappa);
  const auto bvu = b_operator(v, u, kappa);
  const auto delta = combine(buv, 0.5, bvu, 0.5);
  const auto beta = combine(buv, 0.5, bvu, -0.5);
  const auto uv = bracket(u, v);
  const auto buu = b_operator(u, u, kappa);
  const auto bvv = b_operator(v, v, kappa);
  return pair_weak(delta, delta.value, kappa) + pair_weak(beta, uv, kappa) -
         0.75 * metric_G(uv, uv, kappa) - pair_weak(buu, bvv.value, kappa);
}

double plane_gram(const TangentPair& u, const TangentPair& v, Kappa kappa) {
  const double uv = metric_G(u, v, kappa);
  return metric_G(u, u, kappa) * metric_G(v, v, kappa) - uv * uv;
}

TangentPair christoffel_identity(const TangentPair& U, const TangentPair& V) {
  require_identity(U, "christoffel_identity");
  require_identity(V, "christoffel_identity");
  const auto ux = derivative(U.u1);
  const auto vx = derivative(V.u1);
  auto first = -0.5 * a_inverse(derivative(ux * vx), MeanPolicy::kSubtract) +
               0.5 * a_inverse(derivative(U.u2 * V.u2), MeanPolicy::kSubtract);
  return {std::move(first), -0.5 * (ux * V.u2 + vx * U.u2)};
}

TangentPair christoffel(const TangentPair& U, const TangentPair& V,
                        const GroupElement& at) {
  const auto& px = at.phi_x();
  const auto ux = derivative(U.u1);
  const auto vx = derivative(V.u1);
  const int n = px.size();
  std::vector<double> H(n), second(n);
  for (int j = 0; j < n; ++j) {
    if (px[j] < kDegenerateDensity) continue;
    H[j] = ux[j] * vx[j] / px[j] - U.u2[j] * V.u2[j] * px[j];
    second[j] = -0.5 * (ux[j] * V.u2[j] + vx[j] * U.u2[j]) / px[j];
  }
  const GridFunction h(px.grid(), std::move(H));
  auto first = 0.5 * (antiderivative_from_zero(h) - integrate(h) * at.phi());
  return {std::move(first), GridFunction(px.grid(), std::move(second)), at};
}

GridFunction project_class(const GridFunction& w, const GridFunction& phi_x) {
  return w - integrate(w * phi_x);
}

double metric_K(const KTangent& u, const KTangent& v,
                const std::optional<GroupElement>& at) {
  const auto px = at ? at->phi_x() : GridFunction::constant(u.u1.grid(), 1.0);
  const auto pu = project_class(u.u2_class, px);
  const auto pv = project_class(v.u2_class, px);
  return 0.25 * integrate(derivative(u.u1) * derivative(v.u1) / px -
                          pu * pv * px);
}

TangentPair j_tensor(const TangentPair& U) {
  const auto px = U.phi_x();
  auto first = -antiderivative_from_zero(project_class(U.u2, px) * px);
  auto second = -project_class(derivative(U.u1) / px, px);
  return {std::move(first), std::move(second), U.base};
}

double omega_form(const TangentPair& U, const TangentPair& V) {
  require_same_base(U, V);
  return 0.25 * integrate(derivative(U.u2) * V.u1 - derivative(V.u2) * U.u1);
}

double omega_form(const KTangent& U, const KTangent& V) {
  return omega_form(U.lift(), V.lift());
}

double k_curvature(const KTangent& u, const KTangent& v) {
  const double uv = metric_K(u, v);
  const double w = omega_form(u, v);
  return metric_K(u, u) * metric_K(v, v) - uv * uv - 3.0 * w * w;
}

double k_sectional(const KTangent& u, const KTangent& v) {
  const double uv = metric_K(u, v);
  const double gram = metric_K(u, u) * metric_K(v, v) - uv * uv;
  if (std::abs(gram) < 1e-12) {
    throw DegeneratePlane("plane spanned by u and v is degenerate");
  }
  return k_curvature(u, v) / gram;
}

TangentPair nijenhuis(const TangentPair& u, const TangentPair& v,
                      NijenhuisSign sign) {
  require_identity(u, "nijenhuis");
  require_identity(v, "nijenhuis");
  const auto ju = j_tensor(u);
  const auto jv = j_tensor(v);
  const double s = sign == NijenhuisSign::kParacomplex ? 1.0 : -1.0;
  auto n = sum(k_bracket(u, v), 1.0, j_tensor(k_bracket(ju, v)), -1.0);
  n = sum(n, 1.0, j_tensor(k_bracket(u, jv)), -1.0);
  n = sum(n, 1.0, k_bracket(ju, jv), s);
  return {n.u1, mean_zero_project(n.u2)};
}

}  // namespace hs
