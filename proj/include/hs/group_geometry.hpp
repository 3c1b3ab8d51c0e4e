#pragma once

#include <optional>
#include <random>

#include "hs/group_element.hpp"
#include "hs/periodic_field.hpp"

namespace hs {

// Tangent vector (U1, U2) at base (phi, alpha), identity when base is empty.
// U1 vanishes at x = 0 (checked to 1e-9 relative to its sup-norm).
struct TangentPair {
  TangentPair(GridFunction u1, GridFunction u2,
              std::optional<GroupElement> base = std::nullopt);

  GridFunction u1;
  GridFunction u2;
  std::optional<GroupElement> base;

  const Grid& grid() const { return u1.grid(); }
  // phi_x of the base, or 1.
  GridFunction phi_x() const;
};

// Tangent vector to the quotient K by constants: (u1, [u2]) with the class
// stored through its mean-zero representative.
struct KTangent {
  KTangent(GridFunction u1, GridFunction u2);
  explicit KTangent(const TangentPair& t);

  GridFunction u1;
  GridFunction u2_class;

  TangentPair lift() const { return {u1, u2_class}; }
};

// Random band-limited tangent at the identity, u1 pinned to vanish at 0.
// The second slot gets an N(0,1) constant unless mean_zero is set.
TangentPair random_tangent(const Grid& grid, std::mt19937_64& rng,
                           bool mean_zero = false);

// 1/4 int (U1x V1x / phi_x + kappa U2 V2 phi_x).
double metric_G(const TangentPair& U, const TangentPair& V,
                Kappa kappa = Kappa::kMinus);

// Lie algebra bracket at the identity:
// (v1x u1 - u1x v1, v2x u1 - u2x v1).
TangentPair bracket(const TangentPair& u, const TangentPair& v);

// B(u, v) together with its moment h = u1xx v1x + (u1xx v1)_x
// - kappa u2 v2x, so that value.u1 = A^-1 h. h need not have zero mean;
// A^-1 then keeps the mean through a kink at x = 0, and pairings against
// B must go through the moment (pair_weak) rather than through value.u1x.
struct BValue {
  TangentPair value;
  GridFunction moment;
};

BValue b_operator(const TangentPair& u, const TangentPair& v,
                  Kappa kappa = Kappa::kMinus);

// <B, w> = 1/4 int (h w1 + kappa B2 w2) for smooth w with w1(0) = 0.
double pair_weak(const BValue& b, const TangentPair& w,
                 Kappa kappa = Kappa::kMinus);

// <delta, delta> + <[u,v], beta> - 3/4 <[u,v],[u,v]> - <B(u,u), B(v,v)>
// with delta, beta the symmetric and antisymmetric parts of B(u, v).
double arnold_curvature(const TangentPair& u, const TangentPair& v,
                        Kappa kappa = Kappa::kMinus);

// <u,u><v,v> - <u,v>^2.
double plane_gram(const TangentPair& u, const TangentPair& v,
                  Kappa kappa = Kappa::kMinus);

// Christoffel map of the kappa = -1 metric at the identity, through the
// inverse Laplacian:
// (-1/2 A^-1 d(u_x v_x) + 1/2 A^-1 d(rho sigma), -1/2 (u_x sigma + v_x rho)).
TangentPair christoffel_identity(const TangentPair& U, const TangentPair& V);

// Same map at a general base in Lagrangian variables, by quadrature:
// with H = U1x V1x / phi_x - U2 V2 phi_x,
// (1/2 (int_0^x H - phi int H), -1/2 (U1x V2 + V1x U2) / phi_x).
// Nodes where phi_x < 1e-14 drop out of H and the second slot.
TangentPair christoffel(const TangentPair& U, const TangentPair& V,
                        const GroupElement& at);

// pi_phi(W) = W - int W phi_x.
GridFunction project_class(const GridFunction& w, const GridFunction& phi_x);

// 1/4 int (u1x v1x / phi_x - pi(u2) pi(v2) phi_x).
double metric_K(const KTangent& u, const KTangent& v,
                const std::optional<GroupElement>& at = std::nullopt);

// J(U) = (-int_0^x pi(U2) phi_x, -pi(U1x / phi_x)) at the base of U.
TangentPair j_tensor(const TangentPair& U);

// 1/4 int (U2x V1 - V2x U1).
double omega_form(const TangentPair& U, const TangentPair& V);
double omega_form(const KTangent& U, const KTangent& V);

// <u,u><v,v> - <u,v>^2 - 3 omega(u,v)^2 on K.
double k_curvature(const KTangent& u, const KTangent& v);

// k_curvature over the Gram determinant; DegeneratePlane below 1e-12.
double k_sectional(const KTangent& u, const KTangent& v);

// N(u, v) = [u,v] - J[Ju,v] - J[u,Jv] + s [Ju,Jv] with K-brackets (second
// slot projected). s = +1 is the form that vanishes for the paracomplex
// structure J (J^2 = I); s = -1 is the complex-structure form, kept for
// comparison.
enum class NijenhuisSign { kParacomplex, kComplex };

TangentPair nijenhuis(const TangentPair& u, const TangentPair& v,
                      NijenhuisSign sign = NijenhuisSign::kParacomplex);

}  // namespace hs
