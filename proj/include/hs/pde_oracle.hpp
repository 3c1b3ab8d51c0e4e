#pragma once

#include <vector>

#include "hs/explicit_engine.hpp"
#include "hs/periodic_field.hpp"

namespace hs {

// Method-of-lines integrator for
//   u_t + u u_x = -1/2 A^-1 d_x (u_x^2 + kappa rho^2),
//   rho_t + u rho_x = -rho u_x,
// spectral in space, classical RK4 in time.
struct OracleConfig {
  int n = 256;
  double dt = 1e-3;
  bool dealias = true;  // 2/3 rule on quadratic products

  // Throws std::invalid_argument unless 0 < dt <= 0.5 / n.
  void validate() const;
};

struct FieldPair {
  GridFunction u;
  GridFunction rho;
};

FieldPair rhs(const GridFunction& u, const GridFunction& rho, Kappa kappa,
              bool dealias = true);

// Margin kept below the classical breaking time.
inline constexpr double kOracleMargin = 0.05;

// Fields at t_end. Requires t_end < T* - kOracleMargin (kappa = -1; kappa =
// +1 data are integrated without that check). The last step is shortened so
// that t_end is hit exactly. Throws StepUnstable when a field exceeds 1e6.
FieldPair evolve(const InitialData& d, double t_end, const OracleConfig& cfg);

// States at each of the ascending times, in one march.
std::vector<FieldPair> evolve_to(const InitialData& d,
                                 const std::vector<double>& times,
                                 const OracleConfig& cfg);

// 1/4 int (u_x^2 + kappa rho^2) of Eulerian fields.
double casimir_of(const FieldPair& f, Kappa kappa);

struct CompareRow {
  double t = 0.0;
  double l2_u = 0.0, l2_rho = 0.0;
  double sup_u = 0.0, sup_rho = 0.0;
  double casimir_drift = 0.0;  // |c(t) - c(0)| of the oracle
};

struct CompareReport {
  Classification cls;  // of the data as given
  double blowup_time = kInfinity;  // normalized time
  std::vector<CompareRow> rows;

  double max_l2() const;
  double max_casimir_drift() const;
};

// Runs both engines on the normalized data (times in normalized units). The
// data's grid must match cfg.n.
CompareReport compare(const InitialData& d, const std::vector<double>& times,
                      const OracleConfig& cfg);

}  // namespace hs
