#pragma once

#include "threeqb/tensors.hpp"

namespace threeqb {

/// The full LU-invariant profile of one state.
/// I4 is the Kempe invariant (identical for every {b,c} choice; the three
/// evaluations are checked against each other and averaged). I5 is the
/// absolute square of Cayley's hyperdeterminant, so tau^2 = 16 * I5.
struct InvariantReport {
  double n2 = 0;  // I0
  double I1 = 0, I2 = 0, I3 = 0, I4 = 0, I5 = 0;
  double tau = 0, omega = 0;
  double c1_23 = 0, c2_13 = 0, c3_12 = 0;

  double concurrence(int a) const;
};

/// Squared measures recomputed from the invariants alone, for cross-checking
/// against the native tensor route.
struct InvariantExpressed {
  double n2 = 0;
  double c_sq[3] = {0, 0, 0};
  double omega_sq = 0;
  double tau_sq = 0;
};

/// |q(phi)| = 2|det phi|.
double concurrence_pure_2qb(const TwoQubitState& phi);

/// tau = 2|q(psi)| = 4|Det(psi)|; > 0 exactly on the GHZ class.
double three_tangle(const PureState& psi);

/// omega = 2||T(psi)||; > 0 exactly on the W and GHZ classes.
double omega_measure(const PureState& psi);

/// c_{a|bc} = sqrt(||gamma_b||^2 + ||gamma_c||^2). The equivalent
/// 2*sqrt(det rho_a) and sqrt(2(tr(rho_a)^2 - tr(rho_a^2))) routes are
/// evaluated as well and must agree to 1e-10 relative.
double concurrence_split(const PureState& psi, int a);

InvariantReport lu_invariants(const PureState& psi);
InvariantExpressed measures_from_invariants(const InvariantReport& r);

/// Wootters concurrence of a two-qubit density matrix:
/// max(0, l1-l2-l3-l4), the l's being the descending square roots of the
/// eigenvalues of rho*rho~, computed through the Hermitian form
/// sqrt(rho)*rho~*sqrt(rho) with rho~ = (Y(x)Y) conj(rho) (Y(x)Y).
double wootters_concurrence_mixed(const SmallMatrix& rho);

/// c_{a|bc}^2 - c_{a|b}^2 - c_{a|c}^2 for a normalized state; equals the
/// three-tangle. Throws std::invalid_argument for unnormalized input.
double ckw_residual(const PureState& psi, int a);

}  // namespace threeqb
