#include "threeqb/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace threeqb {

namespace {

double tr_sq(const SmallMatrix& rho) {
  // tr(rho^2) of a Hermitian matrix = squared Frobenius norm.
  double s = 0;
  for (int i = 0; i < rho.dim(); ++i)
    for (int j = 0; j < rho.dim(); ++j) s += std::norm(rho(i, j));
  return s;
}

double tr_cube(const SmallMatrix& rho) {
  return trace(rho * rho * rho).real();
}

int other(int a, int which) {
  static constexpr int tab[4][2] = {{0, 0}, {2, 3}, {1, 3}, {1, 2}};
  return tab[a][which];
}

}  // namespace

double InvariantReport::concurrence(int a) const {
  switch (a) {
    case 1: return c1_23;
    case 2: return c2_13;
    case 3: return c3_12;
    default:
      throw std::invalid_argument("concurrence: subsystem must be in {1,2,3}");
  }
}

double concurrence_pure_2qb(const TwoQubitState& phi) {
  return std::abs(quadratic_form(phi));
}

double three_tangle(const PureState& psi) {
  return 2.0 * std::abs(quartic_form(psi));
}

double omega_measure(const PureState& psi) {
  return 2.0 * norm(cubic_tensor(psi));
}

double concurrence_split(const PureState& psi, int a) {
  if (a < 1 || a > 3)
    throw std::invalid_argument(
        "concurrence_split: subsystem must be in {1,2,3}");
  const int b = other(a, 0), c = other(a, 1);
  const double sq_gamma =
      norm_sq(gamma_tensor(psi, b)) + norm_sq(gamma_tensor(psi, c));

  // Cross-check the two density-matrix routes against the tensor route on
  // the squared (degree-4) values, where the comparison is stable near zero.
  const SmallMatrix rho = reduced_density_qubit(psi, a);
  const double sq_det = 4.0 * determinant(rho).real();
  const double tr = trace(rho).real();
  const double sq_tr = 2.0 * (tr * tr - tr_sq(rho));

  const double n = norm(psi);
  const double n4 = n * n * n * n;
  const double tol = 1e-10 * std::max(n4, 1e-300);
  if (std::abs(sq_gamma - sq_det) > tol || std::abs(sq_gamma - sq_tr) > tol)
    throw std::runtime_error(
        "concurrence_split: tensor and density-matrix routes disagree");
  return std::sqrt(std::max(sq_gamma, 0.0));
}

InvariantReport lu_invariants(const PureState& psi) {
  InvariantReport r;
  const double n = norm(psi);
  r.n2 = n * n;

  const SmallMatrix rho1 = reduced_density_qubit(psi, 1);
  const SmallMatrix rho2 = reduced_density_qubit(psi, 2);
  const SmallMatrix rho3 = reduced_density_qubit(psi, 3);
  r.I1 = tr_sq(rho1);
  r.I2 = tr_sq(rho2);
  r.I3 = tr_sq(rho3);

  // Kempe invariant from each {b,c} pair; the three evaluations are equal,
  // so any spread beyond round-off is an internal error, and the mean
  // symmetrizes what round-off remains.
  const SmallMatrix* rho[4] = {nullptr, &rho1, &rho2, &rho3};
  double i4[3];
  int slot = 0;
  for (int a = 1; a <= 3; ++a) {
    const int b = other(a, 0), c = other(a, 1);
    const SmallMatrix rbc = reduced_density(psi, {b, c});
    i4[slot++] = 3.0 * trace(rbc * kron(*rho[b], *rho[c])).real() -
                 tr_cube(*rho[b]) - tr_cube(*rho[c]);
  }
  const double scale6 = std::max(1.0, r.n2 * r.n2 * r.n2);
  for (int s = 1; s < 3; ++s)
    if (std::abs(i4[s] - i4[0]) > 1e-11 * scale6)
      throw std::runtime_error("lu_invariants: Kempe invariant evaluations disagree");
  r.I4 = (i4[0] + i4[1] + i4[2]) / 3.0;

  const Complex q = quartic_form(psi);
  const Complex det = -0.5 * q;  // q = -2 Det
  r.I5 = std::norm(det);

  r.tau = three_tangle(psi);
  r.omega = omega_measure(psi);
  r.c1_23 = concurrence_split(psi, 1);
  r.c2_13 = concurrence_split(psi, 2);
  r.c3_12 = concurrence_split(psi, 3);
  return r;
}

InvariantExpressed measures_from_invariants(const InvariantReport& r) {
  InvariantExpressed e;
  e.n2 = r.n2;
  const double i0 = r.n2;
  const double ia[3] = {r.I1, r.I2, r.I3};
  for (int a = 0; a < 3; ++a) e.c_sq[a] = 2.0 * (i0 * i0 - ia[a]);
  e.omega_sq = (8.0 / 3.0) * r.I4 + (10.0 / 3.0) * i0 * i0 * i0 -
               2.0 * i0 * (r.I1 + r.I2 + r.I3);
  // tau = 4|Det| and I5 = |Det|^2, hence the 16.
  e.tau_sq = 16.0 * r.I5;
  return e;
}

double wootters_concurrence_mixed(const SmallMatrix& rho) {
  if (rho.dim() != 4)
    throw std::invalid_argument(
        "wootters_concurrence_mixed: expects a two-qubit (4x4) matrix");
  if (!is_hermitian(rho, 1e-9))
    throw std::invalid_argument("wootters_concurrence_mixed: not Hermitian");
  const double tr = trace(rho).real();
  if (std::abs(tr - 1.0) > 1e-9)
    throw std::invalid_argument("wootters_concurrence_mixed: trace must be 1");

  // Inputs may carry hermiticity slack up to 1e-9; symmetrize before the
  // eigensolver, whose own tolerance is tighter.
  SmallMatrix sym(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      sym(r, c) = 0.5 * (rho(r, c) + std::conj(rho(c, r)));

  // (Y (x) Y), Y being the second Pauli matrix.
  SmallMatrix yy(4);
  yy(0, 3) = -1;
  yy(1, 2) = 1;
  yy(2, 1) = 1;
  yy(3, 0) = -1;

  const SmallMatrix rho_tilde = yy * conjugate(sym) * yy;
  const SmallMatrix s = psd_sqrt(sym);
  const SmallMatrix herm = s * rho_tilde * s;
  Eigensystem es = hermitian_eigensystem(herm);

  // The marginals handled here have rank <= 2, so the bottom eigenvalues are
  // exact zeros; clamping keeps sqrt from turning their round-off into 1e-8.
  const double clamp = 1e-14 * std::max(1.0, tr);
  double lam[4];
  for (int k = 0; k < 4; ++k) {
    const double mu = es.values[k] < clamp ? 0.0 : es.values[k];
    lam[k] = std::sqrt(mu);
  }
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double ckw_residual(const PureState& psi, int a) {
  if (a < 1 || a > 3)
    throw std::invalid_argument("ckw_residual: subsystem must be in {1,2,3}");
  if (std::abs(norm(psi) - 1.0) > 1e-9)
    throw std::invalid_argument("ckw_residual: state must be normalized");
  const int b = other(a, 0), c = other(a, 1);
  const double cab =
      wootters_concurrence_mixed(reduced_density(psi, {std::min(a, b), std::max(a, b)}));
  const double cac =
      wootters_concurrence_mixed(reduced_density(psi, {std::min(a, c), std::max(a, c)}));
  const double cbc = concurrence_split(psi, a);
  return cbc * cbc - cab * cab - cac * cac;
}

}  // namespace threeqb
