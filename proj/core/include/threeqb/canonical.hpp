#pragma once

#include <cstdint>
#include <vector>

#include "threeqb/measures.hpp"

namespace threeqb {

/// Parameters of the one-phase LU canonical form
/// sqrt(eta0)|000> + e^{i theta} sqrt(eta1)|100> + sqrt(eta2)|101>
///   + sqrt(eta3)|110> + sqrt(eta4)|111>,
/// with eta_i >= 0 and theta in [0, pi].
struct CanonicalParams {
  std::array<double, 5> eta{};
  double theta = 0;
};

PureState canonical_state(const CanonicalParams& p);

/// Closed-form squared measures of the canonical state. The norm factor is
/// kept so the formulas also hold for unnormalized eta.
struct ClosedFormReport {
  double c1_23_sq = 0, c2_13_sq = 0, c3_12_sq = 0;
  double omega_sq = 0, tau_sq = 0;
  Complex delta;  // sqrt(eta1*eta4) e^{i theta} - sqrt(eta2*eta3)
};

ClosedFormReport closed_form_measures(const CanonicalParams& p);

enum class MaxObjective {
  OmegaOnWClosure,
  SimultaneousConcurrenceOnWClosure,
  AverageConcurrenceOnWClosure,
  OmegaGivenC1Equals1,
};

struct MaximizeResult {
  CanonicalParams best;
  double best_value = 0;
  std::vector<double> restart_values;  // local optimum of each restart
};

/// Derivative-free (Nelder-Mead) maximization over the constrained canonical
/// domain of the chosen objective, with seeded uniform-random restarts.
/// Restarts are independent; the best value wins, ties broken by the lowest
/// restart index.
MaximizeResult maximize(MaxObjective objective, int restarts,
                        std::uint64_t seed);

struct CurveRow {
  double x = 0;
  double tau = 0, omega = 0;
  double c1_23 = 0, c2_13 = 0, c3_12 = 0;
};

enum class CurveFamily { GhzW, WBisep };

/// Measures along the W-GHZ superposition (GhzW) or the two-sided family of
/// the W-to-biseparable figure (WBisep), on a uniform x grid over [-1, 1].
std::vector<CurveRow> curve_family(CurveFamily family, int samples);

/// State of the GhzW family at mixing parameter x.
PureState ghz_w_state(double x);
/// State of the WBisep family at mixing parameter x.
PureState w_bisep_state(double x);

/// Negative-x zero of tau on the GhzW family, by bisection of the signed
/// quartic form; bisection interval shrinks below `tol`.
double ghz_w_tau_root(double tol = 1e-12);
/// Exact closed form of that root: -sqrt((128 + 36*2^(1/3) - 48*2^(2/3))/155).
double ghz_w_tau_root_closed_form();
/// Tangency point of omega and c_{a|bc} on the GhzW family (x = sqrt(2/5)),
/// located by bisection on the sign change of d(c - omega)/dx.
double ghz_w_omega_c_crossing(double tol = 1e-10);

}  // namespace threeqb
