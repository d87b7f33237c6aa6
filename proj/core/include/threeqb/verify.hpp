#pragma once

#include <cstdint>

#include "threeqb/locc.hpp"

namespace threeqb {

/// Worker count for the verification suites: `requested` if positive,
/// otherwise THREEQB_THREADS from the environment, otherwise the available
/// hardware parallelism. Results never depend on the worker count.
int resolve_workers(int requested = 0);

struct OrderingStats {
  long long trials = 0;
  long long violations = 0;
  double min_slack = 0;  // min over states of min inequality slack / n^4
  long long worst_trial = -1;
  PureState worst_state;
};

/// Checks 0 <= tau <= n*omega <= n^2*c_{a|bc} <= n^4 (slack >= -1e-10 n^4)
/// on Haar states plus unnormalized states scaled uniformly in [0.1, 10].
OrderingStats verify_ordering(long long haar_trials,
                              long long unnormalized_trials,
                              std::uint64_t seed, int workers = 0);

struct CkwStats {
  long long trials = 0;
  long long violations = 0;         // |residual - tau| >= tol
  long long stronger_violations = 0;  // tau > c^2 beyond slack
  double max_abs_dev = 0;
  long long worst_trial = -1;
  PureState worst_state;
};

/// CKW equality |c^2_{a|bc} - c^2_{a|b} - c^2_{a|c} - tau| < tol for all
/// pivots on Haar states, plus the stronger bound tau <= c^2_{a|bc}.
CkwStats verify_ckw(long long trials, std::uint64_t seed, double tol = 1e-8,
                    int workers = 0);

struct IdentityStats {
  long long trials = 0;
  long long violations = 0;
  double max_rel_dev = 0;    // native vs invariant-expressed, worst identity
  double max_kempe_dev = 0;  // spread of I4 across the three {b,c} pairs
  long long worst_trial = -1;
  PureState worst_state;
};

/// Native (n^2, c^2, omega^2, tau^2) against the invariant expressions, and
/// the Kempe invariant across its three evaluations.
IdentityStats verify_identities(long long trials, std::uint64_t seed,
                                double tol = 1e-10, double kempe_tol = 1e-11,
                                int workers = 0);

}  // namespace threeqb
