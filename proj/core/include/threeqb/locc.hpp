#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "threeqb/measures.hpp"
#include "threeqb/rng.hpp"

namespace threeqb {

/// Haar-random normalized state: eight independent standard complex
/// Gaussians, normalized.
PureState sample_haar_state(RngStream& rng);

/// Haar-random 2x2 unitary.
SmallMatrix sample_haar_unitary_2x2(RngStream& rng);

/// One-site two-outcome pure-LOCC step. The Kraus operators are
/// A_mu = U_mu diag(sqrt(a_mu), sqrt(b_mu)) V^dag with a2 = 1-a1, b2 = 1-b1,
/// so A1^dag A1 + A2^dag A2 = I by construction.
struct TwoOutcomeProtocol {
  int target_qubit = 1;  // 1..3
  SmallMatrix v{2}, u1{2}, u2{2};
  double a1 = 1, b1 = 1;

  SmallMatrix kraus(int mu) const;  // mu in {1,2}
};

/// Uniform target qubit, Haar V/U1/U2, independent uniform a1, b1.
TwoOutcomeProtocol sample_protocol(RngStream& rng);

struct ProtocolOutcome {
  double p = 0;
  PureState state;  // normalized
};

/// Outcome probabilities and normalized post-measurement states; outcomes
/// with p < 1e-14 are dropped. Input must be normalized within 1e-10.
std::vector<ProtocolOutcome> apply_protocol(const PureState& psi,
                                            const TwoOutcomeProtocol& pr);

using MeasureFn = std::function<double(const PureState&)>;

enum class MeasureTag { Tau, Omega, Concurrence1, Concurrence2, Concurrence3 };
MeasureFn measure_function(MeasureTag tag);
const char* to_string(MeasureTag tag);

/// f(psi) - sum_mu p_mu f(psi'_mu).
double monotonicity_margin(const MeasureFn& f, const PureState& psi,
                           const TwoOutcomeProtocol& pr);

/// Fixed decade histogram of margins; bin 0 collects violations below -1e-9.
inline constexpr int kMarginBins = 10;
std::array<double, kMarginBins + 1> margin_bin_edges();

struct SuiteStats {
  long long trials = 0;
  long long violations = 0;  // margins below -1e-9
  double min_margin = 0;
  long long min_margin_trial = -1;
  PureState worst_state;
  TwoOutcomeProtocol worst_protocol;
  std::array<long long, kMarginBins> histogram{};
};

/// Monte-Carlo monotonicity check over (Haar state, random protocol) pairs.
/// Trial i draws from the substream RngStream::derive(seed, i), so the
/// statistics are reproducible and independent of worker partitioning.
SuiteStats run_monotonicity_suite(const MeasureFn& f, long long trials,
                                  std::uint64_t seed, int workers = 0);

enum class CounterexampleTarget { TauSq, OmegaSq, CFourth, NOmegaVsCSq };
const char* to_string(CounterexampleTarget t);

struct Counterexample {
  bool found = false;
  long long trial = -1;
  PureState state;
  std::optional<TwoOutcomeProtocol> protocol;  // absent for NOmegaVsCSq
  int concurrence_index = 0;                   // CFourth / NOmegaVsCSq only
  /// Monotonicity margin for the squared/fourth-power targets (< -1e-6), or
  /// n*omega - c^2 for NOmegaVsCSq (> 1e-6).
  double value = 0;
};

/// Seeded random search, biased toward structured candidates (strongly
/// damping protocols for the squared measures, GHZ-W superpositions for the
/// ordering gap). Each witness is re-verified from scratch before returning.
Counterexample find_counterexample(CounterexampleTarget target,
                                   long long max_trials, std::uint64_t seed);

}  // namespace threeqb
