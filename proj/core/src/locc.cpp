#include "threeqb/locc.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "parallel_for.hpp"

namespace threeqb {

PureState sample_haar_state(RngStream& rng) {
  PureState psi;
  for (Complex& a : psi.amp) a = rng.complex_gaussian();
  const double n = norm(psi);
  return (1.0 / n) * psi;
}

SmallMatrix sample_haar_unitary_2x2(RngStream& rng) {
  // QR of a Ginibre matrix by Gram-Schmidt, with the R-diagonal phases
  // divided out so the distribution is exactly Haar.
  Complex z00 = rng.complex_gaussian(), z01 = rng.complex_gaussian();
  Complex z10 = rng.complex_gaussian(), z11 = rng.complex_gaussian();
  double c0 = std::sqrt(std::norm(z00) + std::norm(z10));
  while (c0 == 0.0) {
    z00 = rng.complex_gaussian();
    z10 = rng.complex_gaussian();
    c0 = std::sqrt(std::norm(z00) + std::norm(z10));
  }
  Complex q00 = z00 / c0, q10 = z10 / c0;
  const Complex r01 = std::conj(q00) * z01 + std::conj(q10) * z11;
  Complex w0 = z01 - r01 * q00, w1 = z11 - r01 * q10;
  const double c1 = std::sqrt(std::norm(w0) + std::norm(w1));
  Complex q01, q11;
  if (c1 == 0.0) {
    q01 = -std::conj(q10);
    q11 = std::conj(q00);
  } else {
    q01 = w0 / c1;
    q11 = w1 / c1;
  }
  // r00 = c0 > 0 already; fix the phase of the second column via r11.
  const Complex r11 = std::conj(q01) * z01 + std::conj(q11) * z11;
  const double ar11 = std::abs(r11);
  if (ar11 > 0) {
    const Complex ph = r11 / ar11;
    q01 /= ph;
    q11 /= ph;
  }
  SmallMatrix u(2);
  u(0, 0) = q00;
  u(1, 0) = q10;
  u(0, 1) = q01;
  u(1, 1) = q11;
  return u;
}

SmallMatrix TwoOutcomeProtocol::kraus(int mu) const {
  if (mu != 1 && mu != 2)
    throw std::invalid_argument("kraus: mu must be 1 or 2");
  const double a = mu == 1 ? a1 : 1.0 - a1;
  const double b = mu == 1 ? b1 : 1.0 - b1;
  SmallMatrix d(2);
  d(0, 0) = std::sqrt(a);
  d(1, 1) = std::sqrt(b);
  return (mu == 1 ? u1 : u2) * d * adjoint(v);
}

TwoOutcomeProtocol sample_protocol(RngStream& rng) {
  TwoOutcomeProtocol pr;
  pr.target_qubit = 1 + static_cast<int>(rng.uniform_index(3));
  pr.v = sample_haar_unitary_2x2(rng);
  pr.u1 = sample_haar_unitary_2x2(rng);
  pr.u2 = sample_haar_unitary_2x2(rng);
  pr.a1 = rng.uniform();
  pr.b1 = rng.uniform();
  return pr;
}

std::vector<ProtocolOutcome> apply_protocol(const PureState& psi,
                                            const TwoOutcomeProtocol& pr) {
  if (std::abs(norm(psi) - 1.0) > 1e-10)
    throw std::invalid_argument("apply_protocol: state must be normalized");
  std::vector<ProtocolOutcome> outs;
  for (int mu = 1; mu <= 2; ++mu) {
    const PureState branch =
        apply_local(psi, pr.kraus(mu), pr.target_qubit);
    const double n = norm(branch);
    const double p = n * n;
    if (p < 1e-14) continue;  // the protocol restriction p_mu != 0
    outs.push_back({p, (1.0 / n) * branch});
  }
  return outs;
}

MeasureFn measure_function(MeasureTag tag) {
  switch (tag) {
    case MeasureTag::Tau:
      return [](const PureState& s) { return three_tangle(s); };
    case MeasureTag::Omega:
      return [](const PureState& s) { return omega_measure(s); };
    case MeasureTag::Concurrence1:
      return [](const PureState& s) { return concurrence_split(s, 1); };
    case MeasureTag::Concurrence2:
      return [](const PureState& s) { return concurrence_split(s, 2); };
    case MeasureTag::Concurrence3:
      return [](const PureState& s) { return concurrence_split(s, 3); };
  }
  throw std::invalid_argument("measure_function: unknown tag");
}

const char* to_string(MeasureTag tag) {
  switch (tag) {
    case MeasureTag::Tau: return "tau";
    case MeasureTag::Omega: return "omega";
    case MeasureTag::Concurrence1: return "c1_23";
    case MeasureTag::Concurrence2: return "c2_13";
    case MeasureTag::Concurrence3: return "c3_12";
  }
  return "?";
}

double monotonicity_margin(const MeasureFn& f, const PureState& psi,
                           const TwoOutcomeProtocol& pr) {
  double avg = 0;
  for (const ProtocolOutcome& out : apply_protocol(psi, pr))
    avg += out.p * f(out.state);
  return f(psi) - avg;
}

std::array<double, kMarginBins + 1> margin_bin_edges() {
  return {-std::numeric_limits<double>::infinity(), -1e-9, 0.0, 1e-12, 1e-9,
          1e-6,  1e-3, 1e-2, 1e-1, 1.0,
          std::numeric_limits<double>::infinity()};
}

SuiteStats run_monotonicity_suite(const MeasureFn& f, long long trials,
                                  std::uint64_t seed, int workers) {
  if (trials < 1)
    throw std::invalid_argument("run_monotonicity_suite: trials must be >= 1");

  struct Chunk {
    long long violations = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    long long min_trial = -1;
    PureState worst_state;
    TwoOutcomeProtocol worst_protocol;
    std::array<long long, kMarginBins> histogram{};
  };
  const long long chunk_size = 4096;
  const long long nchunks = (trials + chunk_size - 1) / chunk_size;
  std::vector<Chunk> chunks(nchunks);
  const auto edges = margin_bin_edges();

  detail::parallel_chunks(
      trials, workers, chunk_size,
      [&](long long c, long long begin, long long end) {
        Chunk& ch = chunks[c];
        for (long long i = begin; i < end; ++i) {
          RngStream rng(RngStream::derive(seed, i));
          const PureState psi = sample_haar_state(rng);
          const TwoOutcomeProtocol pr = sample_protocol(rng);
          const double m = monotonicity_margin(f, psi, pr);
          if (m < -1e-9) ++ch.violations;
          if (m < ch.min_margin) {
            ch.min_margin = m;
            ch.min_trial = i;
            ch.worst_state = psi;
            ch.worst_protocol = pr;
          }
          for (int b = 0; b < kMarginBins; ++b)
            if (m >= edges[b] && m < edges[b + 1]) {
              ++ch.histogram[b];
              break;
            }
        }
      });

  SuiteStats st;
  st.trials = trials;
  st.min_margin = std::numeric_limits<double>::infinity();
  for (const Chunk& ch : chunks) {
    st.violations += ch.violations;
    for (int b = 0; b < kMarginBins; ++b) st.histogram[b] += ch.histogram[b];
    if (ch.min_trial >= 0 && ch.min_margin < st.min_margin) {
      st.min_margin = ch.min_margin;
      st.min_margin_trial = ch.min_trial;
      st.worst_state = ch.worst_state;
      st.worst_protocol = ch.worst_protocol;
    }
  }
  return st;
}

namespace {

double measure_sq_margin(CounterexampleTarget target, int a,
                         const PureState& psi, const TwoOutcomeProtocol& pr) {
  const auto f = [&](const PureState& s) {
    switch (target) {
      case CounterexampleTarget::TauSq: {
        const double t = three_tangle(s);
        return t * t;
      }
      case CounterexampleTarget::OmegaSq: {
        const double o = omega_measure(s);
        return o * o;
      }
      default: {
        const double c = concurrence_split(s, a);
        return c * c * c * c;
      }
    }
  };
  double avg = 0;
  for (const ProtocolOutcome& out : apply_protocol(psi, pr))
    avg += out.p * f(out.state);
  return f(psi) - avg;
}

// Strongly damping protocols (a1 -> 1, b1 -> 0) concentrate the convexity
// violations of the squared measures.
TwoOutcomeProtocol sample_damping_protocol(RngStream& rng) {
  TwoOutcomeProtocol pr = sample_protocol(rng);
  pr.a1 = 1.0 - 0.05 * rng.uniform();
  pr.b1 = 0.05 * rng.uniform();
  return pr;
}

}  // namespace

const char* to_string(CounterexampleTarget t) {
  switch (t) {
    case CounterexampleTarget::TauSq: return "tau_sq";
    case CounterexampleTarget::OmegaSq: return "omega_sq";
    case CounterexampleTarget::CFourth: return "c_fourth";
    case CounterexampleTarget::NOmegaVsCSq: return "n_omega_vs_c_sq";
  }
  return "?";
}

Counterexample find_counterexample(CounterexampleTarget target,
                                   long long max_trials, std::uint64_t seed) {
  if (max_trials < 1)
    throw std::invalid_argument("find_counterexample: max_trials must be >= 1");
  Counterexample ce;

  if (target == CounterexampleTarget::NOmegaVsCSq) {
    for (long long i = 0; i < max_trials; ++i) {
      RngStream rng(RngStream::derive(seed, i));
      PureState psi;
      if (i % 2 == 0) {
        // GHZ-W superpositions: omega peaks above c^2 around the tangency.
        const double x = 0.2 + 0.7 * rng.uniform();
        psi = std::sqrt(1 - x * x) * states::w() + x * states::ghz();
      } else {
        psi = sample_haar_state(rng);
      }
      const double om = omega_measure(psi);  // n = 1
      for (int a = 1; a <= 3; ++a) {
        const double c = concurrence_split(psi, a);
        if (om > c * c + 1e-6) {
          ce.found = true;
          ce.trial = i;
          ce.state = psi;
          ce.concurrence_index = a;
          ce.value = om - c * c;
          break;
        }
      }
      if (ce.found) break;
    }
  } else {
    for (long long i = 0; i < max_trials && !ce.found; ++i) {
      RngStream rng(RngStream::derive(seed, i));
      const PureState psi = sample_haar_state(rng);
      const TwoOutcomeProtocol pr =
          (i % 2 == 0) ? sample_damping_protocol(rng) : sample_protocol(rng);
      const int amax = target == CounterexampleTarget::CFourth ? 3 : 1;
      for (int a = 1; a <= amax; ++a) {
        const double m = measure_sq_margin(target, a, psi, pr);
        if (m < -1e-6) {
          ce.found = true;
          ce.trial = i;
          ce.state = psi;
          ce.protocol = pr;
          ce.concurrence_index =
              target == CounterexampleTarget::CFourth ? a : 0;
          ce.value = m;
          break;
        }
      }
    }
  }

  if (ce.found) {
    // Re-verify from scratch before handing the witness out.
    if (target == CounterexampleTarget::NOmegaVsCSq) {
      const double om = omega_measure(ce.state);
      const double c = concurrence_split(ce.state, ce.concurrence_index);
      if (!(om > c * c + 1e-6))
        throw std::runtime_error("find_counterexample: witness failed re-check");
    } else {
      const double m = measure_sq_margin(
          target, std::max(1, ce.concurrence_index), ce.state, *ce.protocol);
      if (!(m < -1e-6))
        throw std::runtime_error("find_counterexample: witness failed re-check");
    }
  }
  return ce;
}

}  // namespace threeqb
