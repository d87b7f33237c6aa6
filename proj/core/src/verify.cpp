#include "threeqb/verify.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>
#include <vector>

#include "parallel_for.hpp"

namespace threeqb {

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("THREEQB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

struct WorstTracker {
  double value = std::numeric_limits<double>::infinity();
  long long trial = -1;
  PureState state;

  void offer(double v, long long t, const PureState& s) {
    if (v < value) {
      value = v;
      trial = t;
      state = s;
    }
  }
  void merge(const WorstTracker& o) {
    if (o.trial >= 0 && o.value < value) *this = o;
  }
};

}  // namespace

OrderingStats verify_ordering(long long haar_trials,
                              long long unnormalized_trials,
                              std::uint64_t seed, int workers) {
  workers = resolve_workers(workers);
  const long long total = haar_trials + unnormalized_trials;

  struct Chunk {
    long long violations = 0;
    WorstTracker worst;
  };
  const long long chunk_size = 8192;
  std::vector<Chunk> chunks((total + chunk_size - 1) / chunk_size);

  detail::parallel_chunks(
      total, workers, chunk_size,
      [&](long long c, long long begin, long long end) {
        Chunk& ch = chunks[c];
        for (long long i = begin; i < end; ++i) {
          RngStream rng(RngStream::derive(seed, i));
          PureState psi = sample_haar_state(rng);
          if (i >= haar_trials) psi = (0.1 + 9.9 * rng.uniform()) * psi;

          const double n = norm(psi);
          const double n2 = n * n, n4 = n2 * n2;
          const double tau = three_tangle(psi);
          const double n_om = n * omega_measure(psi);
          double min_slack = std::min({tau - 0.0, n_om - tau});
          double max_n2c = 0;
          for (int a = 1; a <= 3; ++a) {
            const double n2c = n2 * concurrence_split(psi, a);
            min_slack = std::min(min_slack, n2c - n_om);
            max_n2c = std::max(max_n2c, n2c);
          }
          min_slack = std::min(min_slack, n4 - max_n2c);
          const double rel = min_slack / std::max(n4, 1e-300);
          if (rel < -1e-10) ++ch.violations;
          ch.worst.offer(rel, i, psi);
        }
      });

  OrderingStats st;
  st.trials = total;
  WorstTracker worst;
  for (const Chunk& ch : chunks) {
    st.violations += ch.violations;
    worst.merge(ch.worst);
  }
  st.min_slack = worst.value;
  st.worst_trial = worst.trial;
  st.worst_state = worst.state;
  return st;
}

CkwStats verify_ckw(long long trials, std::uint64_t seed, double tol,
                    int workers) {
  workers = resolve_workers(workers);

  struct Chunk {
    long long violations = 0;
    long long stronger = 0;
    WorstTracker worst;  // tracks -|deviation| so "worst" is the largest
  };
  const long long chunk_size = 1024;
  std::vector<Chunk> chunks((trials + chunk_size - 1) / chunk_size);

  detail::parallel_chunks(
      trials, workers, chunk_size,
      [&](long long c, long long begin, long long end) {
        Chunk& ch = chunks[c];
        for (long long i = begin; i < end; ++i) {
          RngStream rng(RngStream::derive(seed, i));
          const PureState psi = sample_haar_state(rng);
          const double tau = three_tangle(psi);
          for (int a = 1; a <= 3; ++a) {
            const double dev = std::abs(ckw_residual(psi, a) - tau);
            if (dev >= tol) ++ch.violations;
            const double c2 = std::pow(concurrence_split(psi, a), 2);
            if (tau > c2 + 1e-10) ++ch.stronger;
            ch.worst.offer(-dev, i, psi);
          }
        }
      });

  CkwStats st;
  st.trials = trials;
  WorstTracker worst;
  for (const Chunk& ch : chunks) {
    st.violations += ch.violations;
    st.stronger_violations += ch.stronger;
    worst.merge(ch.worst);
  }
  st.max_abs_dev = worst.trial >= 0 ? -worst.value : 0.0;
  st.worst_trial = worst.trial;
  st.worst_state = worst.state;
  return st;
}

IdentityStats verify_identities(long long trials, std::uint64_t seed,
                                double tol, double kempe_tol, int workers) {
  workers = resolve_workers(workers);

  struct Chunk {
    long long violations = 0;
    double max_rel = 0;
    double max_kempe = 0;
    WorstTracker worst;
  };
  const long long chunk_size = 2048;
  std::vector<Chunk> chunks((trials + chunk_size - 1) / chunk_size);

  detail::parallel_chunks(
      trials, workers, chunk_size,
      [&](long long c, long long begin, long long end) {
        Chunk& ch = chunks[c];
        for (long long i = begin; i < end; ++i) {
          RngStream rng(RngStream::derive(seed, i));
          const PureState psi = sample_haar_state(rng);
          const InvariantReport r = lu_invariants(psi);
          const InvariantExpressed e = measures_from_invariants(r);

          const double n2 = r.n2;
          const double n4 = n2 * n2, n6 = n4 * n2, n8 = n4 * n4;
          double rel = 0;
          const auto dev = [&](double native, double expr, double scale) {
            rel = std::max(
                rel, std::abs(native - expr) /
                         std::max({std::abs(native), std::abs(expr), scale}));
          };
          dev(n2, e.n2, 1e-300);
          for (int a = 1; a <= 3; ++a) {
            const double c = r.concurrence(a);
            dev(c * c, e.c_sq[a - 1], n4);
          }
          dev(r.omega * r.omega, e.omega_sq, n6);
          dev(r.tau * r.tau, e.tau_sq, n8);

          // Kempe spread across the three {b,c} evaluations.
          double i4[3];
          int slot = 0;
          for (int a = 1; a <= 3; ++a) {
            const int b = a == 1 ? 2 : 1;
            const int cc = a == 3 ? 2 : 3;
            const SmallMatrix rbc = reduced_density(psi, {b, cc});
            const SmallMatrix rb = reduced_density_qubit(psi, b);
            const SmallMatrix rc = reduced_density_qubit(psi, cc);
            i4[slot++] = 3.0 * trace(rbc * kron(rb, rc)).real() -
                         trace(rb * rb * rb).real() -
                         trace(rc * rc * rc).real();
          }
          const double spread =
              std::max({i4[0], i4[1], i4[2]}) - std::min({i4[0], i4[1], i4[2]});
          const double kempe_rel = spread / std::max(1.0, n6);

          if (rel > tol || kempe_rel > kempe_tol) ++ch.violations;
          ch.max_rel = std::max(ch.max_rel, rel);
          ch.max_kempe = std::max(ch.max_kempe, kempe_rel);
          ch.worst.offer(-rel, i, psi);
        }
      });

  IdentityStats st;
  st.trials = trials;
  WorstTracker worst;
  for (const Chunk& ch : chunks) {
    st.violations += ch.violations;
    st.max_rel_dev = std::max(st.max_rel_dev, ch.max_rel);
    st.max_kempe_dev = std::max(st.max_kempe_dev, ch.max_kempe);
    worst.merge(ch.worst);
  }
  st.worst_trial = worst.trial;
  st.worst_state = worst.state;
  return st;
}

}  // namespace threeqb
