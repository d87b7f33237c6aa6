#include "threeqb/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "threeqb/rng.hpp"

namespace threeqb {

PureState canonical_state(const CanonicalParams& p) {
  for (double e : p.eta)
    if (!(e >= 0))
      throw std::invalid_argument("canonical_state: eta must be nonnegative");
  if (!(p.theta >= 0 && p.theta <= std::numbers::pi))
    throw std::invalid_argument("canonical_state: theta must be in [0, pi]");
  PureState s;
  s(0, 0, 0) = std::sqrt(p.eta[0]);
  s(1, 0, 0) = std::polar(std::sqrt(p.eta[1]), p.theta);
  s(1, 0, 1) = std::sqrt(p.eta[2]);
  s(1, 1, 0) = std::sqrt(p.eta[3]);
  s(1, 1, 1) = std::sqrt(p.eta[4]);
  return s;
}

ClosedFormReport closed_form_measures(const CanonicalParams& p) {
  const double e0 = p.eta[0], e1 = p.eta[1], e2 = p.eta[2], e3 = p.eta[3],
               e4 = p.eta[4];
  const double n2 = e0 + e1 + e2 + e3 + e4;
  ClosedFormReport r;
  r.delta = std::polar(std::sqrt(e1 * e4), p.theta) - std::sqrt(e2 * e3);
  const double d2 = std::norm(r.delta);
  const double raw[5] = {
      4 * e0 * (e2 + e3 + e4),
      4 * e0 * (e3 + e4) + 4 * d2,
      4 * e0 * (e2 + e4) + 4 * d2,
      4 * e0 * e4 * n2 - 16 * e0 * std::sqrt(e2 * e3) * r.delta.real(),
      16 * e0 * e0 * e4 * e4,
  };
  double clamped[5];
  for (int i = 0; i < 5; ++i) {
    if (raw[i] < -1e-12 * std::max(1.0, n2 * n2 * n2))
      throw std::runtime_error("closed_form_measures: negative squared value");
    clamped[i] = std::max(raw[i], 0.0);
  }
  r.c1_23_sq = clamped[0];
  r.c2_13_sq = clamped[1];
  r.c3_12_sq = clamped[2];
  r.omega_sq = clamped[3];
  r.tau_sq = clamped[4];
  return r;
}

namespace {

// ---- objective domains ---------------------------------------------------
//
// W-closure objectives pin eta4 = 0 and map four free reals through a
// squared-softmax onto the simplex. The c1 = 1 objective pins
// eta0 = 1/(4(eta2+eta3)); feasibility under the simplex constraint forces
// eta2+eta3 = 1/2 and eta1 = 0 exactly, so only the eta2:eta3 ratio is free.

CanonicalParams params_w_closure(const std::vector<double>& u) {
  double s = 0;
  for (double x : u) s += x * x;
  CanonicalParams p;
  if (s == 0) {
    p.eta = {1, 0, 0, 0, 0};
    return p;
  }
  for (int i = 0; i < 4; ++i) p.eta[i] = u[i] * u[i] / s;
  p.eta[4] = 0;
  return p;
}

CanonicalParams params_c1_pinned(const std::vector<double>& u) {
  const double t0 = u[0] * u[0], t1 = u[1] * u[1];
  const double s = t0 + t1;
  CanonicalParams p;
  if (s == 0) {
    p.eta = {0.5, 0, 0.25, 0.25, 0};
    return p;
  }
  p.eta[2] = 0.5 * t0 / s;
  p.eta[3] = 0.5 * t1 / s;
  p.eta[0] = 1.0 / (4.0 * (p.eta[2] + p.eta[3]));
  p.eta[1] = 0;
  p.eta[4] = 0;
  return p;
}

struct Objective {
  int dim;
  CanonicalParams (*map)(const std::vector<double>&);
  double (*value)(const CanonicalParams&);
};

double value_omega(const CanonicalParams& p) {
  return std::sqrt(closed_form_measures(p).omega_sq);
}

double value_min_concurrence(const CanonicalParams& p) {
  const ClosedFormReport r = closed_form_measures(p);
  return std::sqrt(std::min({r.c1_23_sq, r.c2_13_sq, r.c3_12_sq}));
}

double value_avg_concurrence(const CanonicalParams& p) {
  const ClosedFormReport r = closed_form_measures(p);
  return (std::sqrt(r.c1_23_sq) + std::sqrt(r.c2_13_sq) +
          std::sqrt(r.c3_12_sq)) /
         3.0;
}

Objective objective_for(MaxObjective o) {
  switch (o) {
    case MaxObjective::OmegaOnWClosure:
      return {4, params_w_closure, value_omega};
    case MaxObjective::SimultaneousConcurrenceOnWClosure:
      return {4, params_w_closure, value_min_concurrence};
    case MaxObjective::AverageConcurrenceOnWClosure:
      return {4, params_w_closure, value_avg_concurrence};
    case MaxObjective::OmegaGivenC1Equals1:
      return {2, params_c1_pinned, value_omega};
  }
  throw std::invalid_argument("maximize: unknown objective");
}

// ---- Nelder-Mead ----------------------------------------------------------

struct NmPoint {
  std::vector<double> x;
  double f;  // value being maximized
};

double simplex_diameter(const std::vector<NmPoint>& s) {
  double d = 0;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j) {
      double q = 0;
      for (size_t k = 0; k < s[i].x.size(); ++k) {
        const double dx = s[i].x[k] - s[j].x[k];
        q += dx * dx;
      }
      d = std::max(d, q);
    }
  return std::sqrt(d);
}

NmPoint nelder_mead_max(const Objective& obj, const std::vector<double>& start) {
  const int n = obj.dim;
  const auto eval = [&](const std::vector<double>& u) {
    return obj.value(obj.map(u));
  };

  std::vector<NmPoint> simplex;
  simplex.push_back({start, eval(start)});
  for (int i = 0; i < n; ++i) {
    std::vector<double> v = start;
    v[i] += (v[i] >= 0 ? 0.25 : -0.25);
    simplex.push_back({v, eval(v)});
  }

  const double alpha = 1.0, gamma = 2.0, beta = 0.5, sigma = 0.5;
  for (int iter = 0; iter < 20000; ++iter) {
    std::sort(simplex.begin(), simplex.end(),
              [](const NmPoint& a, const NmPoint& b) { return a.f > b.f; });
    if (simplex_diameter(simplex) < 1e-10) break;

    std::vector<double> centroid(n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) centroid[k] += simplex[i].x[k];
    }
    for (double& c : centroid) c /= n;
    NmPoint& worst = simplex.back();

    const auto along = [&](double t) {
      std::vector<double> v(n);
      for (int k = 0; k < n; ++k)
        v[k] = centroid[k] + t * (centroid[k] - worst.x[k]);
      return v;
    };

    std::vector<double> xr = along(alpha);
    const double fr = eval(xr);
    if (fr > simplex[0].f) {
      std::vector<double> xe = along(gamma);
      const double fe = eval(xe);
      if (fe > fr)
        worst = {std::move(xe), fe};
      else
        worst = {std::move(xr), fr};
      continue;
    }
    if (fr > simplex[n - 1].f) {
      worst = {std::move(xr), fr};
      continue;
    }
    std::vector<double> xc = along(-beta);
    const double fc = eval(xc);
    if (fc > worst.f) {
      worst = {std::move(xc), fc};
      continue;
    }
    for (int i = 1; i <= n; ++i) {
      for (int k = 0; k < n; ++k)
        simplex[i].x[k] =
            simplex[0].x[k] + sigma * (simplex[i].x[k] - simplex[0].x[k]);
      simplex[i].f = eval(simplex[i].x);
    }
  }
  std::sort(simplex.begin(), simplex.end(),
            [](const NmPoint& a, const NmPoint& b) { return a.f > b.f; });
  return simplex[0];
}

}  // namespace

MaximizeResult maximize(MaxObjective objective, int restarts,
                        std::uint64_t seed) {
  if (restarts < 1)
    throw std::invalid_argument("maximize: restarts must be >= 1");
  const Objective obj = objective_for(objective);

  MaximizeResult out;
  out.best_value = -std::numeric_limits<double>::infinity();
  out.restart_values.reserve(restarts);
  for (int r = 0; r < restarts; ++r) {
    RngStream rng(RngStream::derive(seed, r));
    std::vector<double> start(obj.dim);
    for (double& x : start) x = 2.0 * rng.uniform() - 1.0;
    const NmPoint opt = nelder_mead_max(obj, start);
    out.restart_values.push_back(opt.f);
    if (opt.f > out.best_value) {
      out.best_value = opt.f;
      out.best = obj.map(opt.x);
    }
  }
  return out;
}

PureState ghz_w_state(double x) {
  return std::sqrt(std::max(0.0, 1.0 - x * x)) * states::w() +
         x * states::ghz();
}

PureState w_bisep_state(double x) {
  const double wamp = std::sqrt(std::max(0.0, 1.0 - x * x));
  if (x >= 0) return wamp * states::w() + x * states::ghz();
  // |1> (x) (|01>+|10>)/sqrt(2), LU-equivalent with |0> (x) Bell, chosen so
  // the superposition with W stays inside the W closure.
  PureState prime;
  prime(1, 0, 1) = prime(1, 1, 0) = 1.0 / std::sqrt(2.0);
  return wamp * states::w() + (-x) * prime;
}

std::vector<CurveRow> curve_family(CurveFamily family, int samples) {
  if (samples < 2)
    throw std::invalid_argument("curve_family: samples must be >= 2");
  std::vector<CurveRow> rows;
  rows.reserve(samples);
  for (int s = 0; s < samples; ++s) {
    const double x = -1.0 + 2.0 * s / (samples - 1);
    const PureState psi =
        family == CurveFamily::GhzW ? ghz_w_state(x) : w_bisep_state(x);
    CurveRow row;
    row.x = x;
    row.tau = three_tangle(psi);
    row.omega = omega_measure(psi);
    row.c1_23 = concurrence_split(psi, 1);
    row.c2_13 = concurrence_split(psi, 2);
    row.c3_12 = concurrence_split(psi, 3);
    rows.push_back(row);
  }
  return rows;
}

double ghz_w_tau_root(double tol) {
  // Amplitudes are real along the family, so the quartic form is real and
  // changes sign at the tau zero.
  const auto q = [](double x) { return quartic_form(ghz_w_state(x)).real(); };
  double lo = -0.9, hi = -0.5;
  double flo = q(lo);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = q(mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double ghz_w_tau_root_closed_form() {
  const double u = std::cbrt(2.0);
  return -std::sqrt((128.0 + 36.0 * u - 48.0 * u * u) / 155.0);
}

double ghz_w_omega_c_crossing(double tol) {
  // omega <= c holds identically, so the curves touch rather than cross;
  // bisect on the sign change of d(c - omega)/dx around the tangency.
  const auto gap = [](double x) {
    const PureState psi = ghz_w_state(x);
    return concurrence_split(psi, 1) - omega_measure(psi);
  };
  const double h = 1e-6;
  const auto slope = [&](double x) { return gap(x + h) - gap(x - h); };
  double lo = 0.45, hi = 0.8;
  double slo = slope(lo);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double sm = slope(mid);
    if ((sm > 0) == (slo > 0)) {
      lo = mid;
      slo = sm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace threeqb
