#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "threeqb/canonical.hpp"

using namespace threeqb;
using namespace threeqb::testutil;

namespace {

CanonicalParams random_params(RngStream& rng, bool normalized = true) {
  CanonicalParams p;
  double sum = 0;
  for (double& e : p.eta) {
    e = rng.uniform();
    sum += e;
  }
  if (normalized)
    for (double& e : p.eta) e /= sum;
  p.theta = rng.uniform() * 3.14159265358979323846;
  return p;
}

}  // namespace

TEST_CASE("canonical_state on reference parameter sets") {
  const PureState ghz = canonical_state({{0.5, 0, 0, 0, 0.5}, 0.0});
  CHECK(norm(ghz - states::ghz()) < 1e-15);

  const PureState s000 = canonical_state({{1, 0, 0, 0, 0}, 0.0});
  CHECK(norm(s000 - states::separable()) < 1e-15);

  // (|000>+|101>+|110>)/sqrt(3) is W up to a Pauli-X on qubit 1: same measures
  const PureState wc =
      canonical_state({{1.0 / 3, 0, 1.0 / 3, 1.0 / 3, 0}, 0.0});
  CHECK(omega_measure(wc) ==
        doctest::Approx(4.0 / std::sqrt(27.0)).epsilon(1e-12));
  CHECK(three_tangle(wc) < 1e-14);
  for (int a = 1; a <= 3; ++a)
    CHECK(concurrence_split(wc, a) ==
          doctest::Approx(std::sqrt(8.0 / 9.0)).epsilon(1e-12));

  CHECK_THROWS_AS(canonical_state({{-0.1, 0, 0, 0, 1.1}, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(canonical_state({{1, 0, 0, 0, 0}, 4.0}),
                  std::invalid_argument);
}

TEST_CASE("closed forms match the tensor route on random parameters") {
  RngStream rng(40);
  for (int rep = 0; rep < 1000; ++rep) {
    const bool normalized = rep % 4 != 0;
    const CanonicalParams p = random_params(rng, normalized);
    const ClosedFormReport r = closed_form_measures(p);
    const PureState psi = canonical_state(p);
    double n2 = 0;
    for (double e : p.eta) n2 += e;
    const double scale = std::max(1.0, n2 * n2 * n2 * n2);

    CHECK(std::abs(r.c1_23_sq - std::pow(concurrence_split(psi, 1), 2)) <=
          1e-10 * scale);
    CHECK(std::abs(r.c2_13_sq - std::pow(concurrence_split(psi, 2), 2)) <=
          1e-10 * scale);
    CHECK(std::abs(r.c3_12_sq - std::pow(concurrence_split(psi, 3), 2)) <=
          1e-10 * scale);
    CHECK(std::abs(r.omega_sq - std::pow(omega_measure(psi), 2)) <=
          1e-10 * scale);
    CHECK(std::abs(r.tau_sq - std::pow(three_tangle(psi), 2)) <=
          1e-10 * scale * scale);
  }
}

TEST_CASE("closed forms at the reference points") {
  const ClosedFormReport g = closed_form_measures({{0.5, 0, 0, 0, 0.5}, 0.0});
  CHECK(g.tau_sq == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(g.omega_sq == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(g.c1_23_sq == doctest::Approx(1.0).epsilon(1e-14));

  const ClosedFormReport w =
      closed_form_measures({{1.0 / 3, 0, 1.0 / 3, 1.0 / 3, 0}, 0.0});
  CHECK(std::sqrt(w.omega_sq) ==
        doctest::Approx(4.0 / std::sqrt(27.0)).epsilon(1e-14));

  const ClosedFormReport c =
      closed_form_measures({{0.5, 0, 0.25, 0.25, 0}, 0.0});
  CHECK(c.c1_23_sq == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(c.omega_sq == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("eta4 = 0 slice reduces to the product forms") {
  RngStream rng(41);
  for (int rep = 0; rep < 200; ++rep) {
    CanonicalParams p = random_params(rng);
    p.eta[4] = 0;
    const double s = p.eta[0] + p.eta[1] + p.eta[2] + p.eta[3];
    for (double& e : p.eta) e /= s;
    const ClosedFormReport r = closed_form_measures(p);
    const double e0 = p.eta[0], e2 = p.eta[2], e3 = p.eta[3];
    CHECK(r.c1_23_sq == doctest::Approx(4 * e0 * (e2 + e3)).epsilon(1e-12));
    CHECK(r.c2_13_sq == doctest::Approx(4 * e3 * (e0 + e2)).epsilon(1e-12));
    CHECK(r.c3_12_sq == doctest::Approx(4 * e2 * (e0 + e3)).epsilon(1e-12));
    CHECK(std::sqrt(r.omega_sq) ==
          doctest::Approx(4 * std::sqrt(e0 * e2 * e3)).epsilon(1e-10));
  }
}

TEST_CASE("AM-GM bound on the eta1 = eta4 = 0 slice") {
  RngStream rng(42);
  const double bound = 4.0 / std::sqrt(27.0);
  for (int rep = 0; rep < 2000; ++rep) {
    CanonicalParams p{};
    p.eta[0] = rng.uniform();
    p.eta[2] = rng.uniform();
    p.eta[3] = rng.uniform();
    const double s = p.eta[0] + p.eta[2] + p.eta[3];
    p.eta[0] /= s;
    p.eta[2] /= s;
    p.eta[3] /= s;
    const double om = std::sqrt(closed_form_measures(p).omega_sq);
    CHECK(om <= bound + 1e-12);
  }
}

TEST_CASE("maximizations recover the known optima") {
  const auto near = [](double a, double b, double tol) {
    return std::abs(a - b) <= tol;
  };

  const MaximizeResult om = maximize(MaxObjective::OmegaOnWClosure, 15, 2024);
  CHECK(near(om.best_value, 4.0 / std::sqrt(27.0), 1e-6));
  CHECK(near(om.best.eta[0], 1.0 / 3.0, 1e-4));
  CHECK(near(om.best.eta[2], 1.0 / 3.0, 1e-4));
  CHECK(near(om.best.eta[3], 1.0 / 3.0, 1e-4));
  CHECK(near(om.best.eta[1], 0.0, 1e-4));
  CHECK(om.restart_values.size() == 15);

  const MaximizeResult sim =
      maximize(MaxObjective::SimultaneousConcurrenceOnWClosure, 15, 2024);
  CHECK(near(sim.best_value, std::sqrt(8.0 / 9.0), 1e-6));
  CHECK(near(sim.best.eta[0], 1.0 / 3.0, 1e-3));

  const MaximizeResult avg =
      maximize(MaxObjective::AverageConcurrenceOnWClosure, 15, 2024);
  CHECK(near(avg.best_value, std::sqrt(8.0 / 9.0), 1e-6));
  CHECK(near(avg.best.eta[0], 1.0 / 3.0, 1e-4));
  CHECK(near(avg.best.eta[2], 1.0 / 3.0, 1e-4));

  const MaximizeResult con = maximize(MaxObjective::OmegaGivenC1Equals1, 15, 2024);
  CHECK(near(con.best_value, 1.0 / std::sqrt(2.0), 1e-6));
  CHECK(near(con.best.eta[0], 0.5, 1e-4));
  CHECK(near(con.best.eta[2], 0.25, 1e-4));
  CHECK(near(con.best.eta[3], 0.25, 1e-4));
  // the pinned constraint holds exactly on the reported optimum
  CHECK(near(closed_form_measures(con.best).c1_23_sq, 1.0, 1e-12));

  CHECK_THROWS_AS(maximize(MaxObjective::OmegaOnWClosure, 0, 1),
                  std::invalid_argument);
}

TEST_CASE("maximize is deterministic given the seed") {
  const MaximizeResult a = maximize(MaxObjective::OmegaOnWClosure, 5, 99);
  const MaximizeResult b = maximize(MaxObjective::OmegaOnWClosure, 5, 99);
  CHECK(a.best_value == b.best_value);
  CHECK(a.restart_values == b.restart_values);
  for (int i = 0; i < 5; ++i) CHECK(a.best.eta[i] == b.best.eta[i]);
}

TEST_CASE("ghz-w curve anchors") {
  const std::vector<CurveRow> rows = curve_family(CurveFamily::GhzW, 201);
  CHECK(rows.size() == 201);

  const CurveRow& mid = rows[100];  // x = 0
  CHECK(mid.x == doctest::Approx(0.0));
  CHECK(mid.tau < 1e-12);
  CHECK(mid.omega == doctest::Approx(std::sqrt(16.0 / 27.0)).epsilon(1e-12));
  CHECK(mid.c1_23 == doctest::Approx(std::sqrt(8.0 / 9.0)).epsilon(1e-12));

  for (const CurveRow* r : {&rows.front(), &rows.back()}) {
    CHECK(r->tau == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r->omega == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r->c1_23 == doctest::Approx(1.0).epsilon(1e-12));
  }

  // normalized ordering holds on every row
  for (const CurveRow& r : rows) {
    CHECK(r.tau >= 0.0);
    CHECK(r.omega - r.tau >= -1e-10);
    for (double c : {r.c1_23, r.c2_13, r.c3_12}) {
      CHECK(c - r.omega >= -1e-10);
      CHECK(1.0 - c >= -1e-10);
    }
  }
}

TEST_CASE("w-bisep curve endpoints") {
  const std::vector<CurveRow> rows = curve_family(CurveFamily::WBisep, 101);
  const CurveRow& left = rows.front();  // x = -1: |1> (x) (|01>+|10>)/sqrt(2)
  CHECK(left.tau < 1e-14);
  CHECK(left.omega < 1e-14);
  CHECK(left.c1_23 < 1e-14);
  CHECK(left.c2_13 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(left.c3_12 == doctest::Approx(1.0).epsilon(1e-12));
  const CurveRow& right = rows.back();  // x = +1: GHZ
  CHECK(right.tau == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(curve_family(CurveFamily::GhzW, 1), std::invalid_argument);
}

TEST_CASE("tau root of the ghz-w family") {
  const double root = ghz_w_tau_root(1e-12);
  const double closed = ghz_w_tau_root_closed_form();
  CHECK(std::abs(root - closed) < 1e-10);
  CHECK(three_tangle(ghz_w_state(root)) < 1e-10);

  // The root printed in the figure caption, -4 sqrt(8 + 2*2^(1/3) -
  // 3*2^(2/3))/sqrt(155) ~ -0.770933, does not zero tau (the inner
  // coefficient 2 should read 9/4); pin the refutation.
  const double u = std::cbrt(2.0);
  const double printed = -4.0 * std::sqrt(8.0 + 2.0 * u - 3.0 * u * u) /
                         std::sqrt(155.0);
  CHECK(three_tangle(ghz_w_state(printed)) > 0.08);
  CHECK(three_tangle(ghz_w_state(printed)) < 0.081);
}

TEST_CASE("omega-c tangency sits at sqrt(2/5)") {
  const double x = ghz_w_omega_c_crossing(1e-10);
  CHECK(std::abs(x - std::sqrt(0.4)) < 1e-8);
  const PureState psi = ghz_w_state(std::sqrt(0.4));
  CHECK(omega_measure(psi) == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-12));
  CHECK(concurrence_split(psi, 1) ==
        doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-12));
}
