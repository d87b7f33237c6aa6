#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "threeqb/measures.hpp"

using namespace threeqb;
using namespace threeqb::testutil;

TEST_CASE("two-qubit pure concurrence") {
  CHECK(concurrence_pure_2qb(states::bell()) == doctest::Approx(1.0).epsilon(1e-14));

  TwoQubitState prod;  // |01>
  prod(0, 1) = 1.0;
  CHECK(concurrence_pure_2qb(prod) == 0.0);

  TwoQubitState tilted;  // sqrt(.9)|00> + sqrt(.1)|11>: c = 2 sqrt(.09) = 0.6
  tilted(0, 0) = std::sqrt(0.9);
  tilted(1, 1) = std::sqrt(0.1);
  CHECK(concurrence_pure_2qb(tilted) == doctest::Approx(0.6).epsilon(1e-14));
}

TEST_CASE("three measures on the canonical states") {
  CHECK(three_tangle(states::ghz()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(omega_measure(states::ghz()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(three_tangle(states::w()) < 1e-14);
  CHECK(omega_measure(states::w()) ==
        doctest::Approx(4.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-12));
  CHECK(omega_measure(states::bisep(1)) < 1e-14);

  for (int a = 1; a <= 3; ++a) {
    CHECK(concurrence_split(states::ghz(), a) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence_split(states::w(), a) ==
          doctest::Approx(std::sqrt(8.0 / 9.0)).epsilon(1e-12));
  }
  CHECK(concurrence_split(states::bisep(1), 1) < 1e-14);
  CHECK(concurrence_split(states::bisep(1), 2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(concurrence_split(states::ghz(), 0), std::invalid_argument);
}

TEST_CASE("lu_invariants frozen values") {
  const InvariantReport g = lu_invariants(states::ghz());
  CHECK(g.I1 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(g.I2 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(g.I3 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(g.I4 == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(g.I5 == doctest::Approx(1.0 / 16.0).epsilon(1e-12));

  const InvariantReport w = lu_invariants(states::w());
  CHECK(w.I1 == doctest::Approx(5.0 / 9.0).epsilon(1e-12));
  CHECK(w.I2 == doctest::Approx(5.0 / 9.0).epsilon(1e-12));
  CHECK(w.I3 == doctest::Approx(5.0 / 9.0).epsilon(1e-12));
  CHECK(w.I4 == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
  CHECK(w.I5 < 1e-15);

  const InvariantReport s = lu_invariants(states::separable());
  CHECK(s.I1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.I4 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.I5 < 1e-15);
}

TEST_CASE("measures from invariants") {
  const InvariantExpressed g = measures_from_invariants(lu_invariants(states::ghz()));
  CHECK(g.omega_sq == doctest::Approx(1.0).epsilon(1e-12));
  const InvariantExpressed w = measures_from_invariants(lu_invariants(states::w()));
  CHECK(w.omega_sq == doctest::Approx(16.0 / 27.0).epsilon(1e-12));

  RngStream rng(20);
  for (int rep = 0; rep < 200; ++rep) {
    const PureState psi = random_unnormalized_state(rng);
    const InvariantReport r = lu_invariants(psi);
    const InvariantExpressed e = measures_from_invariants(r);
    const double n2 = r.n2, n4 = n2 * n2, n6 = n4 * n2, n8 = n4 * n4;
    CHECK(std::abs(r.tau * r.tau - e.tau_sq) <=
          1e-10 * std::max({r.tau * r.tau, e.tau_sq, n8}));
    CHECK(std::abs(r.omega * r.omega - e.omega_sq) <=
          1e-10 * std::max({r.omega * r.omega, e.omega_sq, n6}));
    for (int a = 1; a <= 3; ++a) {
      const double c2 = std::pow(r.concurrence(a), 2);
      CHECK(std::abs(c2 - e.c_sq[a - 1]) <= 1e-10 * std::max({c2, e.c_sq[a - 1], n4}));
    }
  }
}

TEST_CASE("entanglement ordering on random states, normalized and not") {
  RngStream rng(21);
  for (int rep = 0; rep < 500; ++rep) {
    PureState psi = random_unnormalized_state(rng);
    if (rep % 2 == 0) psi = (0.1 + 9.9 * rng.uniform()) * psi;
    const double n = norm(psi);
    const double n2 = n * n, n4 = n2 * n2;
    const double tau = three_tangle(psi);
    const double nom = n * omega_measure(psi);
    CHECK(tau >= 0.0);
    CHECK(nom - tau >= -1e-10 * n4);
    for (int a = 1; a <= 3; ++a) {
      const double n2c = n2 * concurrence_split(psi, a);
      CHECK(n2c - nom >= -1e-10 * n4);
      CHECK(n4 - n2c >= -1e-10 * n4);
    }
  }
}

TEST_CASE("InvariantReport internal consistency") {
  RngStream rng(22);
  for (int rep = 0; rep < 100; ++rep) {
    const InvariantReport r = lu_invariants(random_unnormalized_state(rng));
    const double n4 = r.n2 * r.n2, n8 = n4 * n4;
    CHECK(r.tau * r.tau ==
          doctest::Approx(16.0 * r.I5).epsilon(1e-9).scale(std::max(1.0, n8)));
    CHECK(r.tau <= r.n2 * r.n2 + 1e-10 * n4);
  }
}

TEST_CASE("wootters concurrence") {
  // pure Bell projector
  SmallMatrix bell_proj(4);
  const TwoQubitState b = states::bell();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      bell_proj(r, c) = b.amp[r] * std::conj(b.amp[c]);
  CHECK(wootters_concurrence_mixed(bell_proj) == doctest::Approx(1.0).epsilon(1e-10));

  CHECK(wootters_concurrence_mixed(Complex(0.25, 0) * SmallMatrix::identity(4)) == 0.0);

  // rho_12 of W: CKW symmetry gives c = 2/3
  CHECK(wootters_concurrence_mixed(reduced_density(states::w(), {1, 2})) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-10));

  CHECK_THROWS_AS(wootters_concurrence_mixed(SmallMatrix::identity(4)),
                  std::invalid_argument);  // trace 4
  CHECK_THROWS_AS(wootters_concurrence_mixed(SmallMatrix::identity(2)),
                  std::invalid_argument);  // wrong dimension
}

TEST_CASE("CKW residual equals the three-tangle") {
  CHECK(ckw_residual(states::ghz(), 1) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(ckw_residual(states::w(), 1)) < 1e-10);

  RngStream rng(23);
  for (int rep = 0; rep < 100; ++rep) {
    const PureState psi = sample_haar_state(rng);
    const double tau = three_tangle(psi);
    for (int a = 1; a <= 3; ++a) {
      const double res = ckw_residual(psi, a);
      CHECK(std::abs(res - tau) < 1e-8);
      CHECK(res > -1e-9);  // monogamy
      const double c2 = std::pow(concurrence_split(psi, a), 2);
      CHECK(tau <= c2 + 1e-10);  // stronger bound
    }
  }

  CHECK_THROWS_AS(ckw_residual(2.0 * states::ghz(), 1), std::invalid_argument);
}

TEST_CASE("equality certificates") {
  // rho_a = I/2 for GHZ, so each c_{a|bc} = n^2 = 1 exactly
  for (int a = 1; a <= 3; ++a)
    CHECK(concurrence_split(states::ghz(), a) == doctest::Approx(1.0).epsilon(1e-10));
  // tau = n omega on GHZ and T(GHZ) is proportional to flip(GHZ)
  CHECK(three_tangle(states::ghz()) ==
        doctest::Approx(omega_measure(states::ghz())).epsilon(1e-12));
  const CubicTensor t = cubic_tensor(states::ghz());
  const PureState f = spin_flip(states::ghz());
  const Complex ratio = t.amp[0] / f.amp[0];
  double resid = 0;
  for (int i = 0; i < 8; ++i) resid += std::abs(t.amp[i] - ratio * f.amp[i]);
  CHECK(resid < 1e-10);
}

TEST_CASE("Cayley-Hamilton trace identity for 2x2 matrices") {
  RngStream rng(24);
  for (int rep = 0; rep < 200; ++rep) {
    const SmallMatrix a = random_ginibre(rng, 2);
    const Complex t1 = trace(a);
    const Complex t2 = trace(a * a);
    const Complex t3 = trace(a * a * a);
    const Complex lhs = 2.0 * t1 * t2 - (2.0 / 3.0) * t1 * t1 * t1;
    const Complex rhs = (4.0 / 3.0) * t3;
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}
