#pragma once

#include <cmath>

#include "threeqb/locc.hpp"
#include "threeqb/rng.hpp"

namespace threeqb::testutil {

inline SmallMatrix random_ginibre(RngStream& rng, int dim) {
  SmallMatrix g(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_gaussian();
  return g;
}

inline SmallMatrix random_hermitian(RngStream& rng, int dim) {
  const SmallMatrix g = random_ginibre(rng, dim);
  return Complex(0.5, 0) * (g + adjoint(g));
}

inline SmallMatrix random_psd(RngStream& rng, int dim) {
  const SmallMatrix g = random_ginibre(rng, dim);
  return Complex(0.25, 0) * (adjoint(g) * g);
}

// Random invertible 2x2 rescaled to determinant one.
inline SmallMatrix random_sl2(RngStream& rng) {
  for (;;) {
    const SmallMatrix a = random_ginibre(rng, 2);
    const Complex det = determinant(a);
    if (std::abs(det) < 0.1) continue;
    return (1.0 / std::sqrt(det)) * a;
  }
}

inline PureState random_unnormalized_state(RngStream& rng) {
  PureState psi;
  for (Complex& a : psi.amp) a = rng.complex_gaussian();
  return psi;
}

}  // namespace threeqb::testutil
