#include "threeqb/classify.hpp"

#include <cmath>

namespace threeqb {

const char* to_string(SloccTag tag) {
  switch (tag) {
    case SloccTag::Null: return "Null";
    case SloccTag::Separable: return "1|2|3";
    case SloccTag::Bisep1_23: return "1|23";
    case SloccTag::Bisep2_13: return "2|13";
    case SloccTag::Bisep3_12: return "3|12";
    case SloccTag::W: return "W";
    case SloccTag::GHZ: return "GHZ";
  }
  return "?";
}

int fts_rank(SloccTag tag) {
  switch (tag) {
    case SloccTag::Null: return 0;
    case SloccTag::Separable: return 1;
    case SloccTag::Bisep1_23:
    case SloccTag::Bisep2_13:
    case SloccTag::Bisep3_12: return 2;
    case SloccTag::W: return 3;
    case SloccTag::GHZ: return 4;
  }
  return -1;
}

SloccClass classify_witness(const ClassWitness& w, double tol,
                            double max_amplitude) {
  if (tol <= 0) throw std::invalid_argument("classify: tol must be positive");
  SloccClass out;
  out.witness = w;

  // Null first: an all-zero vector, or n^4 vanishing against the amplitude
  // scale (the latter cannot fire for finite nonzero input; kept for form).
  const double amp4 = std::pow(max_amplitude, 4);
  if (max_amplitude == 0.0 || w.n4 < tol * amp4) {
    out.tag = SloccTag::Null;
    out.rank = 0;
    return out;
  }

  const double threshold = tol * w.n4;
  const bool c1 = w.n2c1_23 >= threshold;
  const bool c2 = w.n2c2_13 >= threshold;
  const bool c3 = w.n2c3_12 >= threshold;
  const bool om = w.n_omega >= threshold;
  const bool ta = w.tau >= threshold;

  const int nc = int(c1) + int(c2) + int(c3);
  if (ta) {
    if (!(om && nc == 3))
      throw ClassificationError(
          "inconsistent vanishing pattern (tau > 0 with vanishing omega or "
          "concurrence); check the tolerance");
    out.tag = SloccTag::GHZ;
  } else if (om) {
    if (nc != 3)
      throw ClassificationError(
          "inconsistent vanishing pattern (omega > 0 with a vanishing "
          "concurrence); check the tolerance");
    out.tag = SloccTag::W;
  } else if (nc == 3) {
    throw ClassificationError(
        "inconsistent vanishing pattern (all concurrences > 0 with omega = 0);"
        " check the tolerance");
  } else if (nc == 2) {
    out.tag = !c1 ? SloccTag::Bisep1_23
                  : (!c2 ? SloccTag::Bisep2_13 : SloccTag::Bisep3_12);
  } else if (nc == 1) {
    throw ClassificationError(
        "inconsistent vanishing pattern (exactly one nonzero concurrence); "
        "check the tolerance");
  } else {
    out.tag = SloccTag::Separable;
  }
  out.rank = fts_rank(out.tag);
  return out;
}

SloccClass classify(const PureState& psi, double tol) {
  check_finite(psi);
  const double n = norm(psi);
  const double n2 = n * n;

  ClassWitness w;
  w.n4 = n2 * n2;
  w.n2c1_23 = n2 * concurrence_split(psi, 1);
  w.n2c2_13 = n2 * concurrence_split(psi, 2);
  w.n2c3_12 = n2 * concurrence_split(psi, 3);
  w.n_omega = n * omega_measure(psi);
  w.tau = three_tangle(psi);

  double max_amp = 0;
  for (const Complex& a : psi.amp) max_amp = std::max(max_amp, std::abs(a));

  // Values within a decade of the zero threshold sit on a class boundary
  // where the answer is conditioning-limited.
  const double threshold = tol * w.n4;
  for (double v : {w.n2c1_23, w.n2c2_13, w.n2c3_12, w.n_omega, w.tau})
    if (v >= 0.1 * threshold && v <= 10.0 * threshold) w.marginal = true;

  return classify_witness(w, tol, max_amp);
}

ClassOrder class_order(const SloccClass& x, const SloccClass& y) {
  if (x.tag == y.tag) return ClassOrder::Equal;
  if (x.rank == y.rank) return ClassOrder::Incomparable;
  return x.rank < y.rank ? ClassOrder::Less : ClassOrder::Greater;
}

}  // namespace threeqb
