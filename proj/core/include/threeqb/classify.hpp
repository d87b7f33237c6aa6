#pragma once

#include <stdexcept>
#include <string>

#include "threeqb/measures.hpp"

namespace threeqb {

enum class SloccTag { Null, Separable, Bisep1_23, Bisep2_13, Bisep3_12, W, GHZ };

const char* to_string(SloccTag tag);
int fts_rank(SloccTag tag);

/// Degree-4 normalized quantities used for thresholding, plus a flag marking
/// values that sit within a decade of the zero threshold.
struct ClassWitness {
  double n4 = 0;
  double n2c1_23 = 0, n2c2_13 = 0, n2c3_12 = 0;
  double n_omega = 0;
  double tau = 0;
  bool marginal = false;
};

struct SloccClass {
  SloccTag tag = SloccTag::Null;
  int rank = 0;
  ClassWitness witness;
};

/// Raised when the zero/nonzero pattern matches no class row, which signals a
/// misconfigured tolerance rather than a valid state family.
class ClassificationError : public std::runtime_error {
 public:
  explicit ClassificationError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Assigns the SLOCC class from the vanishing pattern of the degree-4
/// quantities (n^4, n^2 c_{a|bc}, n omega, tau); a quantity counts as zero
/// iff it is below tol * n^4.
SloccClass classify(const PureState& psi, double tol = 1e-9);

/// Pattern matching on precomputed witness values; exposed so the
/// inconsistency path is testable.
SloccClass classify_witness(const ClassWitness& w, double tol,
                            double max_amplitude);

enum class ClassOrder { Less, Equal, Greater, Incomparable };

/// Orders classes by FTS rank; distinct biseparable classes are incomparable.
ClassOrder class_order(const SloccClass& x, const SloccClass& y);

}  // namespace threeqb
