#pragma once

#include <initializer_list>

#include "threeqb/state.hpp"

namespace threeqb {

/// Antisymmetric two-index form, <eps| = <01| - <10|.
inline constexpr double kEps[2][2] = {{0.0, 1.0}, {-1.0, 0.0}};

/// Spin flip (time reversal): psi~^{ijk} = sum eps_{ii'} eps_{jj'} eps_{kk'}
/// conj(psi^{i'j'k'}). Norm preserving.
PureState spin_flip(const PureState& psi);
TwoQubitState spin_flip(const TwoQubitState& phi);

/// q(phi) = sum eps_{ii'} eps_{jj'} phi^{ij} phi^{i'j'} = 2 det(phi).
Complex quadratic_form(const TwoQubitState& phi);

/// Degree-4 invariant q(psi) = -2 Det(psi), Det being Cayley's
/// hyperdeterminant; evaluated as the twelve-index epsilon contraction
/// (pattern 1). Debug builds cross-check all three contraction patterns.
Complex quartic_form(const PureState& psi);
/// One of the three equivalent contraction patterns (pattern in {1,2,3}).
Complex quartic_form_pattern(const PureState& psi, int pattern);

/// Rank-3 covariant tensor, same index layout as PureState.
struct CubicTensor {
  std::array<Complex, 8> amp{};
};
double norm(const CubicTensor& t);
Complex overlap(const PureState& a, const CubicTensor& b);

CubicTensor cubic_tensor(const PureState& psi);
CubicTensor cubic_tensor_pattern(const PureState& psi, int pattern);

/// Symmetric quadratic covariant on one subsystem; 2x2, index 2r+c.
struct PairTensor {
  int subsystem = 0;
  std::array<Complex, 4> m{};
};
double norm_sq(const PairTensor& g);

PairTensor gamma_tensor(const PureState& psi, int subsystem);

/// Partial trace of |psi><psi| onto the kept qubits. keep must be one of
/// {1},{2},{3},{2,3},{1,3},{1,2}; pairs index rows as 2*v_first + v_second in
/// ascending qubit order. Result is Hermitian PSD with trace = ||psi||^2.
SmallMatrix reduced_density(const PureState& psi, std::initializer_list<int> keep);
SmallMatrix reduced_density_qubit(const PureState& psi, int a);

}  // namespace threeqb
