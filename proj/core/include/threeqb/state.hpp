#pragma once

#include <array>

#include "threeqb/smalllinalg.hpp"

namespace threeqb {

/// Three-qubit vector. Amplitudes are indexed 4i+2j+k for basis ket |ijk>,
/// qubit 1 being the most significant bit. Normalization is not required.
struct PureState {
  std::array<Complex, 8> amp{};

  Complex& operator()(int i, int j, int k) { return amp[4 * i + 2 * j + k]; }
  const Complex& operator()(int i, int j, int k) const {
    return amp[4 * i + 2 * j + k];
  }
};

/// Two-qubit vector, amplitudes indexed 2i+j.
struct TwoQubitState {
  std::array<Complex, 4> amp{};

  Complex& operator()(int i, int j) { return amp[2 * i + j]; }
  const Complex& operator()(int i, int j) const { return amp[2 * i + j]; }
};

double norm(const PureState& psi);
double norm(const TwoQubitState& phi);

PureState operator+(const PureState& a, const PureState& b);
PureState operator-(const PureState& a, const PureState& b);
PureState operator*(Complex s, const PureState& a);
PureState operator*(double s, const PureState& a);

/// <a|b> with the physics convention (conjugate-linear in a).
Complex overlap(const PureState& a, const PureState& b);

PureState normalized(const PureState& psi);

/// Applies a 2x2 operator to one qubit (1-based label).
PureState apply_local(const PureState& psi, const SmallMatrix& op, int qubit);
PureState apply_local(const PureState& psi, const SmallMatrix& a1,
                      const SmallMatrix& a2, const SmallMatrix& a3);

/// Relabels qubits: new qubit s carries old qubit perm[s-1].
PureState permute_qubits(const PureState& psi, const std::array<int, 3>& perm);

void check_finite(const PureState& psi);

namespace states {
PureState ghz();
PureState w();
/// |0> on qubit `a`, Bell pair on the other two.
PureState bisep(int a);
PureState separable();   // |000>
PureState null_state();  // zero vector
TwoQubitState bell();
}  // namespace states

}  // namespace threeqb
