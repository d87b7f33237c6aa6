#include "threeqb/state.hpp"

#include <cmath>
#include <stdexcept>

namespace threeqb {

double norm(const PureState& psi) {
  double s = 0;
  for (const Complex& a : psi.amp) s += std::norm(a);
  return std::sqrt(s);
}

double norm(const TwoQubitState& phi) {
  double s = 0;
  for (const Complex& a : phi.amp) s += std::norm(a);
  return std::sqrt(s);
}

PureState operator+(const PureState& a, const PureState& b) {
  PureState c;
  for (int i = 0; i < 8; ++i) c.amp[i] = a.amp[i] + b.amp[i];
  return c;
}

PureState operator-(const PureState& a, const PureState& b) {
  PureState c;
  for (int i = 0; i < 8; ++i) c.amp[i] = a.amp[i] - b.amp[i];
  return c;
}

PureState operator*(Complex s, const PureState& a) {
  PureState c;
  for (int i = 0; i < 8; ++i) c.amp[i] = s * a.amp[i];
  return c;
}

PureState operator*(double s, const PureState& a) {
  return Complex(s, 0) * a;
}

Complex overlap(const PureState& a, const PureState& b) {
  Complex s = 0;
  for (int i = 0; i < 8; ++i) s += std::conj(a.amp[i]) * b.amp[i];
  return s;
}

PureState normalized(const PureState& psi) {
  const double n = norm(psi);
  if (n == 0.0)
    throw std::invalid_argument("normalized: zero vector");
  return (1.0 / n) * psi;
}

PureState apply_local(const PureState& psi, const SmallMatrix& op, int qubit) {
  if (op.dim() != 2)
    throw std::invalid_argument("apply_local: operator must be 2x2");
  if (qubit < 1 || qubit > 3)
    throw std::invalid_argument("apply_local: qubit must be in {1,2,3}");
  const int bit = 1 << (3 - qubit);  // qubit 1 is the most significant bit
  PureState out;
  for (int idx = 0; idx < 8; ++idx) {
    const int v = (idx & bit) ? 1 : 0;
    const int base = idx & ~bit;
    out.amp[idx] = op(v, 0) * psi.amp[base] + op(v, 1) * psi.amp[base | bit];
  }
  return out;
}

PureState apply_local(const PureState& psi, const SmallMatrix& a1,
                      const SmallMatrix& a2, const SmallMatrix& a3) {
  return apply_local(apply_local(apply_local(psi, a1, 1), a2, 2), a3, 3);
}

PureState permute_qubits(const PureState& psi, const std::array<int, 3>& perm) {
  for (int p : perm)
    if (p < 1 || p > 3)
      throw std::invalid_argument("permute_qubits: labels must be in {1,2,3}");
  if (perm[0] == perm[1] || perm[0] == perm[2] || perm[1] == perm[2])
    throw std::invalid_argument("permute_qubits: labels must be distinct");
  PureState out;
  for (int b1 = 0; b1 < 2; ++b1)
    for (int b2 = 0; b2 < 2; ++b2)
      for (int b3 = 0; b3 < 2; ++b3) {
        int old_bits[4] = {0, 0, 0, 0};  // 1-based
        const int nv[3] = {b1, b2, b3};
        for (int s = 0; s < 3; ++s) old_bits[perm[s]] = nv[s];
        out(b1, b2, b3) = psi(old_bits[1], old_bits[2], old_bits[3]);
      }
  return out;
}

void check_finite(const PureState& psi) {
  for (const Complex& a : psi.amp)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::invalid_argument("state has non-finite amplitudes");
}

namespace states {

PureState ghz() {
  PureState s;
  s(0, 0, 0) = s(1, 1, 1) = 1.0 / std::sqrt(2.0);
  return s;
}

PureState w() {
  PureState s;
  s(0, 0, 1) = s(0, 1, 0) = s(1, 0, 0) = 1.0 / std::sqrt(3.0);
  return s;
}

PureState bisep(int a) {
  PureState s;
  const double h = 1.0 / std::sqrt(2.0);
  switch (a) {
    case 1:  // |0>_1 (x) (|00>+|11>)_{23}
      s(0, 0, 0) = s(0, 1, 1) = h;
      break;
    case 2:
      s(0, 0, 0) = s(1, 0, 1) = h;
      break;
    case 3:
      s(0, 0, 0) = s(1, 1, 0) = h;
      break;
    default:
      throw std::invalid_argument("bisep: subsystem must be in {1,2,3}");
  }
  return s;
}

PureState separable() {
  PureState s;
  s(0, 0, 0) = 1.0;
  return s;
}

PureState null_state() { return PureState{}; }

TwoQubitState bell() {
  TwoQubitState s;
  s(0, 0) = s(1, 1) = 1.0 / std::sqrt(2.0);
  return s;
}

}  // namespace states

}  // namespace threeqb
