#include "threeqb/tensors.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace threeqb {

PureState spin_flip(const PureState& psi) {
  PureState out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        Complex s = 0;
        for (int i2 = 0; i2 < 2; ++i2)
          for (int j2 = 0; j2 < 2; ++j2)
            for (int k2 = 0; k2 < 2; ++k2) {
              const double e = kEps[i][i2] * kEps[j][j2] * kEps[k][k2];
              if (e == 0) continue;
              s += e * std::conj(psi(i2, j2, k2));
            }
        out(i, j, k) = s;
      }
  return out;
}

TwoQubitState spin_flip(const TwoQubitState& phi) {
  TwoQubitState out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Complex s = 0;
      for (int i2 = 0; i2 < 2; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          const double e = kEps[i][i2] * kEps[j][j2];
          if (e == 0) continue;
          s += e * std::conj(phi(i2, j2));
        }
      out(i, j) = s;
    }
  return out;
}

Complex quadratic_form(const TwoQubitState& phi) {
  Complex q = 0;
  for (int i = 0; i < 2; ++i)
    for (int i2 = 0; i2 < 2; ++i2) {
      if (kEps[i][i2] == 0) continue;
      for (int j = 0; j < 2; ++j)
        for (int j2 = 0; j2 < 2; ++j2) {
          const double e = kEps[i][i2] * kEps[j][j2];
          if (e == 0) continue;
          q += e * phi(i, j) * phi(i2, j2);
        }
    }
  return q;
}

Complex quartic_form_pattern(const PureState& psi, int pattern) {
  if (pattern < 1 || pattern > 3)
    throw std::invalid_argument("quartic_form_pattern: pattern must be 1..3");
  Complex q = 0;
  for (int i = 0; i < 2; ++i)
  for (int i2 = 0; i2 < 2; ++i2) { if (kEps[i][i2] == 0) continue;
  for (int j = 0; j < 2; ++j)
  for (int j2 = 0; j2 < 2; ++j2) { if (kEps[j][j2] == 0) continue;
  for (int k = 0; k < 2; ++k)
  for (int k2 = 0; k2 < 2; ++k2) { if (kEps[k][k2] == 0) continue;
  for (int l = 0; l < 2; ++l)
  for (int l2 = 0; l2 < 2; ++l2) { if (kEps[l][l2] == 0) continue;
  for (int m = 0; m < 2; ++m)
  for (int m2 = 0; m2 < 2; ++m2) { if (kEps[m][m2] == 0) continue;
  for (int n = 0; n < 2; ++n)
  for (int n2 = 0; n2 < 2; ++n2) { if (kEps[n][n2] == 0) continue;
    const double e = kEps[i][i2] * kEps[j][j2] * kEps[k][k2] *
                     kEps[l][l2] * kEps[m][m2] * kEps[n][n2];
    Complex t;
    switch (pattern) {
      case 1:
        t = psi(l, m, n) * psi(i, m2, n2) * psi(l2, j, k) * psi(i2, j2, k2);
        break;
      case 2:
        t = psi(l, m, n) * psi(l2, j, n2) * psi(i, m2, k) * psi(i2, j2, k2);
        break;
      default:
        t = psi(l, m, n) * psi(l2, m2, k) * psi(i, j, n2) * psi(i2, j2, k2);
        break;
    }
    q += e * t;
  }}}}}}
  return q;
}

Complex quartic_form(const PureState& psi) {
  const Complex q = quartic_form_pattern(psi, 1);
#ifndef NDEBUG
  {
    const double n = norm(psi);
    const double tol = 1e-12 * std::max(1.0, n * n * n * n);
    assert(std::abs(quartic_form_pattern(psi, 2) - q) <= tol);
    assert(std::abs(quartic_form_pattern(psi, 3) - q) <= tol);
  }
#endif
  return q;
}

double norm(const CubicTensor& t) {
  double s = 0;
  for (const Complex& a : t.amp) s += std::norm(a);
  return std::sqrt(s);
}

Complex overlap(const PureState& a, const CubicTensor& b) {
  Complex s = 0;
  for (int i = 0; i < 8; ++i) s += std::conj(a.amp[i]) * b.amp[i];
  return s;
}

CubicTensor cubic_tensor_pattern(const PureState& psi, int pattern) {
  if (pattern < 1 || pattern > 3)
    throw std::invalid_argument("cubic_tensor_pattern: pattern must be 1..3");
  CubicTensor out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        Complex s = 0;
        for (int l = 0; l < 2; ++l)
        for (int l2 = 0; l2 < 2; ++l2) { if (kEps[l][l2] == 0) continue;
        for (int m = 0; m < 2; ++m)
        for (int m2 = 0; m2 < 2; ++m2) { if (kEps[m][m2] == 0) continue;
        for (int n = 0; n < 2; ++n)
        for (int n2 = 0; n2 < 2; ++n2) { if (kEps[n][n2] == 0) continue;
          const double e = kEps[l][l2] * kEps[m][m2] * kEps[n][n2];
          Complex t;
          switch (pattern) {
            case 1:
              t = psi(i, m, n) * psi(l, m2, n2) * psi(l2, j, k);
              break;
            case 2:
              t = psi(l, j, n) * psi(l2, m, n2) * psi(i, m2, k);
              break;
            default:
              t = psi(l, m, k) * psi(l2, m2, n) * psi(i, j, n2);
              break;
          }
          s -= e * t;
        }}}
        out.amp[4 * i + 2 * j + k] = s;
      }
  return out;
}

CubicTensor cubic_tensor(const PureState& psi) {
  CubicTensor t = cubic_tensor_pattern(psi, 1);
#ifndef NDEBUG
  {
    const double n = norm(psi);
    const double tol = 1e-12 * std::max(1.0, n * n * n);
    for (int pat = 2; pat <= 3; ++pat) {
      const CubicTensor alt = cubic_tensor_pattern(psi, pat);
      for (int idx = 0; idx < 8; ++idx)
        assert(std::abs(alt.amp[idx] - t.amp[idx]) <= tol);
    }
  }
#endif
  return t;
}

double norm_sq(const PairTensor& g) {
  double s = 0;
  for (const Complex& a : g.m) s += std::norm(a);
  return s;
}

PairTensor gamma_tensor(const PureState& psi, int subsystem) {
  if (subsystem < 1 || subsystem > 3)
    throw std::invalid_argument("gamma_tensor: subsystem must be in {1,2,3}");
  PairTensor out;
  out.subsystem = subsystem;
  for (int x = 0; x < 2; ++x)
    for (int x2 = 0; x2 < 2; ++x2) {
      Complex s = 0;
      for (int u = 0; u < 2; ++u)
      for (int u2 = 0; u2 < 2; ++u2) { if (kEps[u][u2] == 0) continue;
      for (int v = 0; v < 2; ++v)
      for (int v2 = 0; v2 < 2; ++v2) { if (kEps[v][v2] == 0) continue;
        const double e = kEps[u][u2] * kEps[v][v2];
        Complex t;
        switch (subsystem) {
          case 1: t = psi(x, u, v) * psi(x2, u2, v2); break;
          case 2: t = psi(u, x, v) * psi(u2, x2, v2); break;
          default: t = psi(u, v, x) * psi(u2, v2, x2); break;
        }
        s += e * t;
      }}
      out.m[2 * x + x2] = s;
    }
  return out;
}

SmallMatrix reduced_density(const PureState& psi,
                            std::initializer_list<int> keep) {
  std::array<bool, 4> kept{};  // 1-based
  int count = 0;
  for (int q : keep) {
    if (q < 1 || q > 3)
      throw std::invalid_argument("reduced_density: qubits must be in {1,2,3}");
    if (!kept[q]) ++count;
    kept[q] = true;
  }
  if (count != 1 && count != 2)
    throw std::invalid_argument("reduced_density: keep 1 or 2 qubits");

  std::array<int, 2> kq{};  // kept qubits, ascending
  std::array<int, 2> tq{};  // traced qubits
  int nk = 0, nt = 0;
  for (int q = 1; q <= 3; ++q) (kept[q] ? kq[nk++] : tq[nt++]) = q;

  const auto bit = [](int q) { return 1 << (3 - q); };
  const int dim = 1 << count;
  SmallMatrix rho(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      Complex s = 0;
      for (int t = 0; t < (1 << nt); ++t) {
        int ri = 0, ci = 0;
        for (int b = 0; b < count; ++b) {
          if (r & (1 << (count - 1 - b))) ri |= bit(kq[b]);
          if (c & (1 << (count - 1 - b))) ci |= bit(kq[b]);
        }
        for (int b = 0; b < nt; ++b)
          if (t & (1 << b)) {
            ri |= bit(tq[b]);
            ci |= bit(tq[b]);
          }
        s += psi.amp[ri] * std::conj(psi.amp[ci]);
      }
      rho(r, c) = s;
    }
  return rho;
}

SmallMatrix reduced_density_qubit(const PureState& psi, int a) {
  return reduced_density(psi, {a});
}

}  // namespace threeqb
