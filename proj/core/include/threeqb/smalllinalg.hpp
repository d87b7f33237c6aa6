#pragma once

#include <array>
#include <complex>
#include <vector>

namespace threeqb {

using Complex = std::complex<double>;

/// Dense complex matrix of fixed dimension 2 or 4, row-major.
class SmallMatrix {
 public:
  explicit SmallMatrix(int dim);
  static SmallMatrix identity(int dim);

  int dim() const { return dim_; }
  Complex& operator()(int r, int c) { return a_[r * dim_ + c]; }
  const Complex& operator()(int r, int c) const { return a_[r * dim_ + c]; }

 private:
  int dim_;
  std::array<Complex, 16> a_{};
};

SmallMatrix operator*(const SmallMatrix& a, const SmallMatrix& b);
SmallMatrix operator+(const SmallMatrix& a, const SmallMatrix& b);
SmallMatrix operator-(const SmallMatrix& a, const SmallMatrix& b);
SmallMatrix operator*(Complex s, const SmallMatrix& a);

SmallMatrix adjoint(const SmallMatrix& a);
SmallMatrix conjugate(const SmallMatrix& a);
Complex trace(const SmallMatrix& a);
/// Determinant straight from the entries (cofactors at dim 2, elimination at dim 4).
Complex determinant(const SmallMatrix& a);
double frobenius_norm(const SmallMatrix& a);
/// Kronecker product of two 2x2 matrices; row index is 2*i+k.
SmallMatrix kron(const SmallMatrix& a, const SmallMatrix& b);

bool is_hermitian(const SmallMatrix& a, double tol = 1e-12);

struct Eigensystem {
  std::vector<double> values;  // descending
  SmallMatrix vectors;         // orthonormal columns, column k pairs with values[k]
};

/// Full eigensystem of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Sweeps run in a fixed (p,q) order and stop once the off-diagonal Frobenius
/// norm falls below 1e-14 * ||H||. Throws std::invalid_argument if the input
/// is not Hermitian within tolerance.
Eigensystem hermitian_eigensystem(const SmallMatrix& h);

/// Hermitian PSD square root. Eigenvalues in [-1e-10, 0] are clamped to zero;
/// anything below -1e-10 throws std::invalid_argument.
SmallMatrix psd_sqrt(const SmallMatrix& h);

}  // namespace threeqb
