#include "threeqb/smalllinalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace threeqb {

namespace {

void check_dim(int dim) {
  if (dim != 2 && dim != 4)
    throw std::invalid_argument("SmallMatrix: dim must be 2 or 4");
}

}  // namespace

SmallMatrix::SmallMatrix(int dim) : dim_(dim) { check_dim(dim); }

SmallMatrix SmallMatrix::identity(int dim) {
  SmallMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

SmallMatrix operator*(const SmallMatrix& a, const SmallMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("SmallMatrix: dimension mismatch");
  const int n = a.dim();
  SmallMatrix c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

SmallMatrix operator+(const SmallMatrix& a, const SmallMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("SmallMatrix: dimension mismatch");
  SmallMatrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

SmallMatrix operator-(const SmallMatrix& a, const SmallMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("SmallMatrix: dimension mismatch");
  SmallMatrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

SmallMatrix operator*(Complex s, const SmallMatrix& a) {
  SmallMatrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c(i, j) = s * a(i, j);
  return c;
}

SmallMatrix adjoint(const SmallMatrix& a) {
  SmallMatrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c(i, j) = std::conj(a(j, i));
  return c;
}

SmallMatrix conjugate(const SmallMatrix& a) {
  SmallMatrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c(i, j) = std::conj(a(i, j));
  return c;
}

Complex trace(const SmallMatrix& a) {
  Complex t = 0;
  for (int i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

Complex determinant(const SmallMatrix& a) {
  if (a.dim() == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  // Gaussian elimination with partial pivoting on a copy.
  SmallMatrix u = a;
  Complex det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(u(r, col)) > std::abs(u(piv, col))) piv = r;
    if (std::abs(u(piv, col)) == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < 4; ++j) std::swap(u(piv, j), u(col, j));
      det = -det;
    }
    det *= u(col, col);
    for (int r = col + 1; r < 4; ++r) {
      const Complex f = u(r, col) / u(col, col);
      for (int j = col; j < 4; ++j) u(r, j) -= f * u(col, j);
    }
  }
  return det;
}

double frobenius_norm(const SmallMatrix& a) {
  double s = 0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

SmallMatrix kron(const SmallMatrix& a, const SmallMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2)
    throw std::invalid_argument("kron: expects two 2x2 matrices");
  SmallMatrix c(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          c(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return c;
}

bool is_hermitian(const SmallMatrix& a, double tol) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
  return true;
}

namespace {

double offdiag_norm(const SmallMatrix& a) {
  double s = 0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing h(p,q); accumulates into v.
void jacobi_rotate(SmallMatrix& h, SmallMatrix& v, int p, int q) {
  const Complex beta = h(p, q);
  const double ab = std::abs(beta);
  if (ab == 0.0) return;
  const Complex phase = beta / ab;  // e^{i phi}
  const double theta =
      0.5 * std::atan2(2.0 * ab, h(p, p).real() - h(q, q).real());
  const double c = std::cos(theta), s = std::sin(theta);
  const Complex jpq = -s * phase;          // J(p,q)
  const Complex jqp = s * std::conj(phase);  // J(q,p)
  const int n = h.dim();
  // h <- J^dag h
  for (int col = 0; col < n; ++col) {
    const Complex hp = h(p, col), hq = h(q, col);
    h(p, col) = c * hp + std::conj(jqp) * hq;
    h(q, col) = std::conj(jpq) * hp + c * hq;
  }
  // h <- h J,  v <- v J
  for (int row = 0; row < n; ++row) {
    const Complex hp = h(row, p), hq = h(row, q);
    h(row, p) = c * hp + jqp * hq;
    h(row, q) = jpq * hp + c * hq;
    const Complex vp = v(row, p), vq = v(row, q);
    v(row, p) = c * vp + jqp * vq;
    v(row, q) = jpq * vp + c * vq;
  }
  h(p, q) = 0.0;
  h(q, p) = 0.0;
}

}  // namespace

Eigensystem hermitian_eigensystem(const SmallMatrix& h) {
  if (!is_hermitian(h))
    throw std::invalid_argument(
        "hermitian_eigensystem: input is not Hermitian within 1e-12");
  const int n = h.dim();
  // Symmetrize to kill the sub-tolerance asymmetry before iterating.
  SmallMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Complex v = h(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::invalid_argument(
            "hermitian_eigensystem: non-finite entries");
      a(i, j) = 0.5 * (v + std::conj(h(j, i)));
    }
  SmallMatrix v = SmallMatrix::identity(n);

  const double scale = frobenius_norm(a);
  const double target = 1e-14 * scale;
  for (int sweep = 0; sweep < 60 && offdiag_norm(a) > target; ++sweep)
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  Eigensystem out{std::vector<double>(n), SmallMatrix(n)};
  for (int k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (int r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

SmallMatrix psd_sqrt(const SmallMatrix& h) {
  Eigensystem es = hermitian_eigensystem(h);
  for (double& lam : es.values) {
    if (lam < -1e-10)
      throw std::invalid_argument(
          "psd_sqrt: eigenvalue below -1e-10, input is not PSD");
    if (lam < 0) lam = 0;
  }
  const int n = h.dim();
  SmallMatrix s(n);
  for (int k = 0; k < n; ++k) {
    const double r = std::sqrt(es.values[k]);
    if (r == 0.0) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        s(i, j) += r * es.vectors(i, k) * std::conj(es.vectors(j, k));
  }
  return s;
}

}  // namespace threeqb
