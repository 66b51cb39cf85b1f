#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace mub {

using Cplx = std::complex<double>;
using CVector = std::vector<Cplx>;

/// Dense row-major complex matrix. Dimensions stay small here (<= 1024),
/// so everything is plain O(n^3) loops with no blocking.
struct CMatrix {
  int dim = 0;
  CVector a;

  CMatrix() = default;
  explicit CMatrix(int d) : dim(d), a(static_cast<size_t>(d) * d) {}

  Cplx& operator()(int r, int c) { return a[static_cast<size_t>(r) * dim + c]; }
  const Cplx& operator()(int r, int c) const {
    return a[static_cast<size_t>(r) * dim + c];
  }

  static CMatrix identity(int d);

  CVector column(int c) const;
};

CMatrix operator+(const CMatrix& x, const CMatrix& y);
CMatrix operator-(const CMatrix& x, const CMatrix& y);
CMatrix operator*(const CMatrix& x, const CMatrix& y);
CMatrix operator*(Cplx s, const CMatrix& x);

CMatrix adjoint(const CMatrix& x);
Cplx trace(const CMatrix& x);
Cplx trace_of_product(const CMatrix& x, const CMatrix& y);  // Tr(xy)
double frobenius_norm(const CMatrix& x);
double max_abs(const CMatrix& x);
double max_abs_diff(const CMatrix& x, const CMatrix& y);
bool is_hermitian(const CMatrix& x, double tol);

CVector matvec(const CMatrix& x, const CVector& v);
CMatrix outer(const CVector& u, const CVector& v);  // |u><v|

Cplx inner(const CVector& u, const CVector& v);  // <u|v>, conjugates u
double norm(const CVector& v);

/// Eigenvalues of a Hermitian matrix, ascending, via cyclic Jacobi sweeps.
std::vector<double> hermitian_eigenvalues(CMatrix h);

/// Eigenvalues (ascending) and matching eigenvector columns.
std::pair<std::vector<double>, CMatrix> hermitian_eigensystem(CMatrix h);

}  // namespace mub
