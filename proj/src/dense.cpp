#include "mub/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mub {

CMatrix CMatrix::identity(int d) {
  CMatrix m(d);
  for (int i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

CVector CMatrix::column(int c) const {
  CVector v(dim);
  for (int r = 0; r < dim; ++r) v[r] = (*this)(r, c);
  return v;
}

static void check_same_dim(const CMatrix& x, const CMatrix& y) {
  if (x.dim != y.dim) throw std::invalid_argument("matrix dimension mismatch");
}

CMatrix operator+(const CMatrix& x, const CMatrix& y) {
  check_same_dim(x, y);
  CMatrix r(x.dim);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

CMatrix operator-(const CMatrix& x, const CMatrix& y) {
  check_same_dim(x, y);
  CMatrix r(x.dim);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

CMatrix operator*(const CMatrix& x, const CMatrix& y) {
  check_same_dim(x, y);
  const int n = x.dim;
  CMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Cplx xik = x(i, k);
      if (xik == Cplx{}) continue;
      for (int j = 0; j < n; ++j) r(i, j) += xik * y(k, j);
    }
  }
  return r;
}

CMatrix operator*(Cplx s, const CMatrix& x) {
  CMatrix r(x.dim);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = s * x.a[i];
  return r;
}

CMatrix adjoint(const CMatrix& x) {
  CMatrix r(x.dim);
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < x.dim; ++j) r(j, i) = std::conj(x(i, j));
  return r;
}

Cplx trace(const CMatrix& x) {
  Cplx t{};
  for (int i = 0; i < x.dim; ++i) t += x(i, i);
  return t;
}

Cplx trace_of_product(const CMatrix& x, const CMatrix& y) {
  check_same_dim(x, y);
  Cplx t{};
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < x.dim; ++j) t += x(i, j) * y(j, i);
  return t;
}

double frobenius_norm(const CMatrix& x) {
  double s = 0.0;
  for (const Cplx& v : x.a) s += std::norm(v);
  return std::sqrt(s);
}

double max_abs(const CMatrix& x) {
  double m = 0.0;
  for (const Cplx& v : x.a) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const CMatrix& x, const CMatrix& y) {
  check_same_dim(x, y);
  double m = 0.0;
  for (size_t i = 0; i < x.a.size(); ++i)
    m = std::max(m, std::abs(x.a[i] - y.a[i]));
  return m;
}

bool is_hermitian(const CMatrix& x, double tol) {
  for (int i = 0; i < x.dim; ++i)
    for (int j = i; j < x.dim; ++j)
      if (std::abs(x(i, j) - std::conj(x(j, i))) > tol) return false;
  return true;
}

CVector matvec(const CMatrix& x, const CVector& v) {
  if (static_cast<int>(v.size()) != x.dim)
    throw std::invalid_argument("matvec dimension mismatch");
  CVector r(x.dim);
  for (int i = 0; i < x.dim; ++i) {
    Cplx s{};
    for (int j = 0; j < x.dim; ++j) s += x(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

CMatrix outer(const CVector& u, const CVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("outer size mismatch");
  CMatrix r(static_cast<int>(u.size()));
  for (int i = 0; i < r.dim; ++i)
    for (int j = 0; j < r.dim; ++j) r(i, j) = u[i] * std::conj(v[j]);
  return r;
}

Cplx inner(const CVector& u, const CVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("inner size mismatch");
  Cplx s{};
  for (size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double norm(const CVector& v) {
  double s = 0.0;
  for (const Cplx& x : v) s += std::norm(x);
  return std::sqrt(s);
}

namespace {

double off_diagonal_norm(const CMatrix& h) {
  double s = 0.0;
  for (int p = 0; p < h.dim; ++p)
    for (int q = p + 1; q < h.dim; ++q) s += std::norm(h(p, q));
  return std::sqrt(2.0 * s);
}

// One Jacobi rotation in the (p,q) plane of a Hermitian matrix. The complex
// off-diagonal entry is first rotated onto the real axis, then annihilated
// by a standard real rotation; the combined unitary is applied to h (and to
// the accumulated eigenvector matrix, when present).
void jacobi_rotate(CMatrix& h, int p, int q, CMatrix* vecs) {
  const Cplx hpq = h(p, q);
  const double mag = std::abs(hpq);
  if (mag == 0.0) return;
  const Cplx u = std::conj(hpq) / mag;  // makes h(p,q)*u real and positive
  const double app = h(p, p).real();
  const double aqq = h(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  double t;
  if (tau >= 0.0)
    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
  else
    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const int n = h.dim;
  // Column update: [col_p, col_q] <- [col_p, col_q] * V with
  // V = [[c, s], [-s*u, c*u]].
  for (int k = 0; k < n; ++k) {
    const Cplx kp = h(k, p);
    const Cplx kq = h(k, q);
    h(k, p) = c * kp - s * u * kq;
    h(k, q) = s * kp + c * u * kq;
  }
  // Row update with the conjugate transpose.
  for (int k = 0; k < n; ++k) {
    const Cplx pk = h(p, k);
    const Cplx qk = h(q, k);
    h(p, k) = c * pk - s * std::conj(u) * qk;
    h(q, k) = s * pk + c * std::conj(u) * qk;
  }
  h(p, q) = 0.0;
  h(q, p) = 0.0;
  h(p, p) = Cplx(h(p, p).real(), 0.0);
  h(q, q) = Cplx(h(q, q).real(), 0.0);

  if (vecs) {
    for (int k = 0; k < n; ++k) {
      const Cplx kp = (*vecs)(k, p);
      const Cplx kq = (*vecs)(k, q);
      (*vecs)(k, p) = c * kp - s * u * kq;
      (*vecs)(k, q) = s * kp + c * u * kq;
    }
  }
}

void jacobi_diagonalize(CMatrix& h, CMatrix* vecs) {
  const int n = h.dim;
  if (n == 0) return;
  const double scale = std::max(1.0, frobenius_norm(h));
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(h) <= 1e-14 * scale) return;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q)
        if (std::abs(h(p, q)) > 1e-16 * scale) jacobi_rotate(h, p, q, vecs);
  }
  throw std::runtime_error("jacobi iteration did not converge");
}

}  // namespace

std::vector<double> hermitian_eigenvalues(CMatrix h) {
  jacobi_diagonalize(h, nullptr);
  std::vector<double> evals(h.dim);
  for (int i = 0; i < h.dim; ++i) evals[i] = h(i, i).real();
  std::sort(evals.begin(), evals.end());
  return evals;
}

std::pair<std::vector<double>, CMatrix> hermitian_eigensystem(CMatrix h) {
  CMatrix vecs = CMatrix::identity(h.dim);
  jacobi_diagonalize(h, &vecs);
  std::vector<int> order(h.dim);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return h(i, i).real() < h(j, j).real(); });
  std::vector<double> evals(h.dim);
  CMatrix sorted(h.dim);
  for (int j = 0; j < h.dim; ++j) {
    evals[j] = h(order[j], order[j]).real();
    for (int i = 0; i < h.dim; ++i) sorted(i, j) = vecs(i, order[j]);
  }
  return {evals, sorted};
}

}  // namespace mub
