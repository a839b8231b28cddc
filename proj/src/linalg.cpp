#include "hamuni/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hamuni {

Matrix Matrix::identity(int dim) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(cplx s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  const int n = a.dim_;
  Matrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix Matrix::adjoint() const {
  Matrix m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(j, i));
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = (*this)(j, i);
  return m;
}

cplx Matrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::fnorm() const {
  double s = 0.0;
  for (const auto& x : a_) s += std::norm(x);
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double s = 0.0;
  for (const auto& x : a_) s = std::max(s, std::abs(x));
  return s;
}

Hermitian::Hermitian(const Matrix& m) {
  const int n = m.dim();
  double dev = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) dev = std::max(dev, std::abs(m(i, j) - std::conj(m(j, i))));
  if (dev > kHermTol * std::max(m.max_abs(), 1e-300))
    throw std::invalid_argument("matrix is not Hermitian within tolerance");
  m_ = Matrix(n);
  for (int i = 0; i < n; ++i) {
    m_(i, i) = cplx(m(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m_(i, j) = v;
      m_(j, i) = std::conj(v);
    }
  }
}

EigenDecomposition eig_hermitian(const Hermitian& h) {
  const int n = h.dim();
  Matrix a = h.mat();
  Matrix v = Matrix::identity(n);
  const double scale = a.fnorm();

  auto off_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  const double conv = eig_tol(n) * std::max(scale, 1e-300);
  bool converged = scale == 0.0 || off_norm() <= conv;
  for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double habs = std::abs(apq);
        if (habs <= 1e-18 * std::max(scale, 1e-300)) continue;
        const cplx u = apq / habs;  // phase of the pivot
        const double alpha = a(p, p).real();
        const double beta = a(q, q).real();
        const double tau = (alpha - beta) / (2.0 * habs);
        double t;
        if (tau == 0.0) {
          t = 1.0;
        } else {
          t = (tau > 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // Unitary W: W_pp = c, W_pq = -s*u, W_qp = s*conj(u), W_qq = c;
        // a <- W^dag a W zeroes the (p,q) entry.
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp + s * std::conj(u) * akq;
          a(k, q) = -s * u * akp + c * akq;
          a(p, k) = std::conj(a(k, p));
          a(q, k) = std::conj(a(k, q));
        }
        a(p, p) = alpha * c * c + 2.0 * c * s * habs + beta * s * s;
        a(q, q) = alpha * s * s - 2.0 * c * s * habs + beta * c * c;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp + s * std::conj(u) * vkq;
          v(k, q) = -s * u * vkp + c * vkq;
        }
      }
    }
    converged = off_norm() <= conv;
  }
  if (!converged) throw std::runtime_error("eig_hermitian: Jacobi sweeps did not converge");

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = Matrix(n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = a(idx[j], idx[j]).real();
    int kmax = 0;
    double best = -1.0;
    for (int k = 0; k < n; ++k) {
      const double m = std::abs(v(k, idx[j]));
      if (m > best) {
        best = m;
        kmax = k;
      }
    }
    const cplx ph = best > 0.0 ? std::conj(v(kmax, idx[j])) / best : cplx(1.0, 0.0);
    for (int k = 0; k < n; ++k) out.vectors(k, j) = ph * v(k, idx[j]);
  }
  return out;
}

Hermitian commutator_i(const Hermitian& a, const Hermitian& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("commutator_i: dimension mismatch");
  Matrix c = a.mat() * b.mat();
  c -= b.mat() * a.mat();
  return Hermitian(cplx(0.0, 1.0) * c);
}

Matrix expm_i(const Hermitian& h, double t) {
  const auto eig = eig_hermitian(h);
  const int n = h.dim();
  Matrix out(n);
  for (int k = 0; k < n; ++k) {
    const cplx ph = std::exp(cplx(0.0, eig.values[k] * t));
    for (int i = 0; i < n; ++i) {
      const cplx vik = eig.vectors(i, k);
      if (vik == cplx{}) continue;
      const cplx w = ph * vik;
      for (int j = 0; j < n; ++j) out(i, j) += w * std::conj(eig.vectors(j, k));
    }
  }
  return out;
}

double hs_inner(const Hermitian& a, const Hermitian& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("hs_inner: dimension mismatch");
  const int n = a.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += (a(i, j) * b(j, i)).real();
  return s;
}

double opnorm(const Matrix& m) {
  if (m.dim() == 0) return 0.0;
  const Hermitian gram(m.adjoint() * m);
  const auto eig = eig_hermitian(gram);
  return std::sqrt(std::max(eig.values.back(), 0.0));
}

namespace {

double raw_hs_inner(const Matrix& a, const Matrix& b) {
  const int n = a.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += (a(i, j) * b(j, i)).real();
  return s;
}

}  // namespace

int real_span_rank(std::span<const Hermitian> mats, double rank_tol) {
  if (mats.empty()) return 0;
  double max_norm = 0.0;
  for (const auto& m : mats) max_norm = std::max(max_norm, m.fnorm());
  if (max_norm == 0.0) return 0;
  std::vector<Matrix> basis;
  for (const auto& m : mats) {
    Matrix r = m.mat();
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) r -= cplx(raw_hs_inner(b, r), 0.0) * b;
    const double nr = r.fnorm();
    if (nr > rank_tol * max_norm) basis.push_back(cplx(1.0 / nr, 0.0) * r);
  }
  return static_cast<int>(basis.size());
}

Vec matvec(const Matrix& m, const Vec& v) {
  const int n = m.dim();
  if (static_cast<int>(v.size()) != n) throw std::invalid_argument("matvec: dimension mismatch");
  Vec out(n);
  for (int i = 0; i < n; ++i) {
    cplx s = 0.0;
    for (int j = 0; j < n; ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

cplx vdot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vdot: dimension mismatch");
  cplx s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double vnorm(const Vec& v) { return std::sqrt(std::abs(vdot(v, v))); }

Matrix outer(const Vec& u, const Vec& v) {
  const int n = static_cast<int>(u.size());
  Matrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const int na = a.dim(), nb = b.dim();
  Matrix m(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) m(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return m;
}

const Matrix& pauli(int k) {
  static const std::array<Matrix, 4> sigmas = [] {
    std::array<Matrix, 4> s{Matrix(2), Matrix(2), Matrix(2), Matrix(2)};
    s[0](0, 0) = 1.0;
    s[0](1, 1) = 1.0;
    s[1](0, 1) = 1.0;
    s[1](1, 0) = 1.0;
    s[2](0, 1) = cplx(0.0, -1.0);
    s[2](1, 0) = cplx(0.0, 1.0);
    s[3](0, 0) = 1.0;
    s[3](1, 1) = -1.0;
    return s;
  }();
  return sigmas.at(k);
}

Matrix pauli_kron(int i, int j) { return kron(pauli(i), pauli(j)); }

std::array<double, 16> pauli_coefficients(const Hermitian& h) {
  if (h.dim() != 4) throw std::invalid_argument("pauli_coefficients: need a 4x4 matrix");
  std::array<double, 16> c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Matrix p = pauli_kron(i, j);
      c[i * 4 + j] = 0.25 * (p * h.mat()).trace().real();
    }
  return c;
}

Hermitian hermitian_from_pauli(const std::array<double, 16>& c) {
  Matrix m(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (c[i * 4 + j] == 0.0) continue;
      m += cplx(c[i * 4 + j], 0.0) * pauli_kron(i, j);
    }
  return Hermitian(m);
}

}  // namespace hamuni
