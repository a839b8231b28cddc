#include "hamuni/swap.hpp"

#include <cmath>
#include <stdexcept>

#include "hamuni/rng.hpp"

namespace hamuni {

const Matrix& swap_gate() {
  static const Matrix t = [] {
    Matrix m(4);
    m(0, 0) = 1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 3) = 1.0;
    return m;
  }();
  return t;
}

const Vec& singlet_state() {
  static const Vec s = [] {
    const double r = 1.0 / std::sqrt(2.0);
    return Vec{0.0, r, -r, 0.0};
  }();
  return s;
}

const Matrix& singlet_basis_transform() {
  static const Matrix u = [] {
    const double r = 1.0 / std::sqrt(2.0);
    Matrix m(4);
    m(0, 1) = r;
    m(0, 2) = -r;
    m(1, 1) = r;
    m(1, 2) = r;
    m(2, 0) = r;
    m(2, 3) = r;
    m(3, 0) = r;
    m(3, 3) = -r;
    return m;
  }();
  return u;
}

const Matrix& swap_in_singlet_basis() {
  static const Matrix t = [] {
    Matrix m = Matrix::identity(4);
    m(0, 0) = -1.0;
    return m;
  }();
  return t;
}

SingletBasisMatrix to_singlet_basis(const Matrix& computational) {
  if (computational.dim() != 4) throw std::invalid_argument("to_singlet_basis: need a 4x4 matrix");
  const Matrix& u = singlet_basis_transform();
  return SingletBasisMatrix{u * computational * u.adjoint()};
}

Matrix from_singlet_basis(const SingletBasisMatrix& sb) {
  const Matrix& u = singlet_basis_transform();
  return u.adjoint() * sb.m * u;
}

SingletBasisMatrix to_singlet_basis(const Hermitian& h) { return to_singlet_basis(h.mat()); }

Hermitian hermitian_from_singlet_basis(const SingletBasisMatrix& sb) {
  return Hermitian(from_singlet_basis(sb));
}

bool commutes_with_swap(const Matrix& m, double tol) {
  if (m.dim() != 4) throw std::invalid_argument("commutes_with_swap: need a 4x4 matrix");
  const Matrix& t = swap_gate();
  const Matrix d = m * t - t * m;
  return d.fnorm() <= tol * std::max(m.fnorm(), 1e-300);
}

bool singlet_is_eigenvector(const Matrix& normal_m, double tol) {
  if (normal_m.dim() != 4) throw std::invalid_argument("singlet_is_eigenvector: need a 4x4 matrix");
  const double scale = std::max(normal_m.fnorm(), 1e-300);
  const Matrix nn = normal_m * normal_m.adjoint() - normal_m.adjoint() * normal_m;
  if (nn.fnorm() > tol * scale * scale * 4.0)
    throw std::invalid_argument("singlet_is_eigenvector: input is not normal within tolerance");
  const Vec& s = singlet_state();
  Vec ns = matvec(normal_m, s);
  const cplx lam = vdot(s, ns);
  for (int i = 0; i < 4; ++i) ns[i] -= lam * s[i];
  return vnorm(ns) <= tol * scale;
}

std::vector<std::pair<int, int>> eigenvalue_clusters(const std::vector<double>& ascending,
                                                     double scale, double tol) {
  std::vector<std::pair<int, int>> out;
  const double cut = tol * std::max(1.0, scale);
  int start = 0;
  for (int i = 1; i <= static_cast<int>(ascending.size()); ++i) {
    if (i == static_cast<int>(ascending.size()) || ascending[i] - ascending[i - 1] > cut) {
      out.emplace_back(start, i - 1);
      start = i;
    }
  }
  return out;
}

std::optional<Vec> shares_eigenvector_with_swap(const Hermitian& h, double tol) {
  if (h.dim() != 4) throw std::invalid_argument("shares_eigenvector_with_swap: need a 4x4 matrix");
  const auto eig = eig_hermitian(h);
  const Vec& s = singlet_state();
  const double scale = std::max(1.0, h.fnorm());
  const auto clusters = eigenvalue_clusters(eig.values, h.fnorm(), tol);

  for (const auto& [lo, hi] : clusters) {
    const int k = hi - lo + 1;
    if (k == 1) {
      Vec v(4);
      for (int i = 0; i < 4; ++i) v[i] = eig.vectors(i, lo);
      if (std::abs(vdot(v, s)) <= tol * scale) return v;
      continue;
    }
    // A k>=2 eigenspace always intersects the singlet's orthocomplement:
    // project the singlet onto the eigenspace and pick any orthogonal
    // eigenspace direction.
    Vec p(4, 0.0);
    for (int col = lo; col <= hi; ++col) {
      Vec v(4);
      for (int i = 0; i < 4; ++i) v[i] = eig.vectors(i, col);
      const cplx c = vdot(v, s);
      for (int i = 0; i < 4; ++i) p[i] += c * v[i];
    }
    const double pn = vnorm(p);
    if (pn <= tol) {
      Vec v(4);
      for (int i = 0; i < 4; ++i) v[i] = eig.vectors(i, lo);
      return v;
    }
    for (int i = 0; i < 4; ++i) p[i] /= pn;
    Vec best;
    double best_norm = -1.0;
    for (int col = lo; col <= hi; ++col) {
      Vec v(4);
      for (int i = 0; i < 4; ++i) v[i] = eig.vectors(i, col);
      const cplx c = vdot(p, v);
      for (int i = 0; i < 4; ++i) v[i] -= c * p[i];
      const double nr = vnorm(v);
      if (nr > best_norm) {
        best_norm = nr;
        best = v;
      }
    }
    for (auto& x : best) x /= best_norm;
    return best;
  }

  // Fall back to the singlet itself.
  Vec hs = matvec(h.mat(), s);
  const cplx lam = vdot(s, hs);
  for (int i = 0; i < 4; ++i) hs[i] -= lam * s[i];
  if (vnorm(hs) <= tol * scale) return s;
  return std::nullopt;
}

Matrix sample_swap_commuting_unitary(uint64_t seed) {
  Rng rng(seed);
  const double phase = 2.0 * M_PI * rng.uniform();
  const Matrix v3 = haar_unitary(3, rng);
  Matrix block(4);
  block(0, 0) = std::exp(cplx(0.0, phase));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) block(i + 1, j + 1) = v3(i, j);
  const Matrix& u = singlet_basis_transform();
  return u.adjoint() * block * u;
}

}  // namespace hamuni
