#include "hamuni/tridiagonal.hpp"

#include <cmath>
#include <stdexcept>

namespace hamuni {

namespace {

// Unitary mapping x to (||x||, 0, ..., 0): complex Householder reflector
// followed by a diagonal phase fix of the first coordinate.
Matrix tail_reducer(const Vec& x) {
  const int k = static_cast<int>(x.size());
  const double nx = vnorm(x);
  const double x0 = std::abs(x[0]);
  const cplx phase = x0 > 0.0 ? x[0] / x0 : cplx(1.0, 0.0);
  Vec v = x;
  v[0] += phase * nx;
  double vv = 0.0;
  for (const auto& c : v) vv += std::norm(c);
  Matrix r = Matrix::identity(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) r(i, j) -= 2.0 * v[i] * std::conj(v[j]) / vv;
  // r maps x to -phase*||x||*e1; rotate the first coordinate positive.
  for (int j = 0; j < k; ++j) r(0, j) *= -std::conj(phase);
  return r;
}

// Embeds a k x k block into the lower-right corner of a 4 x 4 identity.
Matrix embed_lower(const Matrix& block) {
  const int k = block.dim();
  Matrix p = Matrix::identity(4);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) p(4 - k + i, 4 - k + j) = block(i, j);
  return p;
}

// Unitary w with w * block * w^dag diagonal, eigenvalues descending.
Matrix descending_diagonalizer(const Matrix& block) {
  const Hermitian hb(block);
  const auto eig = eig_hermitian(hb);
  const int k = block.dim();
  Matrix w(k);
  for (int row = 0; row < k; ++row)
    for (int j = 0; j < k; ++j) w(row, j) = std::conj(eig.vectors(j, k - 1 - row));
  return w;
}

}  // namespace

SingletBasisMatrix TridiagonalForm::xi_singlet_basis() const {
  Matrix m(4);
  m(0, 0) = a;
  m(1, 1) = c;
  m(2, 2) = e;
  m(3, 3) = g;
  m(0, 1) = m(1, 0) = b;
  m(1, 2) = m(2, 1) = d;
  m(2, 3) = m(3, 2) = f;
  return SingletBasisMatrix{m};
}

Hermitian TridiagonalForm::xi() const { return hermitian_from_singlet_basis(xi_singlet_basis()); }

TridiagonalForm tridiagonalize(const Hermitian& h, double tol) {
  if (h.dim() != 4) throw std::invalid_argument("tridiagonalize: need a 4x4 Hamiltonian");
  const double cut = tol * std::max(1.0, h.fnorm());
  auto near_cut = [&](double v) { return v > cut / 10.0 && v < cut * 10.0; };

  // cur is kept exactly Hermitian entrywise so that sub-blocks extracted for
  // the b=0 / d=0 branches stay valid Hermitian inputs even when they are
  // pure roundoff noise.
  auto symmetrize = [](Matrix& m) {
    for (int i = 0; i < 4; ++i) {
      m(i, i) = cplx(m(i, i).real(), 0.0);
      for (int j = i + 1; j < 4; ++j) {
        const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
        m(i, j) = v;
        m(j, i) = std::conj(v);
      }
    }
  };
  Matrix cur = to_singlet_basis(h).m;
  symmetrize(cur);
  Matrix q = Matrix::identity(4);
  auto apply = [&](const Matrix& p) {
    cur = p * cur * p.adjoint();
    symmetrize(cur);
    q = p * q;
  };

  TridiagonalForm out;
  out.a = cur(0, 0).real() + 0.0;

  const Vec tail1{cur(1, 0), cur(2, 0), cur(3, 0)};
  out.raw_b = vnorm(tail1);
  out.borderline = near_cut(out.raw_b);
  if (out.raw_b <= cut) {
    out.b_zeroed = true;
    Matrix block(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) block(i, j) = cur(i + 1, j + 1);
    apply(embed_lower(descending_diagonalizer(block)));
    out.b = out.d = out.f = 0.0;
    out.d_zeroed = out.f_zeroed = true;
    out.c = cur(1, 1).real() + 0.0;
    out.e = cur(2, 2).real() + 0.0;
    out.g = cur(3, 3).real() + 0.0;
    out.form_type = 4;
  } else {
    out.b = out.raw_b;
    apply(embed_lower(tail_reducer(tail1)));
    out.c = cur(1, 1).real() + 0.0;

    const Vec tail2{cur(2, 1), cur(3, 1)};
    out.raw_d = vnorm(tail2);
    out.borderline = out.borderline || near_cut(out.raw_d);
    if (out.raw_d <= cut) {
      out.d_zeroed = true;
      Matrix block(2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) block(i, j) = cur(i + 2, j + 2);
      apply(embed_lower(descending_diagonalizer(block)));
      out.d = out.f = 0.0;
      out.f_zeroed = true;
      out.e = cur(2, 2).real() + 0.0;
      out.g = cur(3, 3).real() + 0.0;
      out.form_type = 3;
    } else {
      out.d = out.raw_d;
      apply(embed_lower(tail_reducer(tail2)));
      out.e = cur(2, 2).real() + 0.0;
      out.g = cur(3, 3).real() + 0.0;

      out.raw_f = std::abs(cur(3, 2));
      out.borderline = out.borderline || near_cut(out.raw_f);
      if (out.raw_f <= cut) {
        out.f_zeroed = true;
        out.f = 0.0;
        out.form_type = 2;
      } else {
        out.f = out.raw_f;
        Matrix ph = Matrix::identity(4);
        ph(3, 3) = std::conj(cur(3, 2) / out.raw_f);
        apply(ph);
        out.form_type = 1;
      }
    }
  }

  const Matrix& u = singlet_basis_transform();
  out.conjugator = u.adjoint() * q * u;
  return out;
}

bool swap_similar(const Hermitian& h1, const Hermitian& h2, double tol) {
  const TridiagonalForm x1 = tridiagonalize(h1);
  const TridiagonalForm x2 = tridiagonalize(h2);
  const double diffs[] = {std::abs(x1.a - x2.a), std::abs(x1.b - x2.b), std::abs(x1.c - x2.c),
                          std::abs(x1.d - x2.d), std::abs(x1.e - x2.e), std::abs(x1.f - x2.f),
                          std::abs(x1.g - x2.g)};
  for (double d : diffs)
    if (d > tol) return false;
  return true;
}

}  // namespace hamuni
