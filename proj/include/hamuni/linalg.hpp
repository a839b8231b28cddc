#pragma once

#include <array>
#include <complex>
#include <span>
#include <string>
#include <vector>

namespace hamuni {

using cplx = std::complex<double>;
using Vec = std::vector<cplx>;

// Numerical policy shared by all modules.
inline constexpr double kHermTol = 1e-10;  // relative to max-entry magnitude
inline constexpr double kRankTol = 1e-9;
inline constexpr double kDegTol = 1e-9;    // eigenvalue degeneracy / condition tolerance
inline constexpr int kMaxJacobiSweeps = 100;

inline double eig_tol(int dim) { return 1e-12 * static_cast<double>(dim); }

/// Dense square complex matrix, row major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}

  static Matrix identity(int dim);
  static Matrix zero(int dim) { return Matrix(dim); }

  int dim() const { return dim_; }

  cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
  const cplx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(cplx s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  Matrix adjoint() const;
  Matrix transpose() const;
  cplx trace() const;
  double fnorm() const;    // Frobenius norm
  double max_abs() const;  // largest entry magnitude

  bool operator==(const Matrix& o) const = default;

 private:
  int dim_ = 0;
  std::vector<cplx> a_;
};

/// Hermitian matrix; the constructor symmetrizes via (M + M^dag)/2 and rejects
/// inputs whose deviation from Hermiticity exceeds kHermTol relative to the
/// largest entry.
class Hermitian {
 public:
  Hermitian() = default;
  explicit Hermitian(const Matrix& m);

  static Hermitian zero(int dim) { return Hermitian(Matrix::zero(dim)); }

  const Matrix& mat() const { return m_; }
  int dim() const { return m_.dim(); }
  double fnorm() const { return m_.fnorm(); }
  const cplx& operator()(int r, int c) const { return m_(r, c); }

  friend Hermitian operator+(const Hermitian& a, const Hermitian& b) { return Hermitian(a.m_ + b.m_); }
  friend Hermitian operator-(const Hermitian& a, const Hermitian& b) { return Hermitian(a.m_ - b.m_); }
  friend Hermitian operator*(double s, const Hermitian& a) { return Hermitian(cplx(s, 0.0) * a.m_); }

  bool operator==(const Hermitian& o) const = default;

 private:
  Matrix m_;
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // columns are orthonormal eigenvectors
};

/// Cyclic Jacobi eigensolver for Hermitian matrices.  Deterministic: fixed
/// rotation order, eigenvalues sorted ascending with index tiebreak, each
/// eigenvector phase-fixed so its largest component is real positive.
/// Throws std::runtime_error if not converged after kMaxJacobiSweeps sweeps.
EigenDecomposition eig_hermitian(const Hermitian& h);

/// i[A,B] = i(AB - BA); exact Hermitian after symmetrization.
Hermitian commutator_i(const Hermitian& a, const Hermitian& b);

/// e^{iHt} via the eigendecomposition of H.
Matrix expm_i(const Hermitian& h, double t);

/// Real inner product tr(AB) on Hermitian matrices.
double hs_inner(const Hermitian& a, const Hermitian& b);

/// Largest singular value (spectral norm).
double opnorm(const Matrix& m);

/// Dimension of the real linear span of the given Hermitian matrices under
/// hs_inner; modified Gram-Schmidt with a second orthogonalization pass,
/// discarding residuals below rank_tol times the largest input norm.
int real_span_rank(std::span<const Hermitian> mats, double rank_tol = kRankTol);

// Vector helpers for witness eigenvectors.
Vec matvec(const Matrix& m, const Vec& v);
cplx vdot(const Vec& a, const Vec& b);  // conjugate-linear in the first slot
double vnorm(const Vec& v);
Matrix outer(const Vec& u, const Vec& v);  // |u><v|

Matrix kron(const Matrix& a, const Matrix& b);

/// Pauli matrices: index 0..3 = I, X, Y, Z.
const Matrix& pauli(int k);
Matrix pauli_kron(int i, int j);

/// Coefficients c[4*i+j] with H = sum c_ij sigma_i (x) sigma_j (4x4 input).
std::array<double, 16> pauli_coefficients(const Hermitian& h);
Hermitian hermitian_from_pauli(const std::array<double, 16>& c);

}  // namespace hamuni
