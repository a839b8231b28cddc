#pragma once

#include <cmath>

#include "hamuni/linalg.hpp"
#include "hamuni/rng.hpp"
#include "hamuni/swap.hpp"

namespace hamuni::testing {

inline double dist(const Matrix& a, const Matrix& b) { return (a - b).fnorm(); }
inline double dist(const Hermitian& a, const Hermitian& b) { return (a - b).fnorm(); }

inline bool is_unitary(const Matrix& u, double tol = 1e-10) {
  return dist(u * u.adjoint(), Matrix::identity(u.dim())) <= tol;
}

inline Matrix diag4(double a, double b, double c, double d) {
  Matrix m(4);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  return m;
}

inline Hermitian pauli_pair(int i, int j) { return Hermitian(pauli_kron(i, j)); }

// Barenco's two-qubit gate: identity on |00>,|01>, a phased rotation block on
// |10>,|11>.  Used as a fixture with phi, beta, theta irrational multiples of
// pi and of each other.
inline Matrix barenco_gate(double phi, double beta, double theta) {
  Matrix a = Matrix::identity(4);
  const cplx i(0.0, 1.0);
  a(2, 2) = std::exp(i * beta) * std::cos(theta);
  a(2, 3) = -i * std::exp(i * (beta - phi)) * std::sin(theta);
  a(3, 2) = -i * std::exp(i * (beta + phi)) * std::sin(theta);
  a(3, 3) = std::exp(i * beta) * std::cos(theta);
  return a;
}

inline double barenco_phi() { return M_PI * std::sqrt(5.0) / 10.0; }
inline double barenco_beta() { return M_PI * std::sqrt(2.0) / 10.0; }
inline double barenco_theta() { return M_PI * std::sqrt(3.0) / 10.0; }

// The natural logarithm generator of the Barenco gate: zero on |00>,|01>,
// the matching Hermitian block on |10>,|11>.  Its whole Lie closure fixes
// |00>, so the nested-commutator certificate must fail on it.
inline Hermitian barenco_natural_log() {
  const double phi = barenco_phi(), beta = barenco_beta(), theta = barenco_theta();
  Matrix h(4);
  const cplx i(0.0, 1.0);
  h(2, 2) = beta;
  h(3, 3) = beta;
  h(2, 3) = -theta * std::exp(-i * phi);
  h(3, 2) = -theta * std::exp(i * phi);
  return Hermitian(h);
}

// Alternative generator of the same gate: acts with eigenvalues 2*pi and
// 4*pi diagonally in a random basis on the degenerate +1 eigenspace
// span{|00>,|01>}, so it still exponentiates to the Barenco gate.
inline Hermitian barenco_randomized_log(uint64_t seed) {
  Rng rng(seed);
  const Matrix v = haar_unitary(2, rng);
  Vec u1{v(0, 0), v(1, 0), 0.0, 0.0};
  Vec u2{v(0, 1), v(1, 1), 0.0, 0.0};
  Matrix h = cplx(2.0 * M_PI, 0.0) * outer(u1, u1) + cplx(4.0 * M_PI, 0.0) * outer(u2, u2);
  const Hermitian base = barenco_natural_log();
  for (int i = 2; i < 4; ++i)
    for (int j = 2; j < 4; ++j) h(i, j) += base(i, j);
  return Hermitian(h);
}

}  // namespace hamuni::testing
