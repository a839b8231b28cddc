#pragma once

#include <optional>
#include <utility>

#include "hamuni/linalg.hpp"

namespace hamuni {

/// H = r*I + (U (x) U) A (U (x) U)^dag with A purely imaginary Hermitian
/// (A^T = -A); the reconstruction holds exactly by construction, the quality
/// of the search shows up in ||A + A^T||.
struct AntisymmetricWitness {
  double r = 0.0;
  Matrix u;     // 2x2 unitary
  Hermitian a;  // 4x4, antisymmetric within the search tolerance
};

enum class Verdict3 { NonUniversal3, Universal3, Unknown };

/// Membership report for the known families of Hamiltonians that cannot
/// become universal on three qubits, plus the brute-force closure dimension.
/// The family list is not known to be complete, so "no hit but closure below
/// 64" is reported as Unknown rather than guessed.
struct ThreeQubitReport {
  bool local = false;
  std::optional<std::pair<Hermitian, Hermitian>> local_witness;
  bool product_eigenvector = false;
  std::optional<Vec> product_witness;  // |a> with H(a(x)a) = lambda(a(x)a)
  bool traceless = false;
  double trace_value = 0.0;
  bool antisymmetric_conjugate = false;
  std::optional<AntisymmetricWitness> antisymmetric_witness;
  bool commuting_local_unitary = false;
  std::optional<Hermitian> commuting_witness;  // traceless 2x2 u with
                                               // [H, u(x)I + I(x)u] = 0
  int closure_dim_3 = 0;
  Verdict3 verdict = Verdict3::Unknown;

  bool any_family_hit() const {
    return local || product_eigenvector || traceless || antisymmetric_conjugate ||
           commuting_local_unitary;
  }
};

/// H = h1 (x) I + I (x) h2 exactly (all nine two-body Pauli coefficients
/// vanish); witnesses read off the one-body coefficients.
std::optional<std::pair<Hermitian, Hermitian>> local_decomposition(const Hermitian& h,
                                                                   double tol = kDegTol);

/// Searches the eigenspaces for an eigenvector of the form a (x) a:
/// non-degenerate eigenvectors are tested directly (reshaped to a rank-1
/// symmetric 2x2 matrix), degenerate eigenspaces via a multi-start
/// minimization over the Bloch sphere.
std::optional<Vec> product_eigenvector(const Hermitian& h, double tol = 1e-8);

/// Searches SO(3) (acting on the Pauli coefficients by simultaneous
/// single-qubit rotation) for a frame in which the traceless part has purely
/// imaginary entries; a spectrum symmetric about zero is required first.
std::optional<AntisymmetricWitness> antisymmetric_conjugate(const Hermitian& h,
                                                            double tol = 1e-8);

/// Nullspace of the linear map u -> [H, u (x) I + I (x) u] over traceless
/// Hermitian 2x2 u; any nonzero solution yields commuting local unitaries
/// e^{i eps u} (x) e^{i eps u} with distinct eigenvalues.
std::optional<Hermitian> commuting_local_unitary(const Hermitian& h, double tol = kDegTol);

/// Runs all five family tests and the 3-qubit closure.
ThreeQubitReport classify3(const Hermitian& h, double tol = kDegTol);

}  // namespace hamuni
