#pragma once

#include <optional>

#include "hamuni/linalg.hpp"
#include "hamuni/tridiagonal.hpp"

namespace hamuni {

enum class Verdict { Universal, NonUniversal };

/// Local Hamiltonian h1 (x) I + I (x) h2 reached from the input by the
/// swap-commuting conjugator: conjugator * H * conjugator^dag = local form.
struct SwapLocalWitness {
  Hermitian h1;  // 2x2
  Hermitian h2;  // 2x2
  Matrix conjugator;
};

struct BorderlineFlags {
  bool tridiagonal_cut = false;  // b, d or f near the zero threshold
  bool diagonal_spread = false;  // a=c=e=g test near threshold
  bool trace = false;            // trace test near threshold
  bool any() const { return tridiagonal_cut || diagonal_spread || trace; }
};

/// Outcome of the two-qubit universality decision.  A Hamiltonian is
/// universal exactly when none of the three conditions holds; the conditions
/// can overlap, so all three are reported.
struct ClassificationReport {
  Verdict verdict = Verdict::NonUniversal;
  bool cond_swap_similar_local = false;
  bool cond_shared_eigenvector = false;
  bool cond_traceless = false;
  std::optional<Vec> shared_eigenvector;          // common eigenvector with the swap gate
  std::optional<SwapLocalWitness> local_witness;  // decomposition when swap-similar to local
  double trace_value = 0.0;
  double diagonal_spread = 0.0;  // max - min of the tridiagonal diagonal
  TridiagonalForm tridiagonal;
  BorderlineFlags borderline;
};

/// Decides two-qubit universality from the tridiagonal form: non-universal
/// iff bdf = 0, or the diagonal is constant (with bdf != 0), or the trace
/// vanishes; when bdf = 0 the locality condition is decided by the
/// eigenvalue/overlap route instead of the diagonal test.
ClassificationReport classify(const Hermitian& h, double tol = kDegTol);

/// Searches for an eigenvalue pairing (l1+l2 = l3+l4) whose singlet overlaps
/// can be equalized within each pair (degenerate eigenspaces contribute a
/// freely splittable overlap mass), then constructs the local model and the
/// swap-commuting conjugator reaching it.
std::optional<SwapLocalWitness> swap_similar_to_local(const Hermitian& h, double tol = kDegTol);

/// Unitary U with U H1 U^dag = H2 and [U, swap] = 0, built from matched
/// eigenbases when the spectra agree and the per-eigenspace singlet overlaps
/// match; none otherwise.
std::optional<Matrix> swap_similarity_witness(const Hermitian& h1, const Hermitian& h2,
                                              double tol = kDegTol);

/// Closed-form spectrum of a tridiagonal form with constant diagonal a and
/// off-diagonals b, d, f; entry order (i,j) = (0,0),(0,1),(1,0),(1,1) for
/// a + (-1)^i sqrt((b^2+d^2+f^2+(-1)^j z)/2).
std::array<double, 4> equal_diag_spectrum(double a, double b, double d, double f);

/// Singlet overlaps of the corresponding eigenvectors, same entry order
/// (independent of i).
std::array<double, 4> equal_diag_singlet_overlaps(double b, double d, double f);

}  // namespace hamuni
