#pragma once

#include "hamuni/linalg.hpp"
#include "hamuni/swap.hpp"

namespace hamuni {

/// Canonical tridiagonal form of a two-qubit Hamiltonian: in the singlet basis
/// the matrix is real tridiagonal with entries
///
///     [ a b 0 0 ]
///     [ b c d 0 ]        b, d, f >= 0,
///     [ 0 d e f ]        b = 0  =>  d = f = 0 and c >= e >= g,
///     [ 0 0 f g ]        d = 0  =>  f = 0 and e >= g.
///
/// Every two-qubit Hamiltonian has exactly one such form among all
/// conjugations by swap-commuting unitaries, so the seven reals identify the
/// swap-similarity class.
struct TridiagonalForm {
  double a = 0, b = 0, c = 0, d = 0, e = 0, f = 0, g = 0;
  int form_type = 0;  // 1: b,d,f>0; 2: f=0; 3: d=f=0; 4: diagonal
  Matrix conjugator;  // computational basis; commutes with the swap gate,
                      // conjugator * H * conjugator^dag = xi()

  // Raw magnitudes measured before the zero cut, and whether the cut fired.
  double raw_b = 0, raw_d = 0, raw_f = 0;
  bool b_zeroed = false, d_zeroed = false, f_zeroed = false;
  // Set when any of b, d, f sits within a factor 10 of the zero threshold;
  // the computed type is then sensitive to the cut.
  bool borderline = false;

  double trace() const { return a + c + e + g; }
  SingletBasisMatrix xi_singlet_basis() const;  // built from the seven reals
  Hermitian xi() const;                         // computational basis
};

/// Computes the unique tridiagonal form.  One unitary per column tail
/// (Householder reflector with a phase fix embedded in I_k (+) U(4-k)), with
/// tail rotations replaced by sub-block diagonalization when b or d falls
/// under tol*max(1, ||H||).
TridiagonalForm tridiagonalize(const Hermitian& h, double tol = kDegTol);

/// True iff the tridiagonal forms of the two Hamiltonians agree entrywise
/// within tol, i.e. iff some swap-commuting unitary conjugates one into the
/// other.
bool swap_similar(const Hermitian& h1, const Hermitian& h2, double tol = 1e-8);

}  // namespace hamuni
