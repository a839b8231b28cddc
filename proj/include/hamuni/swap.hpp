#pragma once

#include <optional>

#include "hamuni/linalg.hpp"

namespace hamuni {

/// The two-qubit swap gate in the computational basis.
const Matrix& swap_gate();

/// Singlet state (|01> - |10>)/sqrt(2); spans the -1 eigenspace of the swap.
const Vec& singlet_state();

/// Unitary change of basis under which the swap gate becomes diag(-1,1,1,1)
/// and the singlet becomes e1.  We call the image the singlet basis.
const Matrix& singlet_basis_transform();

/// The swap gate expressed in the singlet basis: diag(-1,1,1,1).
const Matrix& swap_in_singlet_basis();

/// 4x4 matrix tagged as being expressed in the singlet basis.  Kept as a
/// distinct type so computational-basis and singlet-basis matrices cannot be
/// mixed by accident.
struct SingletBasisMatrix {
  Matrix m;
};

SingletBasisMatrix to_singlet_basis(const Matrix& computational);
Matrix from_singlet_basis(const SingletBasisMatrix& sb);
SingletBasisMatrix to_singlet_basis(const Hermitian& h);
Hermitian hermitian_from_singlet_basis(const SingletBasisMatrix& sb);

/// True iff ||MS - SM||_F <= tol * ||M||_F for the swap gate S.
bool commutes_with_swap(const Matrix& m, double tol = kDegTol);

/// True iff the singlet is an eigenvector of the (normal) matrix within tol.
/// Throws std::invalid_argument when the input is not normal within tol.
bool singlet_is_eigenvector(const Matrix& normal_m, double tol = kDegTol);

/// Finds a common eigenvector of H and the swap gate if one exists:
/// an eigenvector of H orthogonal to the singlet (degenerate eigenspaces are
/// searched for their intersection with the singlet's orthocomplement), or
/// the singlet itself when it is an eigenvector of H.
std::optional<Vec> shares_eigenvector_with_swap(const Hermitian& h, double tol = kDegTol);

/// Deterministic swap-commuting unitary: conjugate of U(1) (+) Haar U(3) back
/// to the computational basis.
Matrix sample_swap_commuting_unitary(uint64_t seed);

/// Eigenvalue clusters of an ascending eigenvalue list at the degeneracy
/// threshold tol*max(1, scale); each cluster is a [first, last] index range.
std::vector<std::pair<int, int>> eigenvalue_clusters(const std::vector<double>& ascending,
                                                     double scale, double tol = kDegTol);

}  // namespace hamuni
