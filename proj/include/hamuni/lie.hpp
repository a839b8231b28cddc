#pragma once

#include <span>

#include "hamuni/linalg.hpp"

namespace hamuni {

/// Orthonormal basis (under hs_inner) of the real span computed by a Lie
/// closure; dimension() == (2^n)^2 certifies n-universality of the generators.
struct LieSpan {
  int ambient_dim = 0;  // 2^n
  std::vector<Hermitian> basis;
  int dimension() const { return static_cast<int>(basis.size()); }
};

/// Smallest real vector space containing the generators and closed under
/// i[.,.], computed by breadth-first commutator expansion with two-pass
/// modified Gram-Schmidt.  Generators are normalized to unit Frobenius norm
/// first (the dimension is scaling invariant), so rank_tol is an absolute
/// residual threshold.  Deterministic for a fixed generator order.
LieSpan lie_closure(std::span<const Hermitian> generators, double rank_tol = kRankTol);

/// 2^n x 2^n permutation unitary relabeling qubit k to position perm[k-1]
/// (1-based; qubit 1 is the most significant index bit).
Matrix qubit_permutation(int n, std::span<const int> perm);

/// Places a 4x4 two-qubit Hamiltonian on qubits (qi, qj) of an n-qubit
/// register, identity elsewhere; order matters (the first tensor factor of h
/// acts on qi).  Supported n: 2 or 3.
Hermitian embed_on_pair(const Hermitian& h, int n, int qi, int qj);

/// Dimension of the Lie closure of h embedded on every ordered qubit pair of
/// an n-qubit register; equal to (2^n)^2 iff that closure certifies
/// n-universality.
int universality_dimension(const Hermitian& h, int n, double rank_tol = kRankTol);

}  // namespace hamuni
