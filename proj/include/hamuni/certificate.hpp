#pragma once

#include <string>

#include "hamuni/linalg.hpp"
#include "hamuni/tridiagonal.hpp"

namespace hamuni {

struct CertificateGenerator {
  std::string label;         // X12, Y13, Z1, ..., or H1..H16 for the
                             // nested-commutator scheme
  std::string construction;  // which formula/case produced it
  Hermitian value;
  double canonical_residual = -1.0;  // distance to the canonical basis
                                     // element; -1 when not applicable
};

/// Sixteen explicit elements of the Lie closure whose linear independence
/// certifies universality.
struct Certificate {
  std::vector<CertificateGenerator> generators;
  int rank = 0;
  bool independent = false;
  double max_canonical_residual = 0.0;
};

/// Builds the 16-generator certificate from a tridiagonal form in the singlet
/// basis: a full basis of 4x4 Hermitian matrices is assembled from nested
/// commutators of Xi and S Xi S (S the swap gate).  Requires a form that is
/// universal, i.e. bdf != 0, non-constant diagonal, nonzero trace; throws
/// std::invalid_argument otherwise.  Each labeled generator is compared with
/// the canonical basis element it should equal.
Certificate tridiagonal_certificate(const TridiagonalForm& xi, double tol = kDegTol);

/// The fixed 16-term nested-commutator scheme H1 = H, H2 = S H S,
/// Hj = i[H1, H(j-1)] (j = 3..14), H15 = i[H2, H3], H16 = i[H2, H5].
/// Independence of the 16 matrices is sufficient for universality but not
/// necessary: the scheme can fail on universal inputs.
Certificate nested_commutator_certificate(const Hermitian& h, double rank_tol = kRankTol);

/// Canonical Hermitian basis elements of the 4x4 space (1-based indices):
/// X_kl = E_kl + E_lk, Y_kl = -iE_kl + iE_lk, Z_k = E_kk - E_(k+1)(k+1).
Hermitian canonical_x(int k, int l);
Hermitian canonical_y(int k, int l);
Hermitian canonical_z(int k);

}  // namespace hamuni
