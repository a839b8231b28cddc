#pragma once

#include <cstdint>

#include "hamuni/linalg.hpp"

namespace hamuni {

/// splitmix64-based generator; self-contained so seeded streams are identical
/// across platforms and toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64();
  double uniform();   // [0,1)
  double gaussian();  // standard normal, Box-Muller
  cplx cgaussian();   // complex with independent N(0,1) parts

  /// Independent stream for sample index i under the same root seed.
  Rng substream(uint64_t i) const;

 private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

Matrix ginibre(int dim, Rng& rng);

/// Haar-distributed unitary: QR of a Ginibre matrix via modified Gram-Schmidt,
/// which leaves the R diagonal real positive.
Matrix haar_unitary(int dim, Rng& rng);

/// Gaussian Hermitian: (G + G^dag)/2 for Ginibre G.
Hermitian random_hermitian(int dim, Rng& rng);

}  // namespace hamuni
