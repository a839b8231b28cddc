#include "hamuni/rng.hpp"

#include <cmath>

namespace hamuni {

uint64_t Rng::next_u64() {
  state_ += 0x9E3779B97F4A7C15ull;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double th = 2.0 * M_PI * u2;
  spare_ = r * std::sin(th);
  have_spare_ = true;
  return r * std::cos(th);
}

cplx Rng::cgaussian() { return {gaussian(), gaussian()}; }

Rng Rng::substream(uint64_t i) const {
  Rng probe(state_ + 0x9E3779B97F4A7C15ull * (i + 1));
  return Rng(probe.next_u64());
}

Matrix ginibre(int dim, Rng& rng) {
  Matrix g(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.cgaussian();
  return g;
}

Matrix haar_unitary(int dim, Rng& rng) {
  const Matrix g = ginibre(dim, rng);
  Matrix q(dim);
  for (int col = 0; col < dim; ++col) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = g(i, col);
    for (int pass = 0; pass < 2; ++pass) {
      for (int prev = 0; prev < col; ++prev) {
        cplx ip = 0.0;
        for (int i = 0; i < dim; ++i) ip += std::conj(q(i, prev)) * v[i];
        for (int i = 0; i < dim; ++i) v[i] -= ip * q(i, prev);
      }
    }
    const double nr = vnorm(v);
    for (int i = 0; i < dim; ++i) q(i, col) = v[i] / nr;
  }
  return q;
}

Hermitian random_hermitian(int dim, Rng& rng) {
  const Matrix g = ginibre(dim, rng);
  return Hermitian(cplx(0.5, 0.0) * (g + g.adjoint()));
}

}  // namespace hamuni
