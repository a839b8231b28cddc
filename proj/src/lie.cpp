#include "hamuni/lie.hpp"

#include <cmath>
#include <stdexcept>

namespace hamuni {

namespace {

constexpr double kNoiseFloor = 1e-14;   // unit-norm generator entry noise
constexpr double kNoiseSafety = 100.0;  // residuals must clear this multiple

double raw_inner(const Matrix& a, const Matrix& b) {
  const int n = a.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += (a(i, j) * b(j, i)).real();
  return s;
}

// Orthonormal basis element plus a running bound on the spurious content it
// may carry.  Normalizing a small residual amplifies whatever roundoff it
// contains, and commutators of contaminated elements can then present that
// noise as an apparently independent direction, so the rank decision must
// compare each residual against the propagated noise, not just rank_tol.
struct TrackedElement {
  Hermitian value;
  double noise;
};

bool mgs_add(std::vector<TrackedElement>& basis, const Hermitian& m, double cand_noise,
             double thresh) {
  Matrix r = m.mat();
  double proj_noise = 0.0;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      const double ip = raw_inner(b.value.mat(), r);
      r -= cplx(ip, 0.0) * b.value.mat();
      proj_noise += std::abs(ip) * b.noise;
    }
  }
  const double nr = r.fnorm();
  const double noise = cand_noise + proj_noise + kNoiseFloor;
  if (nr <= thresh || nr <= kNoiseSafety * noise) return false;
  basis.push_back({Hermitian(cplx(1.0 / nr, 0.0) * r), noise / nr});
  return true;
}

}  // namespace

LieSpan lie_closure(std::span<const Hermitian> generators, double rank_tol) {
  if (generators.empty()) throw std::invalid_argument("lie_closure: no generators");
  const int n = generators.front().dim();
  for (const auto& g : generators)
    if (g.dim() != n) throw std::invalid_argument("lie_closure: generator dimension mismatch");

  std::vector<TrackedElement> basis;
  const int full = n * n;

  for (const auto& g : generators) {
    const double nr = g.fnorm();
    if (nr == 0.0) continue;
    mgs_add(basis, 1.0 / nr * g, kNoiseFloor, rank_tol);
  }

  // Every unordered basis pair is commutated exactly once: element h pairs
  // with all earlier elements when it is processed.
  for (size_t h = 0; h < basis.size() && static_cast<int>(basis.size()) < full; ++h) {
    for (size_t j = 0; j < h && static_cast<int>(basis.size()) < full; ++j) {
      const Hermitian c = commutator_i(basis[h].value, basis[j].value);
      // ||i[A,B]|| amplifies the contamination of both inputs by at most
      // 2*||the other||, and the inputs are unit norm.
      const double cand_noise = 2.0 * (basis[h].noise + basis[j].noise);
      mgs_add(basis, c, cand_noise, rank_tol);
    }
  }

  LieSpan span;
  span.ambient_dim = n;
  for (auto& e : basis) span.basis.push_back(std::move(e.value));
  return span;
}

Matrix qubit_permutation(int n, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("qubit_permutation: bad size");
  const int dim = 1 << n;
  Matrix p(dim);
  for (int x = 0; x < dim; ++x) {
    int y = 0;
    for (int k = 1; k <= n; ++k) {
      const int bit = (x >> (n - k)) & 1;          // qubit k of input
      y |= bit << (n - perm[k - 1]);               // moves to position perm[k]
    }
    p(y, x) = 1.0;
  }
  return p;
}

Hermitian embed_on_pair(const Hermitian& h, int n, int qi, int qj) {
  if (h.dim() != 4) throw std::invalid_argument("embed_on_pair: need a 4x4 Hamiltonian");
  if (n < 2 || n > 3) throw std::invalid_argument("embed_on_pair: supported qubit counts are 2 and 3");
  if (qi < 1 || qi > n || qj < 1 || qj > n || qi == qj)
    throw std::invalid_argument("embed_on_pair: invalid qubit pair");
  const int dim = 1 << n;
  Matrix m(dim);
  const int rest_mask = (dim - 1) & ~((1 << (n - qi)) | (1 << (n - qj)));
  for (int r = 0; r < dim; ++r) {
    const int hr = (((r >> (n - qi)) & 1) << 1) | ((r >> (n - qj)) & 1);
    for (int c = 0; c < dim; ++c) {
      if ((r & rest_mask) != (c & rest_mask)) continue;
      const int hc = (((c >> (n - qi)) & 1) << 1) | ((c >> (n - qj)) & 1);
      m(r, c) = h(hr, hc);
    }
  }
  return Hermitian(m);
}

int universality_dimension(const Hermitian& h, int n, double rank_tol) {
  if (n < 2 || n > 3) throw std::invalid_argument("universality_dimension: supported qubit counts are 2 and 3");
  std::vector<Hermitian> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) gens.push_back(embed_on_pair(h, n, i, j));
  return lie_closure(gens, rank_tol).dimension();
}

}  // namespace hamuni
