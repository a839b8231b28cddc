#include "hamuni/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "hamuni/classify2.hpp"
#include "hamuni/classify3.hpp"
#include "hamuni/rng.hpp"
#include "hamuni/swap.hpp"
#include "hamuni/tridiagonal.hpp"

namespace hamuni {

std::optional<Family> family_from_string(const std::string& name) {
  if (name == "generic") return Family::Generic;
  if (name == "traceless") return Family::Traceless;
  if (name == "shared-eigvec") return Family::SharedEigvec;
  if (name == "t-local") return Family::SwapLocal;
  if (name == "local") return Family::Local;
  if (name == "product-eigvec") return Family::ProductEigvec;
  if (name == "antisym") return Family::Antisymmetric;
  if (name == "commuting-u") return Family::CommutingU;
  return std::nullopt;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Generic: return "generic";
    case Family::Traceless: return "traceless";
    case Family::SharedEigvec: return "shared-eigvec";
    case Family::SwapLocal: return "t-local";
    case Family::Local: return "local";
    case Family::ProductEigvec: return "product-eigvec";
    case Family::Antisymmetric: return "antisym";
    case Family::CommutingU: return "commuting-u";
  }
  return "?";
}

std::vector<Family> all_families() {
  return {Family::Generic,       Family::Traceless, Family::SharedEigvec,
          Family::SwapLocal,     Family::Local,     Family::ProductEigvec,
          Family::Antisymmetric, Family::CommutingU};
}

namespace {

// Hamiltonian with the prescribed unit eigenvector: a random eigenvalue on v
// plus a random Hermitian supported on the orthogonal complement.
Hermitian hermitian_with_eigenvector(const Vec& v, Rng& rng) {
  // Orthonormal completion of v.
  std::vector<Vec> basis{v};
  int drop = 0;
  double best = -1.0;
  for (int i = 0; i < 4; ++i)
    if (std::abs(v[i]) > best) {
      best = std::abs(v[i]);
      drop = i;
    }
  for (int e = 0; e < 4 && basis.size() < 4; ++e) {
    if (e == drop) continue;
    Vec w(4, 0.0);
    w[e] = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) {
        const cplx ip = vdot(b, w);
        for (int i = 0; i < 4; ++i) w[i] -= ip * b[i];
      }
    const double nr = vnorm(w);
    for (auto& x : w) x /= nr;
    basis.push_back(w);
  }
  const double lam = rng.gaussian();
  Matrix m = cplx(lam, 0.0) * outer(v, v);
  const Hermitian w3 = random_hermitian(3, rng);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m += w3(i, j) * outer(basis[i + 1], basis[j + 1]);
  return Hermitian(m);
}

Hermitian construct(Family f, Rng& rng, uint64_t seed) {
  switch (f) {
    case Family::Generic:
      return random_hermitian(4, rng);
    case Family::Traceless: {
      const Hermitian h = random_hermitian(4, rng);
      const double r = 0.25 * h.mat().trace().real();
      return h - r * Hermitian(Matrix::identity(4));
    }
    case Family::SharedEigvec: {
      // Random unit vector in the triplet space (orthogonal to the singlet).
      const double r = 1.0 / std::sqrt(2.0);
      const Vec e1{1.0, 0.0, 0.0, 0.0};
      const Vec e2{0.0, r, r, 0.0};
      const Vec e3{0.0, 0.0, 0.0, 1.0};
      Vec v(4, 0.0);
      const cplx c1 = rng.cgaussian(), c2 = rng.cgaussian(), c3 = rng.cgaussian();
      for (int i = 0; i < 4; ++i) v[i] = c1 * e1[i] + c2 * e2[i] + c3 * e3[i];
      const double nr = vnorm(v);
      for (auto& x : v) x /= nr;
      return hermitian_with_eigenvector(v, rng);
    }
    case Family::SwapLocal: {
      const Hermitian h1 = random_hermitian(2, rng);
      const Hermitian h2 = random_hermitian(2, rng);
      const Hermitian local(kron(h1.mat(), pauli(0)) + kron(pauli(0), h2.mat()));
      const Matrix p = sample_swap_commuting_unitary(rng.next_u64() ^ seed);
      return Hermitian(p * local.mat() * p.adjoint());
    }
    case Family::Local: {
      const Hermitian h1 = random_hermitian(2, rng);
      const Hermitian h2 = random_hermitian(2, rng);
      return Hermitian(kron(h1.mat(), pauli(0)) + kron(pauli(0), h2.mat()));
    }
    case Family::ProductEigvec: {
      Vec a{rng.cgaussian(), rng.cgaussian()};
      const double nr = vnorm(a);
      for (auto& x : a) x /= nr;
      Vec v(4);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) v[i * 2 + j] = a[i] * a[j];
      return hermitian_with_eigenvector(v, rng);
    }
    case Family::Antisymmetric: {
      // Antisymmetric Hermitian = real span of the six Y-type elements.
      Matrix a(4);
      for (int k = 0; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l) {
          const double ckl = rng.gaussian();
          a(k, l) += cplx(0.0, -ckl);
          a(l, k) += cplx(0.0, ckl);
        }
      const double r = rng.gaussian();
      Rng sub = rng.substream(0xABCD);
      const Matrix u = haar_unitary(2, sub);
      const Matrix uu = kron(u, u);
      return Hermitian(cplx(r, 0.0) * Matrix::identity(4) + uu * a * uu.adjoint());
    }
    case Family::CommutingU: {
      Vec n{rng.gaussian(), rng.gaussian(), rng.gaussian()};
      double nr = 0.0;
      for (const auto& x : n) nr += std::norm(x);
      nr = std::sqrt(nr);
      Matrix u(2);
      for (int k = 0; k < 3; ++k) u += (n[k].real() / nr) * pauli(k + 1);
      const Hermitian k_op(kron(u, pauli(0)) + kron(pauli(0), u));
      const auto eig = eig_hermitian(k_op);
      // Random Hermitian block-diagonal in the eigenbasis of u(x)I + I(x)u.
      const auto clusters = eigenvalue_clusters(eig.values, k_op.fnorm());
      Matrix m(4);
      for (const auto& [lo, hi] : clusters) {
        const int k = hi - lo + 1;
        const Hermitian w = random_hermitian(k, rng);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) {
            Vec vi(4), vj(4);
            for (int t = 0; t < 4; ++t) {
              vi[t] = eig.vectors(t, lo + i);
              vj[t] = eig.vectors(t, lo + j);
            }
            m += w(i, j) * outer(vi, vj);
          }
      }
      return Hermitian(m);
    }
  }
  throw std::logic_error("construct: unreachable");
}

}  // namespace

bool verify_family_membership(Family f, const Hermitian& h) {
  switch (f) {
    case Family::Generic:
      return true;
    case Family::Traceless:
      return std::abs(h.mat().trace().real()) <= 1e-12 * std::max(1.0, h.fnorm());
    case Family::SharedEigvec: {
      const TridiagonalForm t = tridiagonalize(h);
      return t.b_zeroed || t.d_zeroed || t.f_zeroed;
    }
    case Family::SwapLocal:
      return swap_similar_to_local(h).has_value();
    case Family::Local:
      return local_decomposition(h).has_value();
    case Family::ProductEigvec:
      return product_eigenvector(h).has_value();
    case Family::Antisymmetric:
      return antisymmetric_conjugate(h).has_value();
    case Family::CommutingU:
      return commuting_local_unitary(h).has_value();
  }
  return false;
}

Hermitian sample_family(Family f, uint64_t seed) {
  Rng root(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Rng rng = root.substream(attempt);
    const Hermitian h = construct(f, rng, seed);
    if (verify_family_membership(f, h)) return h;
  }
  throw std::runtime_error(std::string("sample_family: could not produce a verified member of ") +
                           family_name(f));
}

}  // namespace hamuni
