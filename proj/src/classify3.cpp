#include "hamuni/classify3.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "hamuni/lie.hpp"
#include "hamuni/rng.hpp"
#include "hamuni/swap.hpp"

namespace hamuni {

namespace {

// Plain Nelder-Mead on n parameters; deterministic, no restarts.
std::pair<std::vector<double>, double> nelder_mead(
    const std::function<double(const std::vector<double>&)>& f, std::vector<double> start,
    double step, int max_iter) {
  const size_t n = start.size();
  std::vector<std::pair<double, std::vector<double>>> simplex;
  simplex.reserve(n + 1);
  simplex.emplace_back(f(start), start);
  for (size_t i = 0; i < n; ++i) {
    auto p = start;
    p[i] += step;
    simplex.emplace_back(f(p), p);
  }
  auto order = [&]() {
    std::stable_sort(simplex.begin(), simplex.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
  };
  order();
  for (int it = 0; it < max_iter; ++it) {
    if (simplex.back().first - simplex.front().first < 1e-18 &&
        simplex.front().first < 1e-24)
      break;
    std::vector<double> centroid(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
      for (size_t k = 0; k < n; ++k) centroid[k] += simplex[i].second[k];
    }
    for (auto& c : centroid) c /= static_cast<double>(n);
    auto blend = [&](double t) {
      std::vector<double> p(n);
      for (size_t k = 0; k < n; ++k)
        p[k] = centroid[k] + t * (centroid[k] - simplex.back().second[k]);
      return p;
    };
    const auto refl = blend(1.0);
    const double fr = f(refl);
    if (fr < simplex.front().first) {
      const auto exp_p = blend(2.0);
      const double fe = f(exp_p);
      simplex.back() = fe < fr ? std::make_pair(fe, exp_p) : std::make_pair(fr, refl);
    } else if (fr < simplex[n - 1].first) {
      simplex.back() = {fr, refl};
    } else {
      const auto con = blend(fr < simplex.back().first ? 0.5 : -0.5);
      const double fc = f(con);
      if (fc < std::min(fr, simplex.back().first)) {
        simplex.back() = {fc, con};
      } else {
        for (size_t i = 1; i <= n; ++i) {
          for (size_t k = 0; k < n; ++k)
            simplex[i].second[k] = 0.5 * (simplex[i].second[k] + simplex[0].second[k]);
          simplex[i].first = f(simplex[i].second);
        }
      }
    }
    order();
  }
  return {simplex.front().second, simplex.front().first};
}

// SU(2) element for a rotation vector (axis * angle).
Matrix su2_from_rotvec(const std::vector<double>& w) {
  const double angle = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
  const double half = 0.5 * angle;
  double sx = 0.5;  // sin(half)/angle limit as angle -> 0
  if (angle > 1e-12) sx = std::sin(half) / angle;
  Matrix v(2);
  const cplx i(0.0, 1.0);
  v(0, 0) = std::cos(half) + i * (w[2] * sx);
  v(0, 1) = i * (w[0] * sx) + (w[1] * sx);
  v(1, 0) = i * (w[0] * sx) - (w[1] * sx);
  v(1, 1) = std::cos(half) - i * (w[2] * sx);
  return v;
}

// Adjoint rotation R_ki = tr(sigma_k V sigma_i V^dag)/2 of an SU(2) element.
std::array<std::array<double, 3>, 3> adjoint_rotation(const Matrix& v) {
  std::array<std::array<double, 3>, 3> r{};
  const Matrix vd = v.adjoint();
  for (int i = 0; i < 3; ++i) {
    const Matrix m = v * pauli(i + 1) * vd;
    for (int k = 0; k < 3; ++k) r[k][i] = 0.5 * (pauli(k + 1) * m).trace().real();
  }
  return r;
}

}  // namespace

std::optional<std::pair<Hermitian, Hermitian>> local_decomposition(const Hermitian& h, double tol) {
  if (h.dim() != 4) throw std::invalid_argument("local_decomposition: need a 4x4 Hamiltonian");
  const auto c = pauli_coefficients(h);
  const double tol_eff = tol * std::max(1.0, h.fnorm());
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j)
      if (std::abs(c[i * 4 + j]) > tol_eff) return std::nullopt;
  Matrix h1(2), h2(2);
  // The identity coefficient is split evenly between the two factors.
  h1 += cplx(c[0] / 2.0, 0.0) * pauli(0);
  h2 += cplx(c[0] / 2.0, 0.0) * pauli(0);
  for (int i = 1; i < 4; ++i) {
    h1 += cplx(c[i * 4], 0.0) * pauli(i);
    h2 += cplx(c[i], 0.0) * pauli(i);
  }
  return std::make_pair(Hermitian(h1), Hermitian(h2));
}

namespace {

// v reshaped as a 2x2 matrix M with v = a (x) a  <=>  M = a a^T.
std::optional<Vec> product_form_of(const Vec& v, double tol) {
  Matrix m(2);
  m(0, 0) = v[0];
  m(0, 1) = v[1];
  m(1, 0) = v[2];
  m(1, 1) = v[3];
  const double asym = (m - m.transpose()).fnorm();
  if (asym > tol) return std::nullopt;
  // Second singular value via the 2x2 Gram matrix.
  const Hermitian gram(m.adjoint() * m);
  const auto eig = eig_hermitian(gram);
  if (std::sqrt(std::max(eig.values.front(), 0.0)) > tol) return std::nullopt;
  const double c0 = std::sqrt(std::norm(m(0, 0)) + std::norm(m(1, 0)));
  const double c1 = std::sqrt(std::norm(m(0, 1)) + std::norm(m(1, 1)));
  Vec a(2);
  if (c0 >= c1) {
    a = {m(0, 0) / c0, m(1, 0) / c0};
  } else {
    a = {m(0, 1) / c1, m(1, 1) / c1};
  }
  return a;
}

Vec bloch_vector(double theta, double phi) {
  return Vec{std::cos(theta), std::sin(theta) * std::exp(cplx(0.0, phi))};
}

}  // namespace

std::optional<Vec> product_eigenvector(const Hermitian& h, double tol) {
  if (h.dim() != 4) throw std::invalid_argument("product_eigenvector: need a 4x4 Hamiltonian");
  const auto eig = eig_hermitian(h);
  const double scale = std::max(1.0, h.fnorm());
  const auto clusters = eigenvalue_clusters(eig.values, h.fnorm());

  auto verify = [&](const Vec& a) -> std::optional<Vec> {
    Vec aa(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) aa[i * 2 + j] = a[i] * a[j];
    Vec haa = matvec(h.mat(), aa);
    const cplx lam = vdot(aa, haa);
    for (int i = 0; i < 4; ++i) haa[i] -= lam * aa[i];
    if (vnorm(haa) <= 1e-8 * scale) return a;
    return std::nullopt;
  };

  for (const auto& [lo, hi] : clusters) {
    if (hi == lo) {
      Vec v(4);
      for (int i = 0; i < 4; ++i) v[i] = eig.vectors(i, lo);
      if (const auto a = product_form_of(v, tol))
        if (const auto ok = verify(*a)) return ok;
      continue;
    }
    // Degenerate eigenspace: minimize the projection residual of a (x) a
    // over the Bloch sphere, multi-start + Nelder-Mead.
    Matrix proj(4);
    for (int col = lo; col <= hi; ++col) {
      Vec v(4);
      for (int i = 0; i < 4; ++i) v[i] = eig.vectors(i, col);
      proj += outer(v, v);
    }
    auto objective = [&](const std::vector<double>& p) {
      const Vec a = bloch_vector(p[0], p[1]);
      Vec aa(4);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) aa[i * 2 + j] = a[i] * a[j];
      const Vec paa = matvec(proj, aa);
      double res = 0.0;
      for (int i = 0; i < 4; ++i) res += std::norm(aa[i] - paa[i]);
      return res;
    };
    double best = 1e300;
    std::vector<double> best_p;
    for (int it = 0; it < 5; ++it) {
      for (int ip = 0; ip < 8; ++ip) {
        const std::vector<double> start{(it + 0.5) * M_PI / 10.0, ip * M_PI / 4.0};
        const auto [p, val] = nelder_mead(objective, start, 0.2, 200);
        if (val < best) {
          best = val;
          best_p = p;
        }
      }
    }
    if (best <= tol * tol) {
      if (const auto ok = verify(bloch_vector(best_p[0], best_p[1]))) return ok;
    }
  }
  return std::nullopt;
}

std::optional<AntisymmetricWitness> antisymmetric_conjugate(const Hermitian& h, double tol) {
  if (h.dim() != 4) throw std::invalid_argument("antisymmetric_conjugate: need a 4x4 Hamiltonian");
  const double r = 0.25 * h.mat().trace().real();
  const Hermitian h0 = h - r * Hermitian(Matrix::identity(4));
  const double h0n = h0.fnorm();
  if (h0n <= tol) {
    return AntisymmetricWitness{r, Matrix::identity(2), Hermitian::zero(4)};
  }

  // Purely imaginary Hermitian matrices have spectra symmetric about zero.
  const auto eig = eig_hermitian(h0);
  const double spec_tol = 1e-7 * std::max(1.0, h0n);
  if (std::abs(eig.values[0] + eig.values[3]) > spec_tol ||
      std::abs(eig.values[1] + eig.values[2]) > spec_tol)
    return std::nullopt;

  const auto c = pauli_coefficients(h0);
  // One-body vectors and the two-body 3x3 block.
  std::array<double, 3> u{}, w{};
  std::array<std::array<double, 3>, 3> cc{};
  for (int i = 0; i < 3; ++i) {
    u[i] = c[(i + 1) * 4];
    w[i] = c[i + 1];
    for (int j = 0; j < 3; ++j) cc[i][j] = c[(i + 1) * 4 + (j + 1)];
  }

  // In the rotated frame only coefficients with exactly one Y factor may
  // survive: one-body x/z parts, the (y,y) entry and the x/z sub-block are
  // forbidden.
  auto objective = [&](const std::vector<double>& p) {
    const auto rot = adjoint_rotation(su2_from_rotvec(p));
    std::array<double, 3> ur{}, wr{};
    std::array<std::array<double, 3>, 3> cr{};
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) {
        ur[i] += rot[i][k] * u[k];
        wr[i] += rot[i][k] * w[k];
      }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l) cr[i][j] += rot[i][k] * rot[j][l] * cc[k][l];
    double res = 0.0;
    res += ur[0] * ur[0] + ur[2] * ur[2] + wr[0] * wr[0] + wr[2] * wr[2];
    res += cr[1][1] * cr[1][1];
    res += cr[0][0] * cr[0][0] + cr[0][2] * cr[0][2] + cr[2][0] * cr[2][0] + cr[2][2] * cr[2][2];
    return res;
  };

  Rng rng(0x5eed0003u);  // fixed multi-start grid
  double best = 1e300;
  std::vector<double> best_p;
  for (int start = 0; start < 64; ++start) {
    std::array<double, 4> q{};
    double qn = 0.0;
    for (auto& x : q) {
      x = rng.gaussian();
    }
    for (const auto& x : q) qn += x * x;
    qn = std::sqrt(qn);
    for (auto& x : q) x /= qn;
    if (q[0] < 0) {
      for (auto& x : q) x = -x;
    }
    const double angle = 2.0 * std::acos(std::clamp(q[0], -1.0, 1.0));
    const double vn = std::sqrt(std::max(1.0 - q[0] * q[0], 1e-30));
    std::vector<double> p{angle * q[1] / vn, angle * q[2] / vn, angle * q[3] / vn};
    const auto [pt, val] = nelder_mead(objective, p, 0.15, 400);
    if (val < best) {
      best = val;
      best_p = pt;
    }
  }

  const double search_tol = tol * h0n;
  if (std::sqrt(best) > search_tol) return std::nullopt;
  const Matrix v = su2_from_rotvec(best_p);
  // A = (V (x) V) H0 (V (x) V)^dag has the antisymmetric pattern; pulling it
  // back with U = V^dag reconstructs H0 exactly.
  const Matrix vv = kron(v, v);
  const Hermitian a = Hermitian(vv * h0.mat() * vv.adjoint());
  return AntisymmetricWitness{r, v.adjoint(), a};
}

std::optional<Hermitian> commuting_local_unitary(const Hermitian& h, double tol) {
  if (h.dim() != 4) throw std::invalid_argument("commuting_local_unitary: need a 4x4 Hamiltonian");
  // Columns of the 16x3 real map u_k -> pauli_coefficients(i[H, K_k]) with
  // K_k = sigma_k (x) I + I (x) sigma_k.
  std::array<std::array<double, 16>, 3> cols{};
  for (int k = 0; k < 3; ++k) {
    const Matrix kk = kron(pauli(k + 1), pauli(0)) + kron(pauli(0), pauli(k + 1));
    cols[k] = pauli_coefficients(commutator_i(h, Hermitian(kk)));
  }
  // Smallest singular value via the 3x3 Gram matrix.
  Matrix gram(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int t = 0; t < 16; ++t) s += cols[i][t] * cols[j][t];
      gram(i, j) = s;
    }
  const auto eig = eig_hermitian(Hermitian(gram));
  const double sigma_min = std::sqrt(std::max(eig.values.front(), 0.0));
  if (sigma_min > tol * std::max(1.0, h.fnorm())) return std::nullopt;
  Matrix u(2);
  for (int k = 0; k < 3; ++k) u += eig.vectors(k, 0) * pauli(k + 1);
  return Hermitian(u);
}

ThreeQubitReport classify3(const Hermitian& h, double tol) {
  if (h.dim() != 4) throw std::invalid_argument("classify3: need a 4x4 Hamiltonian");
  ThreeQubitReport rep;
  if (auto lw = local_decomposition(h, tol)) {
    rep.local = true;
    rep.local_witness = std::move(lw);
  }
  if (auto pw = product_eigenvector(h)) {
    rep.product_eigenvector = true;
    rep.product_witness = std::move(pw);
  }
  rep.trace_value = h.mat().trace().real();
  rep.traceless = std::abs(rep.trace_value) <= tol * std::max(1.0, h.fnorm());
  if (auto aw = antisymmetric_conjugate(h)) {
    rep.antisymmetric_conjugate = true;
    rep.antisymmetric_witness = std::move(aw);
  }
  if (auto cw = commuting_local_unitary(h, tol)) {
    rep.commuting_local_unitary = true;
    rep.commuting_witness = std::move(cw);
  }
  rep.closure_dim_3 = universality_dimension(h, 3);
  if (rep.any_family_hit())
    rep.verdict = Verdict3::NonUniversal3;
  else if (rep.closure_dim_3 == 64)
    rep.verdict = Verdict3::Universal3;
  else
    rep.verdict = Verdict3::Unknown;
  return rep;
}

}  // namespace hamuni
