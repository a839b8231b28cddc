#include "hamuni/classify2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hamuni {

namespace {

struct Cluster {
  std::vector<int> cols;  // eigenvector columns, ascending eigenvalue order
  Vec projected_singlet;  // projection of the singlet onto the eigenspace
  double mass = 0.0;      // squared norm of that projection
};

std::vector<Cluster> singlet_clusters(const EigenDecomposition& eig, double scale, double tol) {
  const Vec& s = singlet_state();
  std::vector<Cluster> out;
  for (const auto& [lo, hi] : eigenvalue_clusters(eig.values, scale, tol)) {
    Cluster c;
    c.projected_singlet.assign(4, 0.0);
    for (int col = lo; col <= hi; ++col) {
      c.cols.push_back(col);
      Vec v(4);
      for (int i = 0; i < 4; ++i) v[i] = eig.vectors(i, col);
      const cplx ip = vdot(v, s);
      for (int i = 0; i < 4; ++i) c.projected_singlet[i] += ip * v[i];
      c.mass += std::norm(ip);
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// Unitary whose first column is the given unit vector; remaining columns are
/// a deterministic Gram-Schmidt completion.
Matrix complete_to_unitary(const Vec& first) {
  const int k = static_cast<int>(first.size());
  int drop = 0;
  double best = -1.0;
  for (int i = 0; i < k; ++i)
    if (std::abs(first[i]) > best) {
      best = std::abs(first[i]);
      drop = i;
    }
  Matrix u(k);
  for (int i = 0; i < k; ++i) u(i, 0) = first[i];
  int col = 1;
  for (int e = 0; e < k; ++e) {
    if (e == drop) continue;
    Vec v(k, 0.0);
    v[e] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (int prev = 0; prev < col; ++prev) {
        cplx ip = 0.0;
        for (int i = 0; i < k; ++i) ip += std::conj(u(i, prev)) * v[i];
        for (int i = 0; i < k; ++i) v[i] -= ip * u(i, prev);
      }
    }
    const double nr = vnorm(v);
    for (int i = 0; i < k; ++i) u(i, col) = v[i] / nr;
    ++col;
  }
  return u;
}

/// Orthonormal eigenvectors spanning the cluster eigenspace whose singlet
/// overlaps are sqrt(targets[i]); requires sum(targets) == cluster mass.
std::vector<Vec> cluster_basis_with_masses(const EigenDecomposition& eig, const Cluster& c,
                                           const std::vector<double>& targets) {
  const int k = static_cast<int>(c.cols.size());
  const double rho = std::sqrt(std::max(c.mass, 0.0));
  std::vector<Vec> cols(k, Vec(4));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < 4; ++i) cols[j][i] = eig.vectors(i, c.cols[j]);
  if (rho <= 1e-12) return cols;  // all overlaps are already ~0

  // Orthonormal eigenspace basis with q1 along the projected singlet.
  std::vector<Vec> q;
  Vec q1 = c.projected_singlet;
  for (auto& x : q1) x /= rho;
  q.push_back(q1);
  for (int j = 0; j < k && static_cast<int>(q.size()) < k; ++j) {
    Vec v = cols[j];
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : q) {
        const cplx ip = vdot(b, v);
        for (int i = 0; i < 4; ++i) v[i] -= ip * b[i];
      }
    const double nr = vnorm(v);
    if (nr > 1e-3) {
      for (auto& x : v) x /= nr;
      q.push_back(v);
    }
  }

  Vec w(k);
  double wn = 0.0;
  for (int i = 0; i < k; ++i) {
    w[i] = std::sqrt(std::max(targets[i], 0.0) / std::max(c.mass, 1e-300));
    wn += std::norm(w[i]);
  }
  wn = std::sqrt(wn);
  for (auto& x : w) x /= wn;
  const Matrix cmat = complete_to_unitary(w);

  std::vector<Vec> out(k, Vec(4, 0.0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int t = 0; t < 4; ++t) out[i][t] += cmat(i, j) * q[j][t];
  return out;
}

double singlet_phase(const Vec& v) {
  const cplx ip = vdot(v, singlet_state());
  return std::abs(ip) > 1e-13 ? std::arg(ip) : 0.0;
}

/// U = sum_j e^{i(beta_j - alpha_j)} |w_j><v_j| maps each v_j eigenvector to
/// its partner and fixes the singlet when the overlap patterns match.
Matrix phase_matched_map(const std::vector<Vec>& from, const std::vector<Vec>& to) {
  Matrix u(4);
  for (size_t j = 0; j < from.size(); ++j) {
    const double alpha = singlet_phase(from[j]);
    const double beta = singlet_phase(to[j]);
    const cplx ph = std::exp(cplx(0.0, beta - alpha));
    u += ph * outer(to[j], from[j]);
  }
  return u;
}

struct MassSplit {
  bool ok = false;
  double x = 0.0, y = 0.0;  // common squared overlap per pair
  double residual = 0.0;
};

MassSplit solve_mass_split(const std::vector<std::array<double, 3>>& eqs) {
  // Equations a*x + b*y = m with x, y >= 0.
  double saa = 0, sab = 0, sbb = 0, sam = 0, sbm = 0;
  for (const auto& [a, b, m] : eqs) {
    saa += a * a;
    sab += a * b;
    sbb += b * b;
    sam += a * m;
    sbm += b * m;
  }
  MassSplit out;
  const double det = saa * sbb - sab * sab;
  if (det > 1e-12) {
    out.x = (sbb * sam - sab * sbm) / det;
    out.y = (saa * sbm - sab * sam) / det;
  } else {
    // All equations proportional; split the first one evenly.
    const auto& [a, b, m] = eqs.front();
    const double v = m / std::max(a + b, 1e-300);
    out.x = out.y = v;
  }
  if (out.x < 0.0 && out.x > -1e-12) out.x = 0.0;
  if (out.y < 0.0 && out.y > -1e-12) out.y = 0.0;
  out.ok = out.x >= 0.0 && out.y >= 0.0;
  for (const auto& [a, b, m] : eqs)
    out.residual = std::max(out.residual, std::abs(a * out.x + b * out.y - m));
  return out;
}

}  // namespace

std::array<double, 4> equal_diag_spectrum(double a, double b, double d, double f) {
  const double b2 = b * b, d2 = d * d, f2 = f * f;
  const double z = std::sqrt(std::max(
      b2 * b2 + d2 * d2 + f2 * f2 + 2.0 * (b2 * d2 + d2 * f2 - b2 * f2), 0.0));
  std::array<double, 4> out{};
  int idx = 0;
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j) {
      const double root = std::sqrt(std::max((b2 + d2 + f2 + (j == 0 ? z : -z)) / 2.0, 0.0));
      out[idx++] = a + (i == 0 ? root : -root);
    }
  return out;
}

std::array<double, 4> equal_diag_singlet_overlaps(double b, double d, double f) {
  const double b2 = b * b, d2 = d * d, f2 = f * f;
  const double z = std::sqrt(std::max(
      b2 * b2 + d2 * d2 + f2 * f2 + 2.0 * (b2 * d2 + d2 * f2 - b2 * f2), 0.0));
  std::array<double, 4> out{};
  int idx = 0;
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j) {
      (void)i;
      out[idx++] = std::sqrt(std::max((z + (j == 0 ? 1.0 : -1.0) * (b2 - d2 - f2)) / (4.0 * z), 0.0));
    }
  return out;
}

std::optional<SwapLocalWitness> swap_similar_to_local(const Hermitian& h, double tol) {
  if (h.dim() != 4) throw std::invalid_argument("swap_similar_to_local: need a 4x4 Hamiltonian");
  const auto eig = eig_hermitian(h);
  const double scale = std::max(1.0, h.fnorm());
  const double tol_eff = tol * scale;
  const auto clusters = singlet_clusters(eig, h.fnorm(), tol);
  std::array<int, 4> cid{};
  for (size_t c = 0; c < clusters.size(); ++c)
    for (int col : clusters[c].cols) cid[col] = static_cast<int>(c);

  static constexpr std::array<std::array<int, 4>, 3> kPartitions{
      {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};

  int best = -1;
  double best_score = 0.0;
  MassSplit best_split;
  for (int p = 0; p < 3; ++p) {
    const auto& part = kPartitions[p];
    const double lam_res = std::abs(eig.values[part[0]] + eig.values[part[1]] -
                                    eig.values[part[2]] - eig.values[part[3]]);
    if (lam_res > tol_eff) continue;
    std::vector<std::array<double, 3>> eqs;
    for (size_t c = 0; c < clusters.size(); ++c) {
      double a = 0, b = 0;
      for (int k = 0; k < 2; ++k)
        if (cid[part[k]] == static_cast<int>(c)) a += 1.0;
      for (int k = 2; k < 4; ++k)
        if (cid[part[k]] == static_cast<int>(c)) b += 1.0;
      eqs.push_back({a, b, clusters[c].mass});
    }
    const MassSplit split = solve_mass_split(eqs);
    if (!split.ok || split.residual > std::max(tol, tol_eff)) continue;
    const double score = std::max(lam_res / scale, split.residual);
    if (best < 0 || score < best_score) {
      best = p;
      best_score = score;
      best_split = split;
    }
  }
  if (best < 0) return std::nullopt;

  const auto& part = kPartitions[best];
  std::array<double, 4> target{};
  target[part[0]] = best_split.x;
  target[part[1]] = best_split.x;
  target[part[2]] = best_split.y;
  target[part[3]] = best_split.y;

  std::array<Vec, 4> slot_vec;
  for (const auto& c : clusters) {
    std::vector<double> targets;
    for (int col : c.cols) targets.push_back(target[col]);
    const auto basis = cluster_basis_with_masses(eig, c, targets);
    for (size_t k = 0; k < c.cols.size(); ++k) slot_vec[c.cols[k]] = basis[k];
  }

  const double l1 = eig.values[part[0]], l2 = eig.values[part[1]], l3 = eig.values[part[2]];
  const double r = std::clamp(best_split.x, 0.0, 0.5);
  const double theta = std::asin(std::sqrt(std::min(2.0 * r, 1.0)));
  const double ct = std::cos(theta), st = std::sin(theta);

  Matrix h1(2);
  h1(1, 1) = l2 - l3;
  Matrix h2(2);
  h2(0, 0) = l1 * ct * ct + l3 * st * st;
  h2(1, 1) = l1 * st * st + l3 * ct * ct;
  h2(0, 1) = h2(1, 0) = (l1 - l3) * ct * st;

  const std::array<Vec, 4> product_vec{
      Vec{ct, st, 0.0, 0.0},    // l1
      Vec{0.0, 0.0, -st, ct},   // l2
      Vec{-st, ct, 0.0, 0.0},   // l3
      Vec{0.0, 0.0, ct, st}};   // l4

  std::vector<Vec> from, to;
  for (int k = 0; k < 4; ++k) {
    from.push_back(slot_vec[part[k]]);
    to.push_back(product_vec[k]);
  }
  return SwapLocalWitness{Hermitian(h1), Hermitian(h2), phase_matched_map(from, to)};
}

std::optional<Matrix> swap_similarity_witness(const Hermitian& h1, const Hermitian& h2, double tol) {
  if (h1.dim() != 4 || h2.dim() != 4)
    throw std::invalid_argument("swap_similarity_witness: need 4x4 Hamiltonians");
  const auto e1 = eig_hermitian(h1);
  const auto e2 = eig_hermitian(h2);
  const double scale = std::max({1.0, h1.fnorm(), h2.fnorm()});
  const double tol_eff = tol * scale;
  for (int i = 0; i < 4; ++i)
    if (std::abs(e1.values[i] - e2.values[i]) > tol_eff) return std::nullopt;

  const auto c1 = singlet_clusters(e1, h1.fnorm(), tol);
  const auto c2 = singlet_clusters(e2, h2.fnorm(), tol);
  // Equal spectra can still cluster differently right at the degeneracy
  // threshold; require the same structure before matching eigenspaces.
  if (c1.size() != c2.size()) return std::nullopt;
  for (size_t c = 0; c < c1.size(); ++c) {
    if (c1[c].cols != c2[c].cols) return std::nullopt;
    if (std::abs(std::sqrt(c1[c].mass) - std::sqrt(c2[c].mass)) > 10.0 * tol) return std::nullopt;
  }

  std::vector<Vec> from, to;
  for (size_t c = 0; c < c1.size(); ++c) {
    // Mass-aligned bases: full overlap on the first vector, zero on the rest.
    std::vector<double> t1(c1[c].cols.size(), 0.0), t2(c2[c].cols.size(), 0.0);
    t1[0] = c1[c].mass;
    t2[0] = c2[c].mass;
    const auto b1 = cluster_basis_with_masses(e1, c1[c], t1);
    const auto b2 = cluster_basis_with_masses(e2, c2[c], t2);
    for (size_t k = 0; k < b1.size(); ++k) {
      from.push_back(b1[k]);
      to.push_back(b2[k]);
    }
  }
  Matrix u = phase_matched_map(from, to);
  const Matrix resid = u * h1.mat() * u.adjoint() - h2.mat();
  if (resid.fnorm() > 100.0 * tol_eff) return std::nullopt;
  return u;
}

ClassificationReport classify(const Hermitian& h, double tol) {
  if (h.dim() != 4) throw std::invalid_argument("classify: need a 4x4 Hamiltonian");
  ClassificationReport rep;
  rep.tridiagonal = tridiagonalize(h, tol);
  const double scale = std::max(1.0, h.fnorm());
  const double tol_eff = tol * scale;
  auto near_cut = [&](double v) { return v > tol_eff / 10.0 && v < tol_eff * 10.0; };

  rep.cond_shared_eigenvector =
      rep.tridiagonal.b_zeroed || rep.tridiagonal.d_zeroed || rep.tridiagonal.f_zeroed;
  rep.shared_eigenvector = shares_eigenvector_with_swap(h, tol);

  const auto& t = rep.tridiagonal;
  rep.diagonal_spread = std::max({t.a, t.c, t.e, t.g}) - std::min({t.a, t.c, t.e, t.g});
  rep.local_witness = swap_similar_to_local(h, tol);
  // The constant-diagonal criterion presumes bdf != 0; in the degenerate
  // regime locality is decided by the eigenvalue/overlap route directly.
  rep.cond_swap_similar_local = rep.cond_shared_eigenvector
                                    ? rep.local_witness.has_value()
                                    : rep.diagonal_spread <= tol_eff;

  rep.trace_value = t.trace();
  rep.cond_traceless = std::abs(rep.trace_value) <= tol_eff;

  rep.borderline.tridiagonal_cut = t.borderline;
  rep.borderline.diagonal_spread = near_cut(rep.diagonal_spread);
  rep.borderline.trace = near_cut(std::abs(rep.trace_value));

  rep.verdict = (!rep.cond_swap_similar_local && !rep.cond_shared_eigenvector &&
                 !rep.cond_traceless)
                    ? Verdict::Universal
                    : Verdict::NonUniversal;
  return rep;
}

}  // namespace hamuni
