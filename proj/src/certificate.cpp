#include "hamuni/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hamuni {

namespace {

Matrix unit_entry(int k, int l) {  // E_kl, 1-based
  Matrix m(4);
  m(k - 1, l - 1) = 1.0;
  return m;
}

}  // namespace

Hermitian canonical_x(int k, int l) { return Hermitian(unit_entry(k, l) + unit_entry(l, k)); }

Hermitian canonical_y(int k, int l) {
  return Hermitian(cplx(0.0, -1.0) * unit_entry(k, l) + cplx(0.0, 1.0) * unit_entry(l, k));
}

Hermitian canonical_z(int k) { return Hermitian(unit_entry(k, k) - unit_entry(k + 1, k + 1)); }

Certificate tridiagonal_certificate(const TridiagonalForm& xi, double tol) {
  const double scale = std::max({1.0, std::abs(xi.a), std::abs(xi.c), std::abs(xi.e),
                                 std::abs(xi.g), xi.b, xi.d, xi.f});
  const double tol_eff = tol * scale;
  if (xi.b_zeroed || xi.d_zeroed || xi.f_zeroed || xi.b <= tol_eff || xi.d <= tol_eff ||
      xi.f <= tol_eff)
    throw std::invalid_argument("tridiagonal_certificate: bdf = 0, the input shares an eigenvector with the swap gate");
  const double spread = std::max({xi.a, xi.c, xi.e, xi.g}) - std::min({xi.a, xi.c, xi.e, xi.g});
  if (spread <= tol_eff)
    throw std::invalid_argument("tridiagonal_certificate: constant diagonal, the input is swap-similar to a local Hamiltonian");
  if (std::abs(xi.trace()) <= tol_eff)
    throw std::invalid_argument("tridiagonal_certificate: traceless input");

  const Hermitian x = Hermitian(xi.xi_singlet_basis().m);
  const Matrix& s = swap_in_singlet_basis();
  const Hermitian sxs = Hermitian(s * x.mat() * s);
  const double a = xi.a, b = xi.b, c = xi.c, d = xi.d, e = xi.e, f = xi.f, g = xi.g;

  const Hermitian acc = 0.5 / b * commutator_i(x, sxs);  // "A" in the construction
  const Hermitian x12 = 0.5 / b * (x - sxs);
  const Hermitian y13 =
      1.0 / (3.0 * d) * (commutator_i(commutator_i(x12, acc), x12) - 4.0 * acc);
  const Hermitian x23 = commutator_i(x12, y13);
  const Hermitian big_b = 0.5 * (x + sxs);

  Hermitian y12 = Hermitian::zero(4);
  std::string y12_case;
  if (std::abs(a - c) > tol_eff) {
    y12 = 1.0 / (a - c) * (d * y13 + acc);
    y12_case = "case a != c: (d*Y13 + A)/(a-c)";
  } else if (std::abs(c - e) > tol_eff) {
    y12 = 1.0 / (c - e) * commutator_i(y13, commutator_i(big_b, x23));
    y12_case = "case c != e: i[Y13, i[B, X23]]/(c-e)";
  } else {
    if (std::abs(a - g) <= tol_eff)
      throw std::invalid_argument("tridiagonal_certificate: diagonal case selection is ambiguous");
    y12 = 1.0 / ((a - g) * f * f) *
          commutator_i(commutator_i(x23, big_b),
                       commutator_i(big_b, commutator_i(y13, big_b)));
    y12_case = "case a = c = e != g: i[i[X23,B], i[B,i[Y13,B]]]/((a-g) f^2)";
  }

  const Hermitian x13 = commutator_i(y12, x23);
  const Hermitian x14 =
      1.0 / f * ((c - e) * x13 + commutator_i(acc, x23) + commutator_i(y13, big_b));
  const Hermitian x24 = commutator_i(x14, y12);
  const Hermitian x34 = commutator_i(x14, y13);
  const Hermitian y14 = commutator_i(x24, x12);
  const Hermitian y23 = commutator_i(x13, x12);
  const Hermitian y24 = commutator_i(x14, x12);
  const Hermitian y34 = commutator_i(x14, x13);
  const Hermitian z1 = 0.5 * commutator_i(y12, x12);
  const Hermitian z2 = 0.5 * commutator_i(y23, x23);
  const Hermitian z3 = 0.5 * commutator_i(y34, x34);

  Certificate cert;
  auto push = [&](const std::string& label, const std::string& how, const Hermitian& value,
                  const Hermitian* canon) {
    CertificateGenerator gen{label, how, value, -1.0};
    if (canon) gen.canonical_residual = (value - *canon).fnorm();
    cert.generators.push_back(std::move(gen));
  };

  const Hermitian cx12 = canonical_x(1, 2), cx13 = canonical_x(1, 3), cx14 = canonical_x(1, 4);
  const Hermitian cx23 = canonical_x(2, 3), cx24 = canonical_x(2, 4), cx34 = canonical_x(3, 4);
  const Hermitian cy12 = canonical_y(1, 2), cy13 = canonical_y(1, 3), cy14 = canonical_y(1, 4);
  const Hermitian cy23 = canonical_y(2, 3), cy24 = canonical_y(2, 4), cy34 = canonical_y(3, 4);
  const Hermitian cz1 = canonical_z(1), cz2 = canonical_z(2), cz3 = canonical_z(3);

  push("X12", "(Xi - S Xi S)/(2b)", x12, &cx12);
  push("Y13", "(i[i[X12,A],X12] - 4A)/(3d)", y13, &cy13);
  push("X23", "i[X12, Y13]", x23, &cx23);
  push("Y12", y12_case, y12, &cy12);
  push("X13", "i[Y12, X23]", x13, &cx13);
  push("X14", "((c-e)X13 + i[A,X23] + i[Y13,B])/f", x14, &cx14);
  push("X24", "i[X14, Y12]", x24, &cx24);
  push("X34", "i[X14, Y13]", x34, &cx34);
  push("Y14", "i[X24, X12]", y14, &cy14);
  push("Y23", "i[X13, X12]", y23, &cy23);
  push("Y24", "i[X14, X12]", y24, &cy24);
  push("Y34", "i[X14, X13]", y34, &cy34);
  push("Z1", "i[Y12, X12]/2", z1, &cz1);
  push("Z2", "i[Y23, X23]/2", z2, &cz2);
  push("Z3", "i[Y34, X34]/2", z3, &cz3);
  push("Xi", "the tridiagonal form itself (nonzero trace)", x, nullptr);

  std::vector<Hermitian> mats;
  for (const auto& gen : cert.generators) mats.push_back(gen.value);
  cert.rank = real_span_rank(mats);
  cert.independent = cert.rank == 16;
  for (const auto& gen : cert.generators)
    cert.max_canonical_residual = std::max(cert.max_canonical_residual, gen.canonical_residual);
  return cert;
}

Certificate nested_commutator_certificate(const Hermitian& h, double rank_tol) {
  if (h.dim() != 4) throw std::invalid_argument("nested_commutator_certificate: need a 4x4 Hamiltonian");
  const Matrix& s = swap_gate();
  std::vector<Hermitian> seq;
  seq.push_back(h);
  seq.push_back(Hermitian(s * h.mat() * s));
  for (int j = 3; j <= 14; ++j) seq.push_back(commutator_i(seq[0], seq[j - 2]));
  seq.push_back(commutator_i(seq[1], seq[2]));  // H15 = i[H2, H3]
  seq.push_back(commutator_i(seq[1], seq[4]));  // H16 = i[H2, H5]

  Certificate cert;
  for (int j = 0; j < 16; ++j) {
    std::string how;
    if (j == 0)
      how = "H1 = H";
    else if (j == 1)
      how = "H2 = S H S";
    else if (j <= 13)
      how = "H" + std::to_string(j + 1) + " = i[H1, H" + std::to_string(j) + "]";
    else if (j == 14)
      how = "H15 = i[H2, H3]";
    else
      how = "H16 = i[H2, H5]";
    cert.generators.push_back({"H" + std::to_string(j + 1), how, seq[j], -1.0});
  }

  // Nested commutators grow in norm; rank is computed on normalized copies
  // (linear independence is scaling invariant).
  std::vector<Hermitian> normalized;
  for (const auto& m : seq) {
    const double nr = m.fnorm();
    normalized.push_back(nr > 0.0 ? 1.0 / nr * m : m);
  }
  cert.rank = real_span_rank(normalized, rank_tol);
  cert.independent = cert.rank == 16;
  return cert;
}

}  // namespace hamuni
