// Acceptance suite: statistical contracts for the whole library, one
// criterion per line.  Seeds are fixed so every run checks the same inputs.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "hamuni/certificate.hpp"
#include "hamuni/classify2.hpp"
#include "hamuni/classify3.hpp"
#include "hamuni/evolve.hpp"
#include "hamuni/lie.hpp"
#include "hamuni/sampling.hpp"
#include "hamuni/tridiagonal.hpp"

using namespace hamuni;
using namespace hamuni::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int closure_dim_2(const Hermitian& h, double rank_tol = kRankTol) {
  const std::vector<Hermitian> gens{h, Hermitian(swap_gate() * h.mat() * swap_gate())};
  return lie_closure(gens, rank_tol).dimension();
}

// Shared pool of classified random inputs for criteria 1 and 3.
struct Pool {
  std::vector<Hermitian> samples;
  std::vector<ClassificationReport> reports;
  std::vector<int> dims;
};

Pool& classified_pool() {
  static Pool pool = [] {
    Pool p;
    Rng rng(20240001);
    for (int i = 0; i < 1000; ++i) {
      const Hermitian h = random_hermitian(4, rng);
      p.samples.push_back(h);
      p.reports.push_back(classify(h));
      p.dims.push_back(closure_dim_2(h));
    }
    return p;
  }();
  return pool;
}

Outcome criterion1_classifier_oracle_agreement() {
  const Pool& pool = classified_pool();
  int agree = 0, borderline = 0;
  for (size_t i = 0; i < pool.samples.size(); ++i) {
    if (pool.reports[i].borderline.any()) {
      ++borderline;
      continue;
    }
    const bool by_form = pool.reports[i].verdict == Verdict::Universal;
    const bool by_closure = pool.dims[i] == 16;
    agree += by_form == by_closure;
  }
  const int considered = 1000 - borderline;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%d/%d non-borderline verdicts agree with the closure oracle (%d borderline)",
                agree, considered, borderline);
  return {agree == considered, buf};
}

Outcome criterion2_family_soundness() {
  const Family fams[] = {Family::Traceless, Family::SharedEigvec, Family::SwapLocal};
  int bad_verdict = 0, bad_dim = 0;
  Rng rng(20240002);
  for (const Family fam : fams) {
    for (int i = 0; i < 200; ++i) {
      const Hermitian h = sample_family(fam, rng.next_u64());
      if (classify(h).verdict != Verdict::NonUniversal) ++bad_verdict;
      if (closure_dim_2(h, 1e-9) > 15) ++bad_dim;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "600 family samples: %d misclassified, %d with closure dimension above 15",
                bad_verdict, bad_dim);
  return {bad_verdict == 0 && bad_dim == 0, buf};
}

Outcome criterion3_certificate_completeness() {
  const Pool& pool = classified_pool();
  int universal = 0, cert_fail = 0, reject_fail = 0, rejected = 0;
  double max_residual = 0.0;
  for (size_t i = 0; i < pool.samples.size(); ++i) {
    const auto& rep = pool.reports[i];
    if (rep.verdict == Verdict::Universal) {
      ++universal;
      try {
        const Certificate cert = tridiagonal_certificate(rep.tridiagonal);
        max_residual = std::max(max_residual, cert.max_canonical_residual);
        if (!cert.independent || cert.rank != 16 || cert.max_canonical_residual > 1e-8)
          ++cert_fail;
      } catch (const std::invalid_argument&) {
        ++cert_fail;
      }
    } else {
      ++rejected;
      try {
        tridiagonal_certificate(rep.tridiagonal);
        ++reject_fail;
      } catch (const std::invalid_argument&) {
      }
    }
  }
  // Exercise the rejection path on structured non-universal families too.
  Rng rng(20240003);
  const Family fams[] = {Family::Traceless, Family::SharedEigvec, Family::SwapLocal};
  for (const Family fam : fams) {
    for (int i = 0; i < 50; ++i) {
      const Hermitian h = sample_family(fam, rng.next_u64());
      ++rejected;
      try {
        tridiagonal_certificate(tridiagonalize(h));
        ++reject_fail;
      } catch (const std::invalid_argument&) {
      }
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%d universal certified (max canonical residual %.2e); %d non-universal, %d not rejected",
                universal - cert_fail, max_residual, rejected, reject_fail);
  return {cert_fail == 0 && reject_fail == 0, buf};
}

Outcome criterion4_tridiagonal_uniqueness() {
  Rng rng(20240004);
  double worst_entry = 0.0, worst_eig = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Hermitian h = random_hermitian(4, rng);
    const Matrix p = sample_swap_commuting_unitary(rng.next_u64());
    const Hermitian hc(p * h.mat() * p.adjoint());
    const TridiagonalForm t1 = tridiagonalize(h);
    const TridiagonalForm t2 = tridiagonalize(hc);
    const double diffs[] = {std::abs(t1.a - t2.a), std::abs(t1.b - t2.b), std::abs(t1.c - t2.c),
                            std::abs(t1.d - t2.d), std::abs(t1.e - t2.e), std::abs(t1.f - t2.f),
                            std::abs(t1.g - t2.g)};
    for (const double d : diffs) worst_entry = std::max(worst_entry, d);
    const auto e1 = eig_hermitian(h).values;
    const auto e2 = eig_hermitian(t1.xi()).values;
    for (int k = 0; k < 4; ++k) worst_eig = std::max(worst_eig, std::abs(e1[k] - e2[k]));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "1000 trials: max entry deviation %.2e (<= 1e-8), max eigenvalue deviation %.2e (<= 1e-9)",
                worst_entry, worst_eig);
  return {worst_entry <= 1e-8 && worst_eig <= 1e-9, buf};
}

Outcome criterion5_equal_diagonal_closed_forms() {
  Rng rng(20240005);
  double worst_val = 0.0, worst_ov = 0.0;
  for (int i = 0; i < 200; ++i) {
    TridiagonalForm xi;
    xi.a = xi.c = xi.e = xi.g = rng.gaussian();
    xi.b = 0.3 + std::abs(rng.gaussian());
    xi.d = 0.3 + std::abs(rng.gaussian());
    xi.f = 0.3 + std::abs(rng.gaussian());
    const auto spec = equal_diag_spectrum(xi.a, xi.b, xi.d, xi.f);
    const auto over = equal_diag_singlet_overlaps(xi.b, xi.d, xi.f);
    const auto eig = eig_hermitian(xi.xi());
    auto sorted_spec = spec;
    std::sort(sorted_spec.begin(), sorted_spec.end());
    for (int k = 0; k < 4; ++k)
      worst_val = std::max(worst_val, std::abs(eig.values[k] - sorted_spec[k]));
    for (int k = 0; k < 4; ++k) {
      int best = 0;
      for (int m = 1; m < 4; ++m)
        if (std::abs(spec[m] - eig.values[k]) < std::abs(spec[best] - eig.values[k])) best = m;
      Vec v(4);
      for (int t = 0; t < 4; ++t) v[t] = eig.vectors(t, k);
      worst_ov =
          std::max(worst_ov, std::abs(std::abs(vdot(v, singlet_state())) - over[best]));
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "200 samples: max eigenvalue deviation %.2e, max overlap deviation %.2e (<= 1e-9)",
                worst_val, worst_ov);
  return {worst_val <= 1e-9 && worst_ov <= 1e-9, buf};
}

Outcome criterion6_swap_gate_facts() {
  Rng rng(20240006);
  int fail_commute = 0, fail_shared = 0, fail_unitary = 0, fail_degenerate = 0;

  // Singlet eigenvector <=> commutes with the swap gate, both directions.
  for (int i = 0; i < 500; ++i) {
    Matrix n;
    if (i % 2) {
      Matrix block(4);
      block(0, 0) = rng.cgaussian();
      const Matrix u3 = haar_unitary(3, rng);
      Matrix d3(3);
      for (int k = 0; k < 3; ++k) d3(k, k) = rng.cgaussian();
      const Matrix n3 = u3 * d3 * u3.adjoint();
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) block(r + 1, c + 1) = n3(r, c);
      n = from_singlet_basis(SingletBasisMatrix{block});
    } else {
      const Matrix u = haar_unitary(4, rng);
      Matrix d(4);
      for (int k = 0; k < 4; ++k) d(k, k) = rng.cgaussian();
      n = u * d * u.adjoint();
    }
    if (commutes_with_swap(n) != singlet_is_eigenvector(n)) ++fail_commute;
  }

  // Shared eigenvector with the swap gate <=> eigenvector orthogonal to the
  // singlet, on generic inputs and constructed positives.
  for (int i = 0; i < 500; ++i) {
    const Hermitian h = i % 2 ? sample_family(Family::SharedEigvec, rng.next_u64())
                              : random_hermitian(4, rng);
    const auto eig = eig_hermitian(h);
    bool has_orth = false;
    for (int c = 0; c < 4; ++c) {
      Vec v(4);
      for (int t = 0; t < 4; ++t) v[t] = eig.vectors(t, c);
      if (std::abs(vdot(v, singlet_state())) <= kDegTol * std::max(1.0, h.fnorm()))
        has_orth = true;
    }
    if (shares_eigenvector_with_swap(h).has_value() != has_orth) ++fail_shared;
  }

  // Swap-commuting unitaries keep the singlet as an eigenvector of U, U^dag.
  for (int i = 0; i < 500; ++i) {
    const Matrix u = sample_swap_commuting_unitary(rng.next_u64());
    if (!singlet_is_eigenvector(u) || !singlet_is_eigenvector(u.adjoint())) ++fail_unitary;
  }

  // A degenerate eigenvalue forces a shared eigenvector.
  for (int i = 0; i < 500; ++i) {
    const Matrix u = haar_unitary(4, rng);
    const double l = rng.gaussian(), l2 = rng.gaussian(), l3 = rng.gaussian();
    const Hermitian deg(u * diag4(l, l, l2, l3) * u.adjoint());
    if (!shares_eigenvector_with_swap(deg).has_value()) ++fail_degenerate;
  }

  char buf[200];
  std::snprintf(buf, sizeof buf,
                "500 trials each: commute<->singlet %d, shared<->orthogonal %d, unitary %d, degeneracy %d failures",
                fail_commute, fail_shared, fail_unitary, fail_degenerate);
  return {fail_commute + fail_shared + fail_unitary + fail_degenerate == 0, buf};
}

Outcome criterion7_similarity_witness() {
  Rng rng(20240007);
  int fail_pos = 0, fail_neg = 0;
  for (int i = 0; i < 200; ++i) {
    const Hermitian h = random_hermitian(4, rng);
    const Matrix p = sample_swap_commuting_unitary(rng.next_u64());
    const Hermitian hc(p * h.mat() * p.adjoint());
    const auto u = swap_similarity_witness(h, hc);
    if (!u) {
      ++fail_pos;
      continue;
    }
    const double res = dist(*u * h.mat() * u->adjoint(), hc.mat());
    const Matrix comm = *u * swap_gate() - swap_gate() * *u;
    if (res > 1e-8 || comm.fnorm() > 1e-8) ++fail_pos;
  }
  for (int i = 0; i < 200; ++i) {
    const Hermitian h1 = random_hermitian(4, rng);
    const Hermitian h2 = random_hermitian(4, rng);  // spectra differ a.s.
    if (swap_similarity_witness(h1, h2).has_value()) ++fail_neg;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "200 conjugated pairs: %d witness failures; 200 mismatched pairs: %d spurious witnesses",
                fail_pos, fail_neg);
  return {fail_pos == 0 && fail_neg == 0, buf};
}

Outcome criterion8_three_qubit_families() {
  Rng rng(20240008);
  const Family fams[] = {Family::Local, Family::ProductEigvec, Family::Traceless,
                         Family::Antisymmetric, Family::CommutingU};
  int over = 0;
  for (const Family fam : fams) {
    for (int i = 0; i < 100; ++i) {
      const Hermitian h = sample_family(fam, rng.next_u64());
      if (universality_dimension(h, 3) >= 64) ++over;
    }
  }
  int not_full = 0, confirmed = 0;
  while (confirmed < 50) {
    const Hermitian h = random_hermitian(4, rng);
    if (classify(h).verdict != Verdict::Universal || closure_dim_2(h) != 16) continue;
    ++confirmed;
    if (universality_dimension(h, 3) != 64) ++not_full;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "500 family samples: %d reached 64; 50 two-qubit-universal samples: %d failed to reach 64",
                over, not_full);
  return {over == 0 && not_full == 0, buf};
}

Outcome criterion9_positive_time_replacement() {
  Rng rng(20240009);
  const double eps = 1e-3;
  int found = 0, verified = 0;
  double best_err = 1e300;
  for (int i = 0; i < 100; ++i) {
    const Hermitian h = random_hermitian(4, rng);
    const double tau = -(5.0 * rng.uniform());
    const auto t = positive_time_replacement(h, tau, eps, 1e6);
    if (!t) {
      // Record how close the scan got, for the report.
      const auto eig = eig_hermitian(h);
      double best = 1e300;
      for (long long n = 1; n <= 1000000; ++n) {
        double err = 0.0;
        for (const double lam : eig.values)
          err = std::max(err, 2.0 * std::abs(std::sin(0.5 * lam * static_cast<double>(n))));
        best = std::min(best, err);
      }
      best_err = std::min(best_err, best);
      continue;
    }
    ++found;
    if (opnorm(expm_i(h, tau) - expm_i(h, *t)) < eps) ++verified;
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%d/100 found within n <= 1e6 at eps = 1e-3 (%d verified); best recurrence error seen %.3g",
                found, verified, best_err == 1e300 ? 0.0 : best_err);
  return {found == 100 && verified == 100, buf};
}

Outcome criterion10_nested_commutator_scheme() {
  const Certificate natural = nested_commutator_certificate(barenco_natural_log());
  Rng rng(20240010);
  int generic_ok = 0;
  for (int i = 0; i < 100; ++i)
    generic_ok += nested_commutator_certificate(random_hermitian(4, rng)).independent;
  int variant_ok = 0;
  for (uint64_t seed = 0; seed < 100; ++seed)
    variant_ok += nested_commutator_certificate(barenco_randomized_log(seed)).independent;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "natural Barenco log independent=%s (rank %d); generic %d/100; randomized variants %d/100 (need >= 95)",
                natural.independent ? "true" : "false", natural.rank, generic_ok, variant_ok);
  return {!natural.independent && generic_ok == 100 && variant_ok >= 95, buf};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "classifier agrees with the Lie closure oracle", criterion1_classifier_oracle_agreement},
      {2, "non-universal families classify and close below 16", criterion2_family_soundness},
      {3, "certificates complete on universal, rejected on non-universal",
       criterion3_certificate_completeness},
      {4, "tridiagonal form unique under swap-commuting conjugation",
       criterion4_tridiagonal_uniqueness},
      {5, "equal-diagonal closed-form spectrum and overlaps",
       criterion5_equal_diagonal_closed_forms},
      {6, "swap-gate eigenvector facts", criterion6_swap_gate_facts},
      {7, "swap-similarity witnesses", criterion7_similarity_witness},
      {8, "three-qubit family closures", criterion8_three_qubit_families},
      {9, "positive-time replacement at eps = 1e-3 within n <= 1e6",
       criterion9_positive_time_replacement},
      {10, "nested-commutator certificate reproduction", criterion10_nested_commutator_scheme},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    if (!out.pass) ++failures;
    std::printf("criterion %02d [%s] %s -- %s\n", c.id, out.pass ? "PASS" : "FAIL", c.title,
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
