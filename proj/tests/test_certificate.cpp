#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "hamuni/certificate.hpp"
#include "hamuni/classify2.hpp"
#include "hamuni/lie.hpp"
#include "hamuni/sampling.hpp"

using namespace hamuni;
using namespace hamuni::testing;

namespace {

TridiagonalForm make_form(double a, double b, double c, double d, double e, double f, double g) {
  TridiagonalForm t;
  t.a = a;
  t.b = b;
  t.c = c;
  t.d = d;
  t.e = e;
  t.f = f;
  t.g = g;
  t.form_type = 1;
  return t;
}

const CertificateGenerator& find(const Certificate& cert, const std::string& label) {
  for (const auto& g : cert.generators)
    if (g.label == label) return g;
  REQUIRE(false);
  return cert.generators.front();
}

}  // namespace

TEST_CASE("X12 comes out exactly for the (1,1,2,1,3,1,5) form") {
  const auto cert = tridiagonal_certificate(make_form(1, 1, 2, 1, 3, 1, 5));
  const auto& x12 = find(cert, "X12");
  CHECK(dist(x12.value, canonical_x(1, 2)) == 0.0);
  CHECK(find(cert, "Y12").construction.find("a != c") != std::string::npos);
  CHECK(cert.independent);
  CHECK(cert.rank == 16);
}

TEST_CASE("case selection and exactness for each diagonal pattern") {
  // a != c
  const auto c1 = tridiagonal_certificate(make_form(1, 1, 2, 1, 3, 1, 5));
  CHECK(c1.max_canonical_residual <= 1e-8);
  // a = c != e
  const auto c2 = tridiagonal_certificate(make_form(1, 1, 1, 1, 3, 1, 5));
  CHECK(find(c2, "Y12").construction.find("c != e") != std::string::npos);
  CHECK(c2.independent);
  CHECK(c2.max_canonical_residual <= 1e-8);
  // a = c = e != g
  const auto c3 = tridiagonal_certificate(make_form(1, 1, 1, 1, 1, 1, 5));
  CHECK(find(c3, "Y12").construction.find("a = c = e") != std::string::npos);
  CHECK(c3.independent);
  CHECK(c3.max_canonical_residual <= 1e-8);
}

TEST_CASE("random universal forms give exact canonical generators and rank 16") {
  Rng rng(51);
  for (int rep = 0; rep < 100; ++rep) {
    TridiagonalForm xi = make_form(rng.gaussian(), 0.3 + std::abs(rng.gaussian()),
                                   rng.gaussian(), 0.3 + std::abs(rng.gaussian()),
                                   rng.gaussian(), 0.3 + std::abs(rng.gaussian()),
                                   rng.gaussian());
    const auto rep2 = classify(xi.xi());
    if (rep2.verdict != Verdict::Universal) continue;
    const auto cert = tridiagonal_certificate(tridiagonalize(xi.xi()));
    CHECK(cert.independent);
    CHECK(cert.max_canonical_residual <= 1e-8);
  }
}

TEST_CASE("every generator lies in the closure of {Xi, S Xi S}") {
  const TridiagonalForm xi = make_form(1, 1, 2, 1, 3, 1, 5);
  const auto cert = tridiagonal_certificate(xi);
  const Hermitian x(xi.xi_singlet_basis().m);
  const Matrix& s = swap_in_singlet_basis();
  const Hermitian sxs(s * x.mat() * s);
  const LieSpan span = lie_closure(std::vector<Hermitian>{x, sxs});
  REQUIRE(span.dimension() == 16);
  auto raw_inner = [](const Matrix& a, const Matrix& b) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) s += (a(i, j) * b(j, i)).real();
    return s;
  };
  for (const auto& gen : cert.generators) {
    Matrix r = gen.value.mat();
    for (const auto& b : span.basis) r -= cplx(raw_inner(b.mat(), r), 0.0) * b.mat();
    CHECK(r.fnorm() <= 1e-6 * std::max(1.0, gen.value.fnorm()));
  }
}

TEST_CASE("the fifteen labeled elements plus Xi span all 16 dimensions") {
  const auto cert = tridiagonal_certificate(make_form(0.2, 0.8, 1.7, 1.1, -0.4, 0.6, 2.9));
  std::vector<Hermitian> mats;
  for (const auto& g : cert.generators) mats.push_back(g.value);
  CHECK(real_span_rank(mats) == 16);
}

TEST_CASE("precondition violations are rejected") {
  // Shares an eigenvector with the swap gate (d = 0).
  TridiagonalForm shared = make_form(1, 1, 2, 0, 3, 0, 5);
  shared.d_zeroed = shared.f_zeroed = true;
  shared.form_type = 3;
  CHECK_THROWS_AS(tridiagonal_certificate(shared), std::invalid_argument);
  // Constant diagonal.
  CHECK_THROWS_AS(tridiagonal_certificate(make_form(1, 1, 1, 1, 1, 1, 1)),
                  std::invalid_argument);
  // Traceless.
  CHECK_THROWS_AS(tridiagonal_certificate(make_form(-6, 1, 2, 1, 3, 1, 1)),
                  std::invalid_argument);
}

TEST_CASE("nested-commutator scheme: zero input stays dependent") {
  const auto cert = nested_commutator_certificate(Hermitian::zero(4));
  CHECK_FALSE(cert.independent);
  CHECK(cert.rank == 0);
}

TEST_CASE("nested-commutator scheme: generic inputs are certified") {
  Rng rng(52);
  for (int rep = 0; rep < 50; ++rep) {
    const auto cert = nested_commutator_certificate(random_hermitian(4, rng));
    CHECK(cert.independent);
  }
}

TEST_CASE("nested-commutator scheme fails on the natural Barenco generator") {
  const auto cert = nested_commutator_certificate(barenco_natural_log());
  CHECK_FALSE(cert.independent);
  // All sixteen matrices fix |00>, so they live in a 10-dimensional algebra.
  CHECK(cert.rank < 16);
}

TEST_CASE("nested-commutator independence implies full closure") {
  Rng rng(53);
  for (int rep = 0; rep < 25; ++rep) {
    const Hermitian h = random_hermitian(4, rng);
    const auto cert = nested_commutator_certificate(h);
    if (!cert.independent) continue;
    const Hermitian shs(swap_gate() * h.mat() * swap_gate());
    CHECK(lie_closure(std::vector<Hermitian>{h, shs}).dimension() == 16);
  }
}

TEST_CASE("randomized Barenco logs are certified") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    const Hermitian h = barenco_randomized_log(seed);
    // Still generates the same gate.
    CHECK(dist(expm_i(h, 1.0), barenco_gate(barenco_phi(), barenco_beta(), barenco_theta())) <=
          1e-10);
    CHECK(nested_commutator_certificate(h).independent);
  }
}
