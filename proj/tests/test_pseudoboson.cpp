#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ecsusy/deform.hpp"
#include "ecsusy/pseudoboson.hpp"

using namespace ecsusy;

TEST_CASE("canonical pair satisfies the pseudo-boson relation") {
  PBPair pair = canonical_pb_pair(12);
  PBCheckResult r = check_pb(pair, 1e-12);
  CHECK(r.pass);
  CHECK(r.residual < 1e-13);
}

TEST_CASE("similarity pairs keep the relation and reject bad conditioning") {
  PBPair pair = pb_pair_by_similarity(seeded_diagonal(16, 7));
  CHECK(check_pb(pair, 1e-11).pass);

  Matrix nearly = Matrix::Identity(8, 8);
  nearly(7, 7) = 1e-12;
  CHECK_THROWS_AS(pb_pair_by_similarity(TruncatedOperator(nearly, 0)), std::domain_error);
}

TEST_CASE("complex shift moves both ladder operators by the same constant") {
  const double alpha = 0.8;
  PBPair pair = complex_shifted_pb_pair(10, alpha);
  Matrix base = bosonic_annihilator(10).entries();
  Complex shift(0.0, -alpha / std::sqrt(2.0));
  CHECK(max_abs(pair.a.entries() - base - shift * Matrix::Identity(10, 10)) == 0.0);
  CHECK(max_abs(pair.b.entries() - base.adjoint().eval() - shift * Matrix::Identity(10, 10)) ==
        0.0);
  CHECK(check_pb(pair, 1e-12).pass);
}

TEST_CASE("vacua are normalized against each other") {
  PBPair pair = pb_pair_by_similarity(seeded_diagonal(14, 3));
  PBVacua v = vacua(pair);
  CHECK(v.phi0.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(inner(v.phi0, v.psi0) - 1.0) < 1e-12);
}

TEST_CASE("vacua of the shifted pair are coherent-like and pair to one") {
  PBPair pair = complex_shifted_pb_pair(20, 0.5);
  PBVacua v = vacua(pair);
  CHECK(std::abs(inner(v.phi0, v.psi0) - 1.0) < 1e-10);
  // a phi0 = 0 means the coordinates follow phi_{n+1}/phi_n = -shift/sqrt(n+1).
  Complex shift(0.0, -0.5 / std::sqrt(2.0));
  for (Index n = 0; n + 1 < 6; ++n) {
    Complex ratio = v.phi0(n + 1) / v.phi0(n);
    CHECK(std::abs(ratio - (-shift / std::sqrt(double(n + 1)))) < 1e-12);
  }
}

TEST_CASE("families are biorthonormal and bound their index") {
  PBPair pair = pb_pair_by_similarity(seeded_diagonal(16, 9));
  PBVacua v = vacua(pair);
  PBFamilies fam = build_families(pair, v, 10);
  REQUIRE(fam.phi.size() == 11);
  REQUIRE(fam.psi.size() == 11);
  double r = 0.0;
  for (size_t i = 0; i < fam.psi.size(); ++i)
    for (size_t j = 0; j < fam.phi.size(); ++j)
      r = std::max(r, std::abs(inner(fam.psi[i], fam.phi[j]) - (i == j ? 1.0 : 0.0)));
  CHECK(r < 1e-11);
  CHECK_THROWS_AS(build_families(pair, v, 15), std::invalid_argument);
  CHECK_THROWS_AS(build_families(pair, v, -1), std::invalid_argument);
}

TEST_CASE("partial sums of the quasi-basis converge on covered vectors") {
  PBPair pair = canonical_pb_pair(16);
  PBVacua v = vacua(pair);
  PBFamilies fam = build_families(pair, v, 12);
  FockVector f = seeded_vector(16, 6, 21);
  FockVector g = seeded_vector(16, 6, 22);
  QuasiBasisSums sums = quasi_basis_partial_sums(fam, f, g, {3, 13});
  REQUIRE(sums.phi_psi.size() == 2);
  CHECK(std::abs(sums.phi_psi[1] - sums.target) < 1e-13);
  CHECK(std::abs(sums.psi_phi[1] - sums.target) < 1e-13);
  CHECK_THROWS_AS(quasi_basis_partial_sums(fam, f, g, {14}), std::invalid_argument);
}
