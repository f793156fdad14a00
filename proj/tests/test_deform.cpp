#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "ecsusy/deform.hpp"

using namespace ecsusy;

namespace {

constexpr Index kDim = 32;
constexpr long kMMax = 5;

struct Fixture {
  PBPair base = canonical_pb_pair(kDim);
  FamilyPair even, odd;
  Su11Triples base_triples = build_triples(specialize(base));

  Fixture() {
    PBVacua v = vacua(base);
    PBFamilies fam = build_families(base, v, 2 * kMMax + 3);
    even = build_even(fam, kMMax);
    odd = build_odd(fam, kMMax);
  }
};

double op_diff(const TruncatedOperator& a, const TruncatedOperator& b) {
  return max_abs(a.entries() - b.entries());
}

}  // namespace

TEST_CASE("make_deformation inverts and conditions its inputs") {
  TruncatedOperator s = seeded_parity_block(kDim, 91);
  TruncatedOperator t = seeded_parity_block(kDim, 92);
  DeformationPair def = make_deformation(s, t);

  CHECK(def.inv_residual < 1e-12);
  CHECK(def.cond_s >= 1.0);
  CHECK(def.cond_t >= 1.0);
  CHECK(max_abs((def.s * def.s_inv).entries() - Matrix::Identity(kDim, kDim)) < 1e-12);
  CHECK(max_abs((def.t_inv * def.t).entries() - Matrix::Identity(kDim, kDim)) < 1e-12);

  Matrix bad = Matrix::Identity(kDim, kDim);
  bad(0, 0) = 1e-12;
  CHECK_THROWS_AS(make_deformation(TruncatedOperator(bad, 0), t), std::domain_error);
  CHECK_THROWS_AS(make_deformation(seeded_diagonal(16, 1), seeded_diagonal(kDim, 1)),
                  std::invalid_argument);
}

TEST_CASE("identity deformation reduces to the pseudo-boson specialization") {
  Fixture f;
  DeformationPair def = make_deformation(identity(kDim), identity(kDim));
  ECSusyQuadruple quad = deform_quadruple(f.base, def);
  ECSusyQuadruple plain = specialize(f.base);

  CHECK(op_diff(quad.c, plain.c) == 0.0);
  CHECK(op_diff(quad.d, plain.d) == 0.0);
  CHECK(op_diff(quad.r, plain.r) == 0.0);
  CHECK(op_diff(quad.s, plain.s) == 0.0);
  CHECK(quad.gamma == -1.0);
  CHECK(quad.delta == 1.0);
}

TEST_CASE("deformed quadruple satisfies the defining relations") {
  Fixture f;
  DeformationPair def =
      make_deformation(seeded_diagonal(kDim, 11), seeded_diagonal(kDim, 12));
  ECSusyQuadruple quad = deform_quadruple(f.base, def);

  QuadrupleResiduals res = verify_ecsusy(quad);
  CHECK(res.first < 1e-12);
  CHECK(res.second < 1e-12);

  // Genuine deformation: c and r no longer coincide.
  CHECK(op_diff(quad.c, quad.r) > 1e-3);
}

TEST_CASE("triples built from the quadruple match the similarity-tilted ones") {
  Fixture f;
  DeformationPair def =
      make_deformation(seeded_diagonal(kDim, 21), seeded_diagonal(kDim, 22));
  Su11Triples from_quad = build_triples(deform_quadruple(f.base, def));
  Su11Triples tilted = tilted_triples(def, f.base_triples);

  const Su11Triple* a[] = {&from_quad.k, &from_quad.l, &from_quad.p, &from_quad.q};
  const Su11Triple* b[] = {&tilted.k, &tilted.l, &tilted.p, &tilted.q};
  for (int i = 0; i < 4; ++i) {
    CAPTURE(i);
    CHECK(op_diff(a[i]->plus, b[i]->plus) < 1e-12);
    CHECK(op_diff(a[i]->minus, b[i]->minus) < 1e-12);
    CHECK(op_diff(a[i]->zero, b[i]->zero) < 1e-12);
  }
}

TEST_CASE("tilted vectors stay biorthonormal within and across parities") {
  Fixture f;
  DeformationPair def =
      make_deformation(seeded_diagonal(kDim, 31), seeded_diagonal(kDim, 32));
  TiltedFamilies fams = tilted_vectors(def, f.even, f.odd);
  REQUIRE(fams.phi.size() == size_t(kMMax + 1));
  REQUIRE(fams.eta.size() == size_t(kMMax + 1));

  for (size_t i = 0; i < fams.phi.size(); ++i)
    for (size_t j = 0; j < fams.phi.size(); ++j) {
      Complex d = i == j ? 1.0 : 0.0;
      CHECK(std::abs(inner(fams.psi[i], fams.phi[j]) - d) < 1e-12);
      CHECK(std::abs(inner(fams.eta[i], fams.chi[j]) - d) < 1e-12);
      CHECK(std::abs(inner(fams.psi[i], fams.chi[j])) < 1e-12);
      CHECK(std::abs(inner(fams.eta[i], fams.phi[j])) < 1e-12);
    }
}

TEST_CASE("the eight tilted ladder relations hold with exact coefficients") {
  Fixture f;
  DeformationPair def =
      make_deformation(seeded_diagonal(kDim, 41), seeded_diagonal(kDim, 42));
  Su11Triples tilted = tilted_triples(def, f.base_triples);
  TiltedFamilies fams = tilted_vectors(def, f.even, f.odd);

  std::vector<RelationResidual> ladder = verify_tilted_ladder(tilted, fams);
  REQUIRE(ladder.size() == 8);
  for (const RelationResidual& r : ladder) {
    CAPTURE(r.name);
    CHECK(r.residual < 1e-11);
  }
}

TEST_CASE("the eight quadruple mappings between tilted families hold") {
  Fixture f;
  DeformationPair def =
      make_deformation(seeded_diagonal(kDim, 51), seeded_diagonal(kDim, 52));
  ECSusyQuadruple quad = deform_quadruple(f.base, def);
  TiltedFamilies fams = tilted_vectors(def, f.even, f.odd);

  std::vector<RelationResidual> maps = verify_mapping_diagram(quad, fams);
  REQUIRE(maps.size() == 8);
  for (const RelationResidual& r : maps) {
    CAPTURE(r.name);
    CHECK(r.residual < 1e-11);
  }
}

TEST_CASE("seeded generators are deterministic and shaped as documented") {
  TruncatedOperator d1 = seeded_diagonal(kDim, 7);
  TruncatedOperator d2 = seeded_diagonal(kDim, 7);
  TruncatedOperator d3 = seeded_diagonal(kDim, 8);
  CHECK(max_abs(d1.entries() - d2.entries()) == 0.0);
  CHECK(max_abs(d1.entries() - d3.entries()) > 0.0);
  CHECK(d1.bandwidth() == 0);
  for (Index i = 0; i < kDim; ++i) {
    Complex z = d1.entries()(i, i);
    CHECK(z.imag() == 0.0);
    CHECK(z.real() >= 0.5);
    CHECK(z.real() <= 2.0);
  }

  TruncatedOperator pb = seeded_parity_block(kDim, 7);
  CHECK(pb.bandwidth() == 4);
  for (Index i = 0; i < kDim; ++i) {
    CHECK(pb.entries()(i, i) == Complex(1.0, 0.0));
    for (Index off : {-3, -1, 1, 3}) {
      Index j = i + off;
      if (j < 0 || j >= kDim) continue;
      CHECK(pb.entries()(i, j) == Complex(0.0, 0.0));
    }
  }

  TruncatedOperator mix = seeded_mixing_similarity(kDim, 7);
  CHECK(mix.bandwidth() == 1);
  for (Index i = 0; i < kDim; ++i) {
    CHECK(mix.entries()(i, i) == Complex(1.0, 0.0));
    if (i + 1 < kDim) CHECK(mix.entries()(i + 1, i) == Complex(0.0, 0.0));
  }

  FockVector v = seeded_vector(kDim, 6, 7);
  FockVector w = seeded_vector(kDim, 6, 7);
  CHECK((v - w).cwiseAbs().maxCoeff() == 0.0);
  for (Index i = 0; i < 6; ++i) CHECK(std::abs(v(i)) > 0.0);
  for (Index i = 6; i < kDim; ++i) CHECK(v(i) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(seeded_vector(8, 9, 1), std::invalid_argument);
}

TEST_CASE("adjoint of the inverse equals the inverse of the adjoint") {
  TruncatedOperator t = seeded_parity_block(kDim, 99);
  CHECK(op_diff(adjoint(inverse(t)), inverse(adjoint(t))) < 1e-12);
}
