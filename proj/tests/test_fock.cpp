#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ecsusy/fock.hpp"

using namespace ecsusy;

TEST_CASE("annihilator has sqrt entries on the superdiagonal") {
  TruncatedOperator a = bosonic_annihilator(6);
  CHECK(a.bandwidth() == 1);
  for (Index n = 1; n < 6; ++n)
    CHECK(std::abs(a.entries()(n - 1, n) - std::sqrt(double(n))) < 1e-15);
  CHECK(std::abs(a.entries()(3, 1)) == 0.0);
}

TEST_CASE("constructor rejects entries outside the declared band") {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 3) = 1.0;
  CHECK_THROWS_AS(TruncatedOperator(m, 1), std::invalid_argument);
  CHECK_NOTHROW(TruncatedOperator(m, 3));
}

TEST_CASE("constructor rejects non-square and non-finite input") {
  Matrix bad = Matrix::Zero(3, 4);
  CHECK_THROWS_AS(TruncatedOperator(bad, 1), std::invalid_argument);
  Matrix nan = Matrix::Zero(3, 3);
  nan(1, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(TruncatedOperator(nan, 2), std::invalid_argument);
}

TEST_CASE("dense scans the minimal bandwidth") {
  Matrix m = Matrix::Zero(5, 5);
  m(0, 2) = 1.0;
  TruncatedOperator t = TruncatedOperator::dense(m);
  CHECK(t.bandwidth() == 2);
  CHECK(TruncatedOperator::dense(Matrix::Zero(5, 5)).bandwidth() == 0);
}

TEST_CASE("compose adds bandwidths and caps at the dimension") {
  TruncatedOperator a = bosonic_annihilator(4);
  CHECK(compose(a, a).bandwidth() == 2);
  TruncatedOperator wide(Matrix::Zero(4, 4), 3);
  CHECK(compose(wide, wide).bandwidth() == 4);
}

TEST_CASE("truncated commutator [a, a'] deviates only in the corner") {
  const Index n = 8;
  TruncatedOperator comm = commutator(bosonic_annihilator(n), adjoint(bosonic_annihilator(n)));
  Matrix expected = Matrix::Identity(n, n);
  expected(n - 1, n - 1) = 1.0 - double(n);
  CHECK(max_abs(comm.entries() - expected) < 1e-12);
  CHECK(leading_block_residual(comm, identity(n), 1) < 1e-13);
}

TEST_CASE("adjoint conjugates and transposes") {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 1) = Complex(2.0, -1.0);
  TruncatedOperator t(m, 1);
  CHECK(adjoint(t).entries()(1, 0) == Complex(2.0, 1.0));

  FockVector u = FockVector::Random(3), v = FockVector::Random(3);
  CHECK(std::abs(inner(adjoint(t) * u, v) - inner(u, t * v)) < 1e-14);
}

TEST_CASE("inner is conjugate-linear in the first slot") {
  FockVector u(2), v(2);
  u << Complex(0.0, 1.0), Complex(1.0, 0.0);
  v << Complex(1.0, 0.0), Complex(0.0, 0.0);
  CHECK(inner(u, v) == Complex(0.0, -1.0));
}

TEST_CASE("inverse round-trips and rejects singular input") {
  Matrix m = Matrix::Identity(4, 4);
  m(0, 1) = 0.5;
  m(2, 3) = Complex(0.0, 0.25);
  TruncatedOperator t(m, 1);
  CHECK(max_abs(compose(t, inverse(t)).entries() - Matrix::Identity(4, 4)) < 1e-13);
  CHECK_THROWS_AS(inverse(bosonic_annihilator(4)), std::domain_error);
}

TEST_CASE("leading block residual ignores the guarded tail") {
  const Index n = 6;
  TruncatedOperator comm = commutator(bosonic_annihilator(n), adjoint(bosonic_annihilator(n)));
  CHECK(leading_block_residual(comm, identity(n), 0) > 1.0);
  CHECK(leading_block_residual(comm, identity(n), 1) < 1e-13);
}

TEST_CASE("nullspace finds the annihilator kernel") {
  auto kernel = nullspace(bosonic_annihilator(5));
  REQUIRE(kernel.size() == 1);
  FockVector e0 = FockVector::Zero(5);
  e0(0) = 1.0;
  CHECK(std::abs(std::abs(inner(kernel[0], e0)) - 1.0) < 1e-12);

  CHECK(nullspace(identity(5)).empty());
}

TEST_CASE("condition number of the identity is one") {
  CHECK(condition_number(identity(7)) == doctest::Approx(1.0).epsilon(1e-12));
}
