#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "ecsusy/shifted_ho.hpp"

using namespace ecsusy;

namespace {

const GridSpec kGrid{12.0, 2001};

Complex hermite_closed(int n, Complex z) {
  switch (n) {
    case 0: return 1.0;
    case 1: return 2.0 * z;
    case 2: return 4.0 * z * z - 2.0;
    case 3: return 8.0 * z * z * z - 12.0 * z;
    case 4: return 16.0 * pow(z, 4) - 48.0 * z * z + 12.0;
    case 5: return 32.0 * pow(z, 5) - 160.0 * z * z * z + 120.0 * z;
    default: return 0.0;
  }
}

double family_residual(const GridFunction& got, const GridFunction& want) {
  GridFunction diff{got.spec, got.samples - want.samples};
  return interior_max_abs(diff);
}

}  // namespace

TEST_CASE("hermite polynomials match their closed forms on and off the axis") {
  for (Complex z : {Complex(0.7, 0.0), Complex(0.5, -0.3), Complex(-1.2, 0.8)})
    for (int n = 0; n <= 5; ++n) {
      CAPTURE(n);
      CHECK(std::abs(hermite_polynomial(n, z) - hermite_closed(n, z)) < 1e-12);
    }
  CHECK_THROWS_AS(hermite_polynomial(-1, Complex(0.0, 0.0)), std::invalid_argument);
}

TEST_CASE("normalized eigenfunctions agree with the explicit formula") {
  double pi_quarter = std::pow(M_PI, -0.25);
  CHECK(std::abs(hermite_eigenfunction(0, 0.0) - pi_quarter) < 1e-15);
  CHECK(std::abs(hermite_eigenfunction(1, 1.0) -
                 std::sqrt(2.0) * pi_quarter * std::exp(-0.5)) < 1e-14);

  Complex z(0.8, -0.4);
  double fact = 1.0;
  for (int n = 0; n <= 5; ++n) {
    if (n > 0) fact *= n;
    Complex want = hermite_closed(n, z) * exp(-z * z / 2.0) /
                   std::sqrt(std::pow(2.0, n) * fact * std::sqrt(M_PI));
    CAPTURE(n);
    CHECK(std::abs(hermite_eigenfunction(n, z) - want) < 1e-12);
  }
  CHECK_THROWS_AS(hermite_eigenfunction(-2, 0.0), std::invalid_argument);
}

TEST_CASE("grid resolution checks") {
  CHECK(resolves(kGrid, 10, 0.5));
  CHECK_FALSE(resolves(GridSpec{4.0, 101}, 10, 0.5));    // too narrow
  CHECK_FALSE(resolves(GridSpec{20.0, 101}, 10, 0.5));   // too coarse
  CHECK_FALSE(resolves(GridSpec{12.0, 8}, 0, 0.0));      // too few points
  CHECK_FALSE(resolves(GridSpec{-1.0, 2001}, 0, 0.0));   // degenerate width

  GridSpec d = default_grid(10, 0.5);
  CHECK(d.points == 2001);
  CHECK(d.half_width == doctest::Approx(4.0 * std::sqrt(21.0) + 6.0));
  CHECK(resolves(d, 10, 0.5));
  CHECK(default_grid(0, 0.0).half_width == 12.0);

  CHECK_THROWS_AS(hermite_family(10, 0.5, GridSpec{4.0, 101}), std::domain_error);
}

TEST_CASE("sampled families agree with pointwise evaluation") {
  std::vector<GridFunction> fam = hermite_family(5, 0.3, kGrid);
  REQUIRE(fam.size() == 6);
  for (int n = 0; n <= 5; ++n)
    for (Index i = 0; i < kGrid.points; i += 250) {
      Complex z(kGrid.x(i), -0.3);
      CHECK(std::abs(fam[n].samples(i) - hermite_eigenfunction(n, z)) < 1e-13);
    }
}

TEST_CASE("trapezoid quadrature reproduces orthonormality and biorthonormality") {
  std::vector<GridFunction> real_fam = hermite_family(4, 0.0, kGrid);
  CHECK(std::abs(inner_product(real_fam[0], real_fam[0]) - 1.0) < 1e-12);
  CHECK(std::abs(inner_product(real_fam[0], real_fam[3])) < 1e-12);

  ShiftedFamilies sf = shifted_family(4, 0.5, kGrid);
  REQUIRE(sf.phi.size() == 5);
  REQUIRE(sf.psi.size() == 5);
  for (size_t m = 0; m < 5; ++m)
    for (size_t n = 0; n < 5; ++n) {
      Complex d = m == n ? 1.0 : 0.0;
      CHECK(std::abs(inner_product(sf.psi[m], sf.phi[n]) - d) < 1e-9);
    }

  ShiftedFamilies zero = shifted_family(2, 0.0, kGrid);
  CHECK(family_residual(zero.phi[2], zero.psi[2]) == 0.0);

  GridFunction other{GridSpec{10.0, 2001}, Eigen::VectorXcd::Zero(2001)};
  CHECK_THROWS_AS(inner_product(real_fam[0], other), std::invalid_argument);
}

TEST_CASE("pseudo-ladder operators act with the bosonic coefficients") {
  ShiftedFamilies sf = shifted_family(6, 0.5, kGrid);

  for (int n = 1; n <= 5; ++n) {
    GridFunction lowered = apply_pseudo_ladder(sf.phi[n], 0.5, LadderDirection::Lower);
    GridFunction want{kGrid, std::sqrt(double(n)) * sf.phi[n - 1].samples};
    CAPTURE(n);
    CHECK(family_residual(lowered, want) < 1e-6);
  }
  for (int n = 0; n <= 5; ++n) {
    GridFunction raised = apply_pseudo_ladder(sf.phi[n], 0.5, LadderDirection::Raise);
    GridFunction want{kGrid, std::sqrt(double(n + 1)) * sf.phi[n + 1].samples};
    CAPTURE(n);
    CHECK(family_residual(raised, want) < 1e-6);
  }

  // The vacuum is annihilated and the dual side lowers with the opposite tilt.
  GridFunction dead = apply_pseudo_ladder(sf.phi[0], 0.5, LadderDirection::Lower);
  CHECK(interior_max_abs(dead) < 1e-6);
  GridFunction dual_low = apply_pseudo_ladder(sf.psi[3], -0.5, LadderDirection::Lower);
  GridFunction dual_want{kGrid, std::sqrt(3.0) * sf.psi[2].samples};
  CHECK(family_residual(dual_low, dual_want) < 1e-6);

  GridFunction f = sf.phi[0];
  CHECK_THROWS_AS(interior_max_abs(f, kGrid.points), std::invalid_argument);
}

TEST_CASE("tilted grid families pair off member by member") {
  GridSpec wide{14.0, 2001};
  TiltedGridFamilies t = tilted_ho_vectors(0.3, 0.5, 0.2, 4, wide);
  REQUIRE(t.phi.size() == 5);
  REQUIRE(t.chi.size() == 5);

  for (size_t m = 0; m < 5; ++m)
    for (size_t n = 0; n < 5; ++n) {
      Complex d = m == n ? 1.0 : 0.0;
      CHECK(std::abs(inner_product(t.psi[m], t.phi[n]) - d) < 1e-8);
      CHECK(std::abs(inner_product(t.eta[m], t.chi[n]) - d) < 1e-8);
    }

  CHECK_THROWS_AS(tilted_ho_vectors(0.3, 0.5, 0.2, -1, wide), std::invalid_argument);
}

TEST_CASE("grid functions expand to unit Fock coordinates against their duals") {
  ShiftedFamilies sf = shifted_family(6, 0.5, kGrid);
  FockVector coords = grid_to_fock(sf.phi[3], sf.psi);
  REQUIRE(coords.size() == 7);
  for (Index n = 0; n < 7; ++n)
    CHECK(std::abs(coords(n) - (n == 3 ? 1.0 : 0.0)) < 1e-9);
  CHECK_THROWS_AS(grid_to_fock(sf.phi[0], {}), std::invalid_argument);
}

TEST_CASE("csv export writes one row per grid point") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "ecsusy_test_csv";
  fs::create_directories(dir);

  ShiftedFamilies sf = shifted_family(1, 0.5, kGrid);
  fs::path file = write_grid_csv(dir, "phi", 0, 0.5, 0.5, sf.phi[0]);
  CHECK(file.filename().string() == "phi_0_0.5_0.5.csv");

  std::ifstream in(file);
  REQUIRE(in.good());
  std::string line;
  Index rows = 0;
  while (std::getline(in, line)) {
    if (rows == 0) CHECK(std::count(line.begin(), line.end(), ',') == 2);
    ++rows;
  }
  CHECK(rows == kGrid.points);
  fs::remove_all(dir);
}
