#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ecsusy/fock.hpp"

namespace ecsusy {

struct GridSpec {
  double half_width;
  Index points;
  double spacing() const { return 2.0 * half_width / double(points - 1); }
  double x(Index i) const { return -half_width + double(i) * spacing(); }
};

struct GridFunction {
  GridSpec spec;
  Eigen::VectorXcd samples;
};

/// Physicists' Hermite polynomial H_n(z) by the three-term recurrence.
Complex hermite_polynomial(int n, Complex z);

/// Normalized oscillator eigenfunction e_n(z) = H_n(z) exp(-z^2/2) /
/// sqrt(2^n n! sqrt(pi)), evaluated off the real axis by the stable
/// normalized recurrence.
Complex hermite_eigenfunction(int n, Complex z);

/// Grid's half-width and spacing adequate for e_n shifted by `shift` off the
/// real axis.
bool resolves(const GridSpec& spec, int n_max, double shift);

/// L = max(12, 4 sqrt(2 n_max + 1) + 4 |alpha| + 4), M = 2001.
GridSpec default_grid(int n_max, double alpha);

/// e_n(x - i shift) sampled on the grid, n = 0..n_max.
std::vector<GridFunction> hermite_family(int n_max, double shift, const GridSpec& spec);

struct ShiftedFamilies {
  std::vector<GridFunction> phi;  // e_n(x - i alpha)
  std::vector<GridFunction> psi;  // e_n(x + i alpha)
};

ShiftedFamilies shifted_family(int n_max, double alpha, const GridSpec& spec);

/// Trapezoid quadrature of conj(f) g.
Complex inner_product(const GridFunction& f, const GridFunction& g);

enum class LadderDirection { Lower, Raise };

/// a = (x + d/dx)/sqrt(2) - i alpha/sqrt(2) or its raising partner
/// b = (x - d/dx)/sqrt(2) - i alpha/sqrt(2).  Derivatives use fourth-order
/// central differences; the two outermost points per side are one-sided and
/// excluded from comparisons.
GridFunction apply_pseudo_ladder(const GridFunction& f, double alpha, LadderDirection dir);

double interior_max_abs(const GridFunction& f, Index margin = 2);

struct TiltedGridFamilies {
  std::vector<GridFunction> phi;  // even_norm(m) e_{2m}(x - i(alpha+tau))
  std::vector<GridFunction> psi;  // e_{2m}(x + i(alpha+tau)) / even_norm(m)
  std::vector<GridFunction> chi;  // odd_norm(m) e_{2m+1}(x - i(alpha+sigma))
  std::vector<GridFunction> eta;  // e_{2m+1}(x + i(alpha+sigma)) / odd_norm(m)
};

TiltedGridFamilies tilted_ho_vectors(double alpha, double sigma, double tau, long m_max,
                                     const GridSpec& spec);

/// Coordinates <dual_n, f> by quadrature against a dual family.
FockVector grid_to_fock(const GridFunction& f, const std::vector<GridFunction>& dual);

/// Writes one file {family}_{index}_{alpha}_{shift}.csv with rows x,re,im
/// (no header; exactly M rows).  Returns the file path.
std::filesystem::path write_grid_csv(const std::filesystem::path& dir,
                                     const std::string& family, long index, double alpha,
                                     double shift, const GridFunction& f);

}  // namespace ecsusy
