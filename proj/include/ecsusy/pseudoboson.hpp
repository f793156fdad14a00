#pragma once

#include <vector>

#include "ecsusy/fock.hpp"

namespace ecsusy {

/// Lowering/raising pair with [a, b] = 1 on the guard block; b need not be
/// the adjoint of a.
struct PBPair {
  TruncatedOperator a;
  TruncatedOperator b;
  Index dim() const { return a.dim(); }
};

/// a = c0, b = c0^dag: the bosonic reference pair.
PBPair canonical_pb_pair(Index dim);

/// a = V c0 V^-1, b = V c0^dag V^-1 for invertible V.  Rejects V with
/// condition number above the cap.
PBPair pb_pair_by_similarity(const TruncatedOperator& v, double condition_cap = 1e8);

/// a = c0 - i alpha/sqrt(2), b = c0^dag - i alpha/sqrt(2): the matrix
/// realization of the complex-shifted oscillator pair.
PBPair complex_shifted_pb_pair(Index dim, double alpha);

struct PBCheckResult {
  double residual;
  double tolerance;
  bool pass;
};

/// Leading-block residual of [a, b] - 1 with guard 2.
PBCheckResult check_pb(const PBPair& pair, double tol);

struct PBVacua {
  FockVector phi0;  // unit norm
  FockVector psi0;  // scaled so that <phi0, psi0> = 1
};

/// Kernels of a and b^dag; both must be one-dimensional and non-degenerate
/// under the pairing.
PBVacua vacua(const PBPair& pair, double tol = 1e-10);

struct PBFamilies {
  std::vector<FockVector> phi;  // phi_n = b^n phi0 / sqrt(n!)
  std::vector<FockVector> psi;  // psi_n = (a^dag)^n psi0 / sqrt(n!)
};

PBFamilies build_families(const PBPair& pair, const PBVacua& v, Index n_max);

struct QuasiBasisSums {
  std::vector<Index> cutoffs;
  std::vector<Complex> phi_psi;  // sum over n < K of <f, phi_n><psi_n, g>
  std::vector<Complex> psi_phi;  // sum over n < K of <f, psi_n><phi_n, g>
  Complex target;                // <f, g>
};

QuasiBasisSums quasi_basis_partial_sums(const PBFamilies& fam, const FockVector& f,
                                        const FockVector& g,
                                        const std::vector<Index>& cutoffs);

}  // namespace ecsusy
