#include "ecsusy/pseudoboson.hpp"

#include <cmath>
#include <stdexcept>

namespace ecsusy {

PBPair canonical_pb_pair(Index dim) {
  TruncatedOperator a = bosonic_annihilator(dim);
  return {a, adjoint(a)};
}

PBPair pb_pair_by_similarity(const TruncatedOperator& v, double condition_cap) {
  double cond = condition_number(v);
  if (!(cond < condition_cap))
    throw std::domain_error("pb_pair_by_similarity: condition number above cap");
  TruncatedOperator vinv = inverse(v);
  TruncatedOperator c0 = bosonic_annihilator(v.dim());
  return {compose(compose(v, c0), vinv), compose(compose(v, adjoint(c0)), vinv)};
}

PBPair complex_shifted_pb_pair(Index dim, double alpha) {
  TruncatedOperator c0 = bosonic_annihilator(dim);
  Complex shift(0.0, -alpha / std::sqrt(2.0));
  TruncatedOperator s = shift * identity(dim);
  return {c0 + s, adjoint(c0) + s};
}

PBCheckResult check_pb(const PBPair& pair, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("check_pb: tol must be positive");
  double r = leading_block_residual(commutator(pair.a, pair.b), identity(pair.dim()), 2);
  return {r, tol, r <= tol};
}

PBVacua vacua(const PBPair& pair, double tol) {
  auto phi_kernel = nullspace(pair.a, tol);
  auto psi_kernel = nullspace(adjoint(pair.b), tol);
  if (phi_kernel.size() != 1 || psi_kernel.size() != 1)
    throw std::domain_error("vacua: kernel is not one-dimensional");
  FockVector phi0 = phi_kernel[0] / phi_kernel[0].norm();
  FockVector psi0 = psi_kernel[0];
  Complex pairing = inner(phi0, psi0);
  if (std::abs(pairing) < 1e-12 * psi0.norm())
    throw std::domain_error("vacua: vacuum pairing is numerically zero");
  psi0 /= pairing;
  return {phi0, psi0};
}

PBFamilies build_families(const PBPair& pair, const PBVacua& v, Index n_max) {
  if (n_max < 0 || n_max > pair.dim() - 2)
    throw std::invalid_argument("build_families: n_max must be in [0, dim - 2]");
  TruncatedOperator adag = adjoint(pair.a);
  PBFamilies fam;
  fam.phi.push_back(v.phi0);
  fam.psi.push_back(v.psi0);
  for (Index n = 1; n <= n_max; ++n) {
    double s = std::sqrt(double(n));
    fam.phi.push_back(pair.b * fam.phi.back() / s);
    fam.psi.push_back(adag * fam.psi.back() / s);
  }
  return fam;
}

QuasiBasisSums quasi_basis_partial_sums(const PBFamilies& fam, const FockVector& f,
                                        const FockVector& g,
                                        const std::vector<Index>& cutoffs) {
  QuasiBasisSums out;
  out.cutoffs = cutoffs;
  out.target = inner(f, g);
  for (Index k : cutoffs) {
    if (k < 0 || size_t(k) > fam.phi.size())
      throw std::invalid_argument("quasi_basis_partial_sums: cutoff out of range");
    Complex s1 = 0.0, s2 = 0.0;
    for (Index n = 0; n < k; ++n) {
      s1 += inner(f, fam.phi[n]) * inner(fam.psi[n], g);
      s2 += inner(f, fam.psi[n]) * inner(fam.phi[n], g);
    }
    out.phi_psi.push_back(s1);
    out.psi_phi.push_back(s2);
  }
  return out;
}

}  // namespace ecsusy
