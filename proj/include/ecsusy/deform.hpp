#pragma once

#include <cstdint>
#include <vector>

#include "ecsusy/ecsusy.hpp"
#include "ecsusy/su11.hpp"

namespace ecsusy {

struct DeformationPair {
  TruncatedOperator s, t, s_inv, t_inv;
  double cond_s, cond_t;
  double inv_residual;  // max of |S S^-1 - 1| and |T T^-1 - 1|
};

DeformationPair make_deformation(const TruncatedOperator& s, const TruncatedOperator& t,
                                 double condition_cap = 1e8);

/// c = S a T^-1, s = S b T^-1, d = T b S^-1, r = T a S^-1 with gamma = -1,
/// delta = 1.
ECSusyQuadruple deform_quadruple(const PBPair& base, const DeformationPair& def);

/// Similarity-tilted triples of the pseudo-boson k and p triples:
/// k~ = T k T^-1, l~ = S k S^-1, p~ = (T^-1)* p T*, q~ = (S^-1)* p S*.
Su11Triples tilted_triples(const DeformationPair& def, const Su11Triples& base);

struct TiltedFamilies {
  std::vector<FockVector> phi;  // T (even phi family)
  std::vector<FockVector> psi;  // (T^-1)* (even psi family)
  std::vector<FockVector> chi;  // S (odd phi family)
  std::vector<FockVector> eta;  // (S^-1)* (odd psi family)
};

TiltedFamilies tilted_vectors(const DeformationPair& def, const FamilyPair& even,
                              const FamilyPair& odd);

/// The eight tilted ladder relations, coefficients drawn from the exact
/// table; lowering at m = 0 is checked against the annihilation convention.
std::vector<RelationResidual> verify_tilted_ladder(const Su11Triples& tilted,
                                                   const TiltedFamilies& fams);

/// The eight quadruple-operator mappings between tilted families (s, c, d, r
/// on the phi side and their adjoints on the dual side).
std::vector<RelationResidual> verify_mapping_diagram(const ECSusyQuadruple& quad,
                                                     const TiltedFamilies& fams);

/// Diagonal matrix with entries uniform in [1/2, 2], deterministic in seed.
TruncatedOperator seeded_diagonal(Index dim, std::uint64_t seed);

/// Identity plus a random even-offset band: preserves Fock parity while
/// being genuinely non-diagonal.  Kept a strict contraction so the result
/// is well conditioned.
TruncatedOperator seeded_parity_block(Index dim, std::uint64_t seed, double strength = 0.15);

/// Identity plus a random superdiagonal: mixes Fock parity without any
/// raising reach, so truncation guards are unaffected.
TruncatedOperator seeded_mixing_similarity(Index dim, std::uint64_t seed,
                                           double strength = 0.25);

/// Vector with complex entries uniform in [-1,1]^2 on the first `support`
/// coordinates, zero elsewhere.
FockVector seeded_vector(Index dim, Index support, std::uint64_t seed);

}  // namespace ecsusy
