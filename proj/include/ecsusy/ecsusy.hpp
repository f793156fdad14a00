#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecsusy/fock.hpp"
#include "ecsusy/pseudoboson.hpp"

namespace ecsusy {

/// Extended coupled-SUSY quadruple: dc = rs + gamma, cd = sr + delta with
/// delta > gamma.  The pseudo-boson specialization is c = r = a, d = s = b.
struct ECSusyQuadruple {
  TruncatedOperator d, c, r, s;
  double gamma;
  double delta;
  Index dim() const { return d.dim(); }
};

ECSusyQuadruple quadruple_from_pb(const PBPair& pair);

struct QuadrupleResiduals {
  double first;   // dc - rs - gamma
  double second;  // cd - sr - delta
};

/// Guard-block residuals of the two defining relations.
QuadrupleResiduals verify_ecsusy(const ECSusyQuadruple& q, Index guard = 2);

/// Coupled-SUSY pair built from the boson: a = b = c0, gamma = -1, delta = 1.
struct CSusyBoson {
  TruncatedOperator a, b;
  double gamma, delta;
  double defect1;  // a^dag a - (b b^dag + gamma)
  double defect2;  // a a^dag - (b^dag b + delta)
};

CSusyBoson csusy_from_boson(Index dim);

/// Classic triple of a coupled-SUSY pair: K+ = a^dag b^dag/(delta-gamma),
/// K- = ba/(delta-gamma), K0 = (a^dag a - gamma/2)/(delta-gamma).
struct Su11Triple {
  TruncatedOperator plus, minus, zero;
  std::string kind;
};

Su11Triple classic_triple(const CSusyBoson& cs);

struct Su11Triples {
  Su11Triple k, l, p, q;
};

/// The four deformed su(1,1) triples of a quadruple; p and q are entrywise
/// adjoints of k and l with raising/lowering exchanged.
Su11Triples build_triples(const ECSusyQuadruple& quad);

struct TripleResiduals {
  double zero_plus;   // [x0, x+] - x+
  double zero_minus;  // [x0, x-] + x-
  double plus_minus;  // [x+, x-] + 2 x0
  double max() const;
};

TripleResiduals verify_su11(const Su11Triple& t, Index guard = 4);

struct CasimirResult {
  TruncatedOperator value;    // x0^2 + x0 - x- x+
  double form_disagreement;   // max pairwise guard-block residual of the three forms
  double centrality;          // max guard-block residual of [x^2, x_alpha]
};

CasimirResult casimir(const Su11Triple& t, Index guard = 4);

struct JSolution {
  Complex j;
  Complex other;
  bool ambiguous;  // neither root satisfies q0 + j = 0 within tolerance
};

/// Root of j(j+1) = lambda selected by the lowest-weight rule q0 + j = 0.
JSolution solve_j(Complex lambda, Complex q0, double tol = 1e-8);

struct EigenFamilyEntry {
  Complex q;
  FockVector vector;
  double zero_residual;     // |x0 v - q v| / |v|
  double casimir_residual;  // |x^2 v - lambda v| / |v|
};

struct EigenFamily {
  Complex j;
  Complex lambda;  // Casimir eigenvalue j(j+1)
  std::vector<EigenFamilyEntry> entries;
  bool terminated_early = false;  // raising coefficient hit zero before count
};

/// Builds members by the ladder recursion v_{q+1} = x+ v_q / (q - j) starting
/// from a lowest-weight vector (x- v0 = 0 determines q0 and j), or from the
/// supplied labels when v0 is an interior member.
EigenFamily eigenfamily_from_lowest(const Su11Triple& t, const FockVector& v0, Index count,
                                    std::optional<Complex> q0 = std::nullopt,
                                    std::optional<Complex> j = std::nullopt,
                                    double tol = 1e-8);

enum class SpectrumCase { BoundedBelow, BoundedAbove, BoundedBoth, NoBoundFound };

struct SpectrumClass {
  SpectrumCase kind;
  std::optional<int> lower_witness;  // steps of x- from the lowest member to zero
  std::optional<int> upper_witness;  // steps of x+ from the highest member to zero
  bool upper_probe_hit_truncation = false;
};

/// Probes both family ends with the ladder operators.  Annihilation at the
/// top that coincides with support reaching the truncation edge is attributed
/// to truncation and not reported as an upper bound.
SpectrumClass classify_spectrum(const Su11Triple& t, const EigenFamily& family,
                                int probe_depth = 8, double tol = 1e-8);

/// Biorthonormal dual family inside span(family): solves the Gram system, so
/// the members are the oblique projections of any global duals.
std::vector<FockVector> dual_family(const std::vector<FockVector>& family);

struct RelationResidual {
  std::string name;
  double residual;
};

/// The sixteen intertwining relations tying the k/l and p/q triples through
/// the quadruple operators (eight zero-grade shifts, eight ladder exchanges).
std::vector<RelationResidual> verify_intertwining(const ECSusyQuadruple& quad,
                                                  const Su11Triples& t, Index guard = 4);

}  // namespace ecsusy
