#include <cmath>
#include <cstdio>

#include "ecsusy/deform.hpp"
#include "ecsusy/ecsusy.hpp"
#include "ecsusy/su11.hpp"
#include "ecsusy/suites.hpp"

namespace ecsusy {

namespace {

double vec_norm(const FockVector& v) { return v.cwiseAbs().maxCoeff(); }

}  // namespace

VerificationReport run_core_suite(const RunConfig& cfg) {
  VerificationReport rep;
  rep.command = "verify-core";
  rep.config = cfg.echo();

  const Index n = cfg.dim;
  const double tol = cfg.tol_commutator;
  auto& checks = rep.checks;

  if (suite_selected(cfg, "fock")) {
    TruncatedOperator a = bosonic_annihilator(n);
    double r = 0.0;
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        double expected = (j == i + 1) ? std::sqrt(double(j)) : 0.0;
        r = std::max(r, std::abs(a.entries()(i, j) - expected));
      }
    checks.push_back(make_check("fock.ladder.band", "a[n-1, n] = sqrt(n)", r, tol));

    TruncatedOperator aa = compose(a, a);
    double beyond = 0.0;
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (std::abs(i - j) > aa.bandwidth()) beyond = std::max(beyond, std::abs(aa.entries()(i, j)));
    checks.push_back(
        make_check("fock.compose.band", "band(AB) <= band(A) + band(B)", beyond, tol));

    TruncatedOperator comm = commutator(a, adjoint(a));
    double defect = max_abs(comm.entries() - Matrix::Identity(n, n));
    checks.push_back(make_check("fock.corner.defect", "truncated [a, a'] corner defect = dim",
                                std::abs(defect - double(n)), tol * double(n)));
    checks.push_back(make_check("fock.guard.identity", "[a, a'] = 1 on the guarded block",
                                leading_block_residual(comm, identity(n), 2), tol));

    FockVector u = seeded_vector(n, n, cfg.seed + 1);
    FockVector v = seeded_vector(n, n, cfg.seed + 2);
    Complex lhs = inner(adjoint(a) * u, v);
    Complex rhs = inner(u, a * v);
    checks.push_back(make_check("fock.adjoint.inner", "<a' u, v> = <u, a v>",
                                std::abs(lhs - rhs), tol));

    TruncatedOperator vmix = seeded_mixing_similarity(n, cfg.seed + 3);
    checks.push_back(make_check("fock.inverse.residual", "V V^-1 = 1",
                                max_abs(compose(vmix, inverse(vmix)).entries() -
                                        Matrix::Identity(n, n)),
                                tol));
  }

  if (suite_selected(cfg, "boson")) {
    CSusyBoson cs = csusy_from_boson(n);
    checks.push_back(make_check("boson.relation.first", "a' a = b b' + gamma (boson collapse)",
                                cs.defect1, tol));
    checks.push_back(make_check("boson.relation.second", "a a' = b' b + delta (boson collapse)",
                                cs.defect2, tol));
    Su11Triple kt = classic_triple(cs);
    checks.push_back(make_check("boson.triple.commutators",
                                "[K0, K+] = K+, [K0, K-] = -K-, [K+, K-] = -2 K0",
                                verify_su11(kt).max(), tol));
    CasimirResult cas = casimir(kt);
    checks.push_back(make_check("boson.casimir.value", "K^2 = -3/16 on the guarded block",
                                leading_block_residual(cas.value,
                                                       Complex(-3.0 / 16.0) * identity(n), 4),
                                tol));
  }

  if (suite_selected(cfg, "pseudoboson")) {
    PBPair canonical = canonical_pb_pair(n);
    checks.push_back(make_check("pb.canonical.commutator", "[a, b] = 1 on the guarded block",
                                check_pb(canonical, tol).residual, tol));
    PBPair diag = pb_pair_by_similarity(seeded_diagonal(n, cfg.seed + 4));
    checks.push_back(make_check("pb.similarity.commutator", "[a, b] = 1 on the guarded block",
                                check_pb(diag, tol).residual, tol));
    PBPair swapped{adjoint(diag.b), adjoint(diag.a)};
    checks.push_back(make_check("pb.similarity.swap", "[b', a'] = 1 on the guarded block",
                                check_pb(swapped, tol).residual, tol));

    PBVacua vac = vacua(diag);
    checks.push_back(make_check("pb.vacua.pairing", "<phi0, psi0> = 1",
                                std::abs(inner(vac.phi0, vac.psi0) - 1.0), cfg.tol_biorth));

    Index n_max = std::min(n - 2, 2 * cfg.m_max + 2);
    PBFamilies fam = build_families(diag, vac, n_max);
    double biorth = 0.0;
    for (size_t i = 0; i < fam.psi.size(); ++i)
      for (size_t j = 0; j < fam.phi.size(); ++j) {
        double expected = i == j ? 1.0 : 0.0;
        biorth = std::max(biorth, std::abs(inner(fam.psi[i], fam.phi[j]) - expected));
      }
    checks.push_back(
        make_check("pb.families.biorth", "<psi_m, phi_n> = delta_mn", biorth, cfg.tol_biorth));

    FockVector f = seeded_vector(n, std::min<Index>(8, n_max + 1), cfg.seed + 5);
    FockVector g = seeded_vector(n, std::min<Index>(8, n_max + 1), cfg.seed + 6);
    QuasiBasisSums sums = quasi_basis_partial_sums(fam, f, g, {n_max + 1});
    double quasi = std::max(std::abs(sums.phi_psi.back() - sums.target),
                            std::abs(sums.psi_phi.back() - sums.target));
    checks.push_back(make_check("pb.quasibasis.partial",
                                "sum_n <f, phi_n><psi_n, g> = <f, g>", quasi, cfg.tol_biorth));
  }

  PBPair canonical = canonical_pb_pair(n);
  ECSusyQuadruple quad = specialize(canonical);
  Su11Triples triples = build_triples(quad);

  if (suite_selected(cfg, "quadruple")) {
    QuadrupleResiduals qr = verify_ecsusy(quad);
    checks.push_back(make_check("quad.dpb.first", "d c = r s + gamma", qr.first, tol));
    checks.push_back(make_check("quad.dpb.second", "c d = s r + delta", qr.second, tol));
  }

  if (suite_selected(cfg, "triples")) {
    struct Named {
      const char* letter;
      const Su11Triple* t;
    };
    for (const auto& [letter, t] : {Named{"k", &triples.k}, Named{"l", &triples.l},
                                    Named{"p", &triples.p}, Named{"q", &triples.q}}) {
      TripleResiduals tr = verify_su11(*t);
      std::string base = std::string("su11.") + letter;
      std::string L = letter;
      checks.push_back(make_check(base + ".zero_plus", "[" + L + "0, " + L + "+] = " + L + "+",
                                  tr.zero_plus, tol));
      checks.push_back(make_check(base + ".zero_minus", "[" + L + "0, " + L + "-] = -" + L + "-",
                                  tr.zero_minus, tol));
      checks.push_back(make_check(base + ".plus_minus",
                                  "[" + L + "+, " + L + "-] = -2 " + L + "0", tr.plus_minus,
                                  tol));
    }
  }

  if (suite_selected(cfg, "casimir")) {
    using NamedTriple = std::pair<const char*, const Su11Triple*>;
    for (const auto& [letter, t] : {NamedTriple{"k", &triples.k}, NamedTriple{"p", &triples.p}}) {
      CasimirResult cas = casimir(*t);
      std::string base = std::string("casimir.") + letter;
      std::string L = letter;
      checks.push_back(make_check(base + ".value", L + "^2 = -3/16 on the guarded block",
                                  leading_block_residual(cas.value,
                                                         Complex(-3.0 / 16.0) * identity(n), 4),
                                  tol));
      checks.push_back(make_check(base + ".forms", "three factorizations of " + L + "^2 agree",
                                  cas.form_disagreement, tol));
      checks.push_back(make_check(base + ".central",
                                  "[" + L + "^2, " + L + "_i] = 0 on the guarded block",
                                  cas.centrality, tol));
    }
  }

  if (suite_selected(cfg, "eigen")) {
    FockVector v0 = FockVector::Zero(n);
    v0(0) = 1.0;
    EigenFamily fam = eigenfamily_from_lowest(triples.k, v0, cfg.m_max + 1);
    checks.push_back(make_check("eigen.lowest.labels", "q0 = 1/4 gives j = -1/4",
                                std::abs(fam.j - Complex(-0.25)), tol));
    double zr = 0.0, cr = 0.0, ql = 0.0;
    for (size_t i = 0; i < fam.entries.size(); ++i) {
      zr = std::max(zr, fam.entries[i].zero_residual);
      cr = std::max(cr, fam.entries[i].casimir_residual);
      ql = std::max(ql, std::abs(fam.entries[i].q - Complex(double(i) + 0.25)));
    }
    checks.push_back(make_check("eigen.zero.residual", "k0 v_q = q v_q along the ladder",
                                std::max(zr, ql), tol));
    checks.push_back(make_check("eigen.casimir.residual",
                                "k^2 v_q = j(j+1) v_q along the ladder", cr, tol));
    SpectrumClass sc = classify_spectrum(triples.k, fam);
    bool ok = sc.kind == SpectrumCase::BoundedBelow && sc.lower_witness &&
              *sc.lower_witness == 1 && !sc.upper_probe_hit_truncation;
    checks.push_back(make_check("eigen.spectrum.case1",
                                "family bounded below with a one-step annihilation witness",
                                ok ? 0.0 : 1.0, 0.5));
  }

  if (suite_selected(cfg, "dual")) {
    PBPair diag = pb_pair_by_similarity(seeded_diagonal(n, cfg.seed + 4));
    PBVacua vac = vacua(diag);
    Index n_max = std::min(n - 2, 2 * cfg.m_max + 2);
    PBFamilies fam = build_families(diag, vac, n_max);
    std::vector<FockVector> duals = dual_family(fam.phi);
    double r = 0.0;
    for (size_t i = 0; i < duals.size(); ++i)
      for (size_t j = 0; j < fam.phi.size(); ++j) {
        double expected = i == j ? 1.0 : 0.0;
        r = std::max(r, std::abs(inner(duals[i], fam.phi[j]) - expected));
      }
    checks.push_back(
        make_check("dual.gram.solve", "<dual_m, v_n> = delta_mn", r, cfg.tol_biorth));

    PBVacua cvac = vacua(canonical);
    PBFamilies cfam = build_families(canonical, cvac, 2 * cfg.m_max + 3);
    FamilyPair even = build_even(cfam, cfg.m_max);
    const Complex j(-0.25);
    double r0 = 0.0, rp = 0.0, rm = 0.0;
    for (long m = 0; m <= cfg.m_max; ++m) {
      const auto& e = even.psi[size_t(m)];
      Complex q(double(m) + 0.25);
      r0 = std::max(r0, vec_norm(triples.p.zero * e.vector - q * e.vector));
      if (m < cfg.m_max)
        rp = std::max(rp, vec_norm(triples.p.plus * e.vector -
                                   std::conj(q + j + 1.0) * even.psi[size_t(m) + 1].vector));
      if (m > 0)
        rm = std::max(rm, vec_norm(triples.p.minus * e.vector -
                                   std::conj(q - 1.0 - j) * even.psi[size_t(m) - 1].vector));
      else
        rm = std::max(rm, vec_norm(triples.p.minus * e.vector));
    }
    checks.push_back(make_check("dual.p.zero", "p0 psi_q = q psi_q", r0, tol));
    checks.push_back(
        make_check("dual.p.raise", "p+ psi_q = conj(q + j + 1) psi_{q+1}", rp, tol));
    CheckResult lower =
        make_check("dual.p.lower", "p- psi_q = conj(q - 1 - j) psi_{q-1}", rm, tol);
    lower.flagged = true;
    lower.note = "printed target index corrected to q - 1";
    checks.push_back(lower);
  }

  if (suite_selected(cfg, "intertwine")) {
    auto rels = verify_intertwining(quad, triples);
    for (size_t i = 0; i < rels.size(); ++i) {
      char id[32];
      std::snprintf(id, sizeof id, "intertwine.%02zu", i + 1);
      checks.push_back(make_check(id, rels[i].name, rels[i].residual, tol));
    }
  }

  return rep;
}

}  // namespace ecsusy
