#include <cmath>
#include <cstdio>
#include <string>

#include "ecsusy/deform.hpp"
#include "ecsusy/su11.hpp"
#include "ecsusy/suites.hpp"

namespace ecsusy {

namespace {

double vec_norm(const FockVector& v) { return v.cwiseAbs().maxCoeff(); }

double triples_residual(const Su11Triples& t) {
  double r = 0.0;
  for (const Su11Triple* x : {&t.k, &t.l, &t.p, &t.q}) r = std::max(r, verify_su11(*x).max());
  return r;
}

double op_diff(const TruncatedOperator& a, const TruncatedOperator& b) {
  return max_abs(a.entries() - b.entries());
}

struct TiltedSetup {
  DeformationPair def;
  ECSusyQuadruple quad;
  Su11Triples tilted;
  TiltedFamilies fams;
};

TiltedSetup make_setup(const PBPair& base, const DeformationPair& def, long m_max) {
  PBVacua vac = vacua(base);
  PBFamilies fam = build_families(base, vac, 2 * m_max + 3);
  FamilyPair even = build_even(fam, m_max + 1);
  FamilyPair odd = build_odd(fam, m_max + 1);
  Su11Triples baseTriples = build_triples(specialize(base));
  return {def, deform_quadruple(base, def), tilted_triples(def, baseTriples),
          tilted_vectors(def, even, odd)};
}

double interleaved_biorth(const TiltedFamilies& f, long m_max) {
  std::vector<const FockVector*> big, dual;
  for (long m = 0; m <= m_max; ++m) {
    big.push_back(&f.phi[size_t(m)]);
    big.push_back(&f.chi[size_t(m)]);
    dual.push_back(&f.psi[size_t(m)]);
    dual.push_back(&f.eta[size_t(m)]);
  }
  double r = 0.0;
  for (size_t i = 0; i < dual.size(); ++i)
    for (size_t j = 0; j < big.size(); ++j) {
      double expected = i == j ? 1.0 : 0.0;
      r = std::max(r, std::abs(inner(*dual[i], *big[j]) - expected));
    }
  return r;
}

double quasi_defect(const TiltedFamilies& f, long m_max, const FockVector& u,
                    const FockVector& v) {
  Complex sum(0.0);
  for (long m = 0; m <= m_max; ++m) {
    sum += inner(u, f.phi[size_t(m)]) * inner(f.psi[size_t(m)], v);
    sum += inner(u, f.chi[size_t(m)]) * inner(f.eta[size_t(m)], v);
  }
  return std::abs(sum - inner(u, v));
}

}  // namespace

VerificationReport run_deform_suite(const RunConfig& cfg) {
  VerificationReport rep;
  rep.command = "verify-deform";
  rep.config = cfg.echo();
  auto& checks = rep.checks;

  const Index n = cfg.dim;
  const long m_max = cfg.m_max;
  const double tol = cfg.tol_commutator;
  PBPair canonical = canonical_pb_pair(n);
  Su11Triples baseTriples = build_triples(specialize(canonical));

  DeformationPair diag0 = make_deformation(seeded_diagonal(n, cfg.seed + 10),
                                           seeded_diagonal(n, cfg.seed + 11));

  if (suite_selected(cfg, "diagonal")) {
    for (int i = 0; i < 5; ++i) {
      DeformationPair def =
          i == 0 ? diag0
                 : make_deformation(seeded_diagonal(n, cfg.seed + 10 + 2 * i),
                                    seeded_diagonal(n, cfg.seed + 11 + 2 * i));
      ECSusyQuadruple quad = deform_quadruple(canonical, def);
      QuadrupleResiduals qr = verify_ecsusy(quad);
      char id[32];
      std::snprintf(id, sizeof id, "diag%d.quadruple", i);
      checks.push_back(make_check(id, "d c = r s + gamma, c d = s r + delta",
                                  std::max(qr.first, qr.second), tol));
      std::snprintf(id, sizeof id, "diag%d.su11", i);
      checks.push_back(make_check(id, "all four triples satisfy the su(1,1) commutators",
                                  triples_residual(build_triples(quad)), tol));
    }

    ECSusyQuadruple quad0 = deform_quadruple(canonical, diag0);
    Su11Triples fromQuad = build_triples(quad0);
    Su11Triples fromTilt = tilted_triples(diag0, baseTriples);
    double route = 0.0;
    for (auto [qa, qb] : {std::pair{&fromQuad.k, &fromTilt.k}, std::pair{&fromQuad.l, &fromTilt.l},
                          std::pair{&fromQuad.p, &fromTilt.p},
                          std::pair{&fromQuad.q, &fromTilt.q}}) {
      route = std::max(route, op_diff(qa->plus, qb->plus));
      route = std::max(route, op_diff(qa->minus, qb->minus));
      route = std::max(route, op_diff(qa->zero, qb->zero));
    }
    checks.push_back(make_check("diag.route.match",
                                "triples from the deformed quadruple equal the tilted triples",
                                route, tol));

    CasimirResult cas = casimir(fromTilt.k);
    checks.push_back(make_check("diag.casimir.value", "k~^2 = -3/16 on the guarded block",
                                leading_block_residual(cas.value,
                                                       Complex(-3.0 / 16.0) * identity(n), 4),
                                tol));
    checks.push_back(make_check("diag.casimir.central",
                                "[k~^2, k~_i] = 0 on the guarded block", cas.centrality, tol));
  }

  if (suite_selected(cfg, "tilted")) {
    TiltedSetup setup = make_setup(canonical, diag0, m_max);

    double re = 0.0, rl = 0.0, rp = 0.0, rq = 0.0;
    for (long m = 0; m <= m_max; ++m) {
      Complex qe(double(m) + 0.25), qo(double(m) + 0.75);
      re = std::max(re, vec_norm(setup.tilted.k.zero * setup.fams.phi[size_t(m)] -
                                 qe * setup.fams.phi[size_t(m)]));
      rl = std::max(rl, vec_norm(setup.tilted.l.zero * setup.fams.chi[size_t(m)] -
                                 qo * setup.fams.chi[size_t(m)]));
      rp = std::max(rp, vec_norm(setup.tilted.p.zero * setup.fams.psi[size_t(m)] -
                                 qe * setup.fams.psi[size_t(m)]));
      rq = std::max(rq, vec_norm(setup.tilted.q.zero * setup.fams.eta[size_t(m)] -
                                 qo * setup.fams.eta[size_t(m)]));
    }
    checks.push_back(
        make_check("tilted.k.eigen", "k~0 phi~_m = (m+1/4) phi~_m", re, cfg.tol_table));
    checks.push_back(
        make_check("tilted.l.eigen", "l~0 chi~_m = (m+3/4) chi~_m", rl, cfg.tol_table));
    checks.push_back(
        make_check("tilted.p.eigen", "p~0 psi~_m = (m+1/4) psi~_m", rp, cfg.tol_table));
    checks.push_back(
        make_check("tilted.q.eigen", "q~0 eta~_m = (m+3/4) eta~_m", rq, cfg.tol_table));

    auto ladder = verify_tilted_ladder(setup.tilted, setup.fams);
    for (size_t i = 0; i < ladder.size(); ++i) {
      char id[32];
      std::snprintf(id, sizeof id, "tilted.ladder.%zu", i + 1);
      checks.push_back(make_check(id, ladder[i].name, ladder[i].residual, cfg.tol_table));
    }

    checks.push_back(make_check("tilted.biorth.interleaved",
                                "<xi~_a, Phi~_b> = delta_ab (parity-preserving deformation)",
                                interleaved_biorth(setup.fams, m_max), cfg.tol_biorth));

    double bottom = std::max(
        {vec_norm(setup.tilted.k.minus * setup.fams.phi[0]),
         vec_norm(setup.tilted.l.minus * setup.fams.chi[0]),
         vec_norm(setup.tilted.p.minus * setup.fams.psi[0]),
         vec_norm(setup.tilted.q.minus * setup.fams.eta[0])});
    checks.push_back(make_check("tilted.lower.annihilation",
                                "all four tilted lowering operators kill the bottom member",
                                bottom, cfg.tol_table));

    auto mapping = verify_mapping_diagram(setup.quad, setup.fams);
    for (size_t i = 0; i < mapping.size(); ++i) {
      char id[32];
      std::snprintf(id, sizeof id, "tilted.map.%zu", i + 1);
      checks.push_back(make_check(id, mapping[i].name, mapping[i].residual, cfg.tol_table));
    }

    DeformationPair trivial = make_deformation(identity(n), identity(n));
    ECSusyQuadruple same = deform_quadruple(canonical, trivial);
    ECSusyQuadruple base = specialize(canonical);
    double reduce = std::max({op_diff(same.d, base.d), op_diff(same.c, base.c),
                              op_diff(same.r, base.r), op_diff(same.s, base.s)});
    checks.push_back(make_check("tilted.identity.reduction",
                                "identity deformation reproduces the pseudo-boson quadruple",
                                reduce, tol));

    checks.push_back(make_exceed_check(
        "tilted.genuine.cr", "deformed c and r differ (beyond pseudo-bosons)",
        op_diff(setup.quad.c, setup.quad.r), 1e-4));
  }

  if (suite_selected(cfg, "generic")) {
    PBPair mixed = pb_pair_by_similarity(seeded_mixing_similarity(n, cfg.seed + 30));
    DeformationPair def = make_deformation(seeded_diagonal(n, cfg.seed + 31),
                                           seeded_diagonal(n, cfg.seed + 32));
    TiltedSetup setup = make_setup(mixed, def, m_max);

    QuadrupleResiduals qr = verify_ecsusy(setup.quad);
    checks.push_back(make_check("generic.quadruple", "d c = r s + gamma, c d = s r + delta",
                                std::max(qr.first, qr.second), tol));

    auto rels = verify_intertwining(setup.quad, build_triples(setup.quad));
    for (size_t i = 0; i < rels.size(); ++i) {
      char id[40];
      std::snprintf(id, sizeof id, "generic.intertwine.%02zu", i + 1);
      checks.push_back(make_check(id, rels[i].name, rels[i].residual, tol));
    }

    double within = 0.0;
    for (long i = 0; i <= m_max; ++i)
      for (long j = 0; j <= m_max; ++j) {
        double expected = i == j ? 1.0 : 0.0;
        within = std::max(within, std::abs(inner(setup.fams.psi[size_t(i)],
                                                 setup.fams.phi[size_t(j)]) -
                                           expected));
        within = std::max(within, std::abs(inner(setup.fams.eta[size_t(i)],
                                                 setup.fams.chi[size_t(j)]) -
                                           expected));
      }
    checks.push_back(make_check("generic.biorth.pairs",
                                "<psi~_m, phi~_n> = <eta~_m, chi~_n> = delta_mn", within,
                                cfg.tol_biorth));

    double cross = 0.0;
    for (long i = 0; i <= m_max; ++i)
      for (long j = 0; j <= m_max; ++j)
        cross = std::max(cross, std::abs(inner(setup.fams.eta[size_t(i)],
                                               setup.fams.phi[size_t(j)])));
    checks.push_back(make_exceed_check("generic.cross.pairing",
                                       "cross pairing <eta~, phi~> is genuinely nonzero", cross,
                                       1e-4));

    Index support = std::min<Index>(8, 2 * m_max + 2);
    FockVector u = seeded_vector(n, support, cfg.seed + 33);
    FockVector v = seeded_vector(n, support, cfg.seed + 34);
    checks.push_back(make_exceed_check("generic.quasibasis.defect",
                                       "interleaved tilted pairs fail to resolve the identity",
                                       quasi_defect(setup.fams, m_max, u, v), 1e-3));
  }

  if (suite_selected(cfg, "special")) {
    PBPair mixed = pb_pair_by_similarity(seeded_mixing_similarity(n, cfg.seed + 30));
    TruncatedOperator t = seeded_diagonal(n, cfg.seed + 31);
    Complex lambda(0.7, 0.2);
    DeformationPair prop = make_deformation(lambda * t, t);
    TiltedSetup setup = make_setup(mixed, prop, m_max);

    double cross = 0.0;
    for (long i = 0; i <= m_max; ++i)
      for (long j = 0; j <= m_max; ++j) {
        cross = std::max(cross, std::abs(inner(setup.fams.eta[size_t(i)],
                                               setup.fams.phi[size_t(j)])));
        cross = std::max(cross, std::abs(inner(setup.fams.psi[size_t(i)],
                                               setup.fams.chi[size_t(j)])));
      }
    checks.push_back(make_check("restore.proportional.cross",
                                "S = lambda T restores vanishing cross pairings", cross,
                                10.0 * cfg.tol_biorth));

    Index support = std::min<Index>(8, 2 * m_max + 2);
    FockVector u = seeded_vector(n, support, cfg.seed + 33);
    FockVector v = seeded_vector(n, support, cfg.seed + 34);
    checks.push_back(make_check("restore.proportional.sums",
                                "S = lambda T restores the interleaved resolution of identity",
                                quasi_defect(setup.fams, m_max, u, v), 10.0 * cfg.tol_biorth));

    DeformationPair block = make_deformation(seeded_parity_block(n, cfg.seed + 35),
                                             seeded_parity_block(n, cfg.seed + 36));
    TiltedSetup parity = make_setup(canonical, block, m_max);
    checks.push_back(make_check("restore.parity.biorth",
                                "parity-preserving S, T keep full biorthonormality",
                                interleaved_biorth(parity.fams, m_max), cfg.tol_biorth));

    TruncatedOperator tb = seeded_parity_block(n, cfg.seed + 37);
    checks.push_back(make_check("deform.adjoint.identity", "(T^-1)' = (T')^-1",
                                op_diff(adjoint(inverse(tb)), inverse(adjoint(tb))), tol));
  }

  return rep;
}

}  // namespace ecsusy
