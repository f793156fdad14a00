#include <cmath>
#include <string>

#include "ecsusy/deform.hpp"
#include "ecsusy/su11.hpp"
#include "ecsusy/suites.hpp"

namespace ecsusy {

namespace {

double vec_norm(const FockVector& v) { return v.cwiseAbs().maxCoeff(); }

std::string row_slug(TableRow row) {
  switch (row) {
    case TableRow::A: return "a";
    case TableRow::B: return "b";
    case TableRow::ADag: return "adag";
    case TableRow::BDag: return "bdag";
    case TableRow::K0: return "k0";
    case TableRow::KPlus: return "kplus";
    case TableRow::KMinus: return "kminus";
    case TableRow::P0: return "p0";
    case TableRow::PPlus: return "pplus";
    case TableRow::PMinus: return "pminus";
  }
  return "?";
}

std::string row_relation(TableRow row, Parity col) {
  const bool even = col == Parity::Even;
  switch (row) {
    case TableRow::A:
      return even ? "a phi^even_m = (2m/(2m-1)) phi^odd_{m-1}"
                  : "a phi^odd_m = (2m+1) phi^even_m";
    case TableRow::B:
      return even ? "b phi^even_m = phi^odd_m" : "b phi^odd_m = (2m+1) phi^even_{m+1}";
    case TableRow::ADag:
      return even ? "a' psi^even_m = (2m+1) psi^odd_m"
                  : "a' psi^odd_m = ((2m+2)/(2m+1)) psi^even_{m+1}";
    case TableRow::BDag:
      return even ? "b' psi^even_m = (2m-1) psi^odd_{m-1}" : "b' psi^odd_m = psi^even_m";
    case TableRow::K0:
      return even ? "k0 phi^even_m = (m+1/4) phi^even_m" : "k0 phi^odd_m = (m+3/4) phi^odd_m";
    case TableRow::KPlus:
      return even ? "k+ phi^even_m = (m+1/2) phi^even_{m+1}"
                  : "k+ phi^odd_m = (m+1/2) phi^odd_{m+1}";
    case TableRow::KMinus:
      return even ? "k- phi^even_m = m phi^even_{m-1}"
                  : "k- phi^odd_m = (m(2m+1)/(2m-1)) phi^odd_{m-1}";
    case TableRow::P0:
      return even ? "p0 psi^even_m = (m+1/4) psi^even_m" : "p0 psi^odd_m = (m+3/4) psi^odd_m";
    case TableRow::PPlus:
      return even ? "p+ psi^even_m = (m+1) psi^even_{m+1}"
                  : "p+ psi^odd_m = ((m+1)(2m+3)/(2m+1)) psi^odd_{m+1}";
    case TableRow::PMinus:
      return even ? "p- psi^even_m = (m-1/2) psi^even_{m-1}"
                  : "p- psi^odd_m = (m-1/2) psi^odd_{m-1}";
  }
  return "?";
}

}  // namespace

VerificationReport run_tables_suite(const RunConfig& cfg) {
  VerificationReport rep;
  rep.command = "verify-tables";
  rep.config = cfg.echo();
  auto& checks = rep.checks;

  const Index n = cfg.dim;
  const long m_max = cfg.m_max;
  PBPair pair = canonical_pb_pair(n);
  PBVacua vac = vacua(pair);
  PBFamilies fam = build_families(pair, vac, 2 * m_max + 3);
  FamilyPair even = build_even(fam, m_max + 1);
  FamilyPair odd = build_odd(fam, m_max + 1);
  Su11Triples triples = build_triples(specialize(pair));

  if (suite_selected(cfg, "families")) {
    double re = 0.0, ro = 0.0;
    for (long m = 0; m <= m_max; ++m) {
      const auto& e = even.phi[size_t(m)];
      const auto& o = odd.phi[size_t(m)];
      re = std::max(re, vec_norm(triples.k.zero * e.vector - Complex(e.q) * e.vector));
      ro = std::max(ro, vec_norm(triples.k.zero * o.vector - Complex(o.q) * o.vector));
    }
    checks.push_back(
        make_check("families.even.eigen", "k0 phi^even_m = (m+1/4) phi^even_m", re,
                   cfg.tol_table));
    checks.push_back(make_check("families.odd.eigen", "k0 phi^odd_m = (m+3/4) phi^odd_m", ro,
                                cfg.tol_table));

    auto biorth = [&](const FamilyPair& f) {
      double r = 0.0;
      for (long i = 0; i <= m_max; ++i)
        for (long j = 0; j <= m_max; ++j) {
          double expected = i == j ? 1.0 : 0.0;
          r = std::max(r, std::abs(inner(f.psi[size_t(i)].vector, f.phi[size_t(j)].vector) -
                                   expected));
        }
      return r;
    };
    checks.push_back(make_check("families.even.biorth", "<psi^even_m, phi^even_n> = delta_mn",
                                biorth(even), cfg.tol_biorth));
    checks.push_back(make_check("families.odd.biorth", "<psi^odd_m, phi^odd_n> = delta_mn",
                                biorth(odd), cfg.tol_biorth));

    double cross = 0.0;
    for (long i = 0; i <= m_max; ++i)
      for (long j = 0; j <= m_max; ++j) {
        cross = std::max(cross, std::abs(inner(even.psi[size_t(i)].vector,
                                               odd.phi[size_t(j)].vector)));
        cross = std::max(cross, std::abs(inner(odd.psi[size_t(i)].vector,
                                               even.phi[size_t(j)].vector)));
      }
    checks.push_back(make_check("families.cross.zero", "even/odd cross pairings vanish", cross,
                                cfg.tol_biorth));

    double parity = 0.0;
    for (long m = 0; m <= m_max; ++m) {
      const FockVector& e = even.phi[size_t(m)].vector;
      const FockVector& o = odd.phi[size_t(m)].vector;
      for (Index i = 0; i < n; ++i) {
        if (i % 2 == 1) parity = std::max(parity, std::abs(e(i)));
        if (i % 2 == 0) parity = std::max(parity, std::abs(o(i)));
      }
    }
    checks.push_back(make_check("families.parity.split",
                                "phi^even_m lives on even levels, phi^odd_m on odd", parity,
                                cfg.tol_table));

    bool trivially = spans_intersect_trivially(even.phi, odd.phi);
    checks.push_back(make_check("families.span.rank",
                                "span(even) intersects span(odd) trivially",
                                trivially ? 0.0 : 1.0, 0.5));

    TruncatedOperator ba = compose(adjoint(pair.a), pair.a);
    double chain = 0.0;
    for (long m = 0; m <= m_max; ++m) {
      const auto& o = odd.phi[size_t(m)];
      chain = std::max(chain, vec_norm(ba * o.vector - Complex(2.0 * m + 1.0) * o.vector));
    }
    checks.push_back(make_check("families.odd.chain", "b a phi^odd_m = (2m+1) phi^odd_m",
                                chain, cfg.tol_table));

    double norms = 0.0;
    for (long m = 0; m <= m_max; ++m) {
      double ref_e = std::sqrt(double(factorial(2 * m))) / double(double_factorial(2 * m - 1));
      double ref_o =
          std::sqrt(double(factorial(2 * m + 1))) / double(double_factorial(2 * m - 1));
      norms = std::max(norms, std::abs(even_norm(m).value() - ref_e) / ref_e);
      norms = std::max(norms, std::abs(odd_norm(m).value() - ref_o) / ref_o);
    }
    checks.push_back(make_check("families.norm.value",
                                "E(m) = sqrt((2m)!)/(2m-1)!!, O(m) = sqrt((2m+1)!)/(2m-1)!!",
                                norms, cfg.tol_table));
  }

  if (suite_selected(cfg, "rows")) {
    auto rows = verify_tables(pair, even, odd, m_max, cfg.tol_table);
    long flag_count = 0;
    for (const auto& rc : rows) {
      std::string id = "table" + std::to_string(rc.table) + "." + row_slug(rc.row) + "." +
                       (rc.column == Parity::Even ? "even" : "odd");
      CheckResult c = make_check(id, row_relation(rc.row, rc.column), rc.float_residual,
                                 cfg.tol_table);
      c.pass = rc.pass;
      c.flagged = rc.flagged;
      if (!rc.exact_ok) c.note = "norm-derived coefficient disagrees with the closed form";
      else if (rc.flagged) c.note = "printed form inconsistent; consistent form verified";
      checks.push_back(c);
      if (rc.flagged) ++flag_count;
    }
    checks.push_back(make_check("tables.flag.count", "exactly two printed rows corrected",
                                std::abs(double(flag_count) - 2.0), 0.5));
  }

  if (suite_selected(cfg, "dual")) {
    auto solve_against = [&](const FamilyPair& f) {
      std::vector<FockVector> vs;
      for (long m = 0; m <= m_max; ++m) vs.push_back(f.phi[size_t(m)].vector);
      std::vector<FockVector> duals = dual_family(vs);
      double r = 0.0;
      for (long m = 0; m <= m_max; ++m)
        r = std::max(r, vec_norm(duals[size_t(m)] - f.psi[size_t(m)].vector));
      return r;
    };
    checks.push_back(make_check("dual.solve.even",
                                "Gram-solved duals match the normalized psi^even family",
                                solve_against(even), cfg.tol_biorth));
    checks.push_back(make_check("dual.solve.odd",
                                "Gram-solved duals match the normalized psi^odd family",
                                solve_against(odd), cfg.tol_biorth));

    double alt = 0.0;
    for (long m = 0; m <= m_max; ++m) {
      double lhs = double(alt_dual_scale(m));
      double rhs = even_norm(m).value() * even_norm(m).value();
      alt = std::max(alt, std::abs(lhs - rhs) / rhs);
    }
    checks.push_back(
        make_check("dual.alt.scale", "(2m)!/((2m-1)!!)^2 = E(m)^2", alt, cfg.tol_table));
  }

  if (suite_selected(cfg, "interleave")) {
    InterleavedFamilies inter = interleave(even, odd);
    double r = 0.0;
    for (size_t i = 0; i < inter.xi.size(); ++i)
      for (size_t j = 0; j < inter.phi.size(); ++j) {
        double expected = i == j ? 1.0 : 0.0;
        r = std::max(r, std::abs(inner(inter.xi[i], inter.phi[j]) - expected));
      }
    checks.push_back(
        make_check("interleave.biorth", "<xi_a, Phi_b> = delta_ab", r, cfg.tol_biorth));

    Index support = std::min<Index>(8, Index(inter.phi.size()));
    FockVector f = seeded_vector(n, support, cfg.seed + 7);
    FockVector g = seeded_vector(n, support, cfg.seed + 8);
    Complex sum(0.0);
    for (size_t a = 0; a < inter.phi.size(); ++a)
      sum += inner(f, inter.phi[a]) * inner(inter.xi[a], g);
    checks.push_back(make_check("interleave.quasibasis",
                                "sum_a <f, Phi_a><xi_a, g> = <f, g>",
                                std::abs(sum - inner(f, g)), cfg.tol_biorth));
  }

  return rep;
}

}  // namespace ecsusy
