#include "ecsusy/su11.hpp"

#include <stdexcept>

namespace ecsusy {

namespace {

Index rank_of(const Matrix& m, double tol) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  Index r = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * sv(0)) ++r;
  return r;
}

Matrix stack(const std::vector<IndexedVector>& a, const std::vector<IndexedVector>& b) {
  Index n = a.empty() ? b[0].vector.size() : a[0].vector.size();
  Matrix m(n, Index(a.size() + b.size()));
  Index c = 0;
  for (const auto& v : a) m.col(c++) = v.vector;
  for (const auto& v : b) m.col(c++) = v.vector;
  return m;
}

}  // namespace

ECSusyQuadruple specialize(const PBPair& pair) { return quadruple_from_pb(pair); }

FamilyPair build_even(const PBFamilies& fam, long m_max) {
  if (m_max < 0 || fam.phi.size() <= size_t(2 * m_max))
    throw std::invalid_argument("build_even: families too short for m_max");
  FamilyPair out;
  for (long m = 0; m <= m_max; ++m) {
    double norm = even_norm(m).value();
    double q = m + 0.25;
    out.phi.push_back({m, Parity::Even, q, norm * fam.phi[2 * m]});
    out.psi.push_back({m, Parity::Even, q, fam.psi[2 * m] / norm});
  }
  return out;
}

FamilyPair build_odd(const PBFamilies& fam, long m_max) {
  if (m_max < 0 || fam.phi.size() <= size_t(2 * m_max + 1))
    throw std::invalid_argument("build_odd: families too short for m_max");
  FamilyPair out;
  for (long m = 0; m <= m_max; ++m) {
    double norm = odd_norm(m).value();
    double q = m + 0.75;
    out.phi.push_back({m, Parity::Odd, q, norm * fam.phi[2 * m + 1]});
    out.psi.push_back({m, Parity::Odd, q, fam.psi[2 * m + 1] / norm});
  }
  return out;
}

std::vector<TableRowCheck> verify_tables(const PBPair& pair, const FamilyPair& even,
                                         const FamilyPair& odd, long m_max, double tol) {
  if (even.phi.size() <= size_t(m_max + 1) || odd.phi.size() <= size_t(m_max + 1))
    throw std::invalid_argument("verify_tables: families must extend one step past m_max");

  Su11Triples triples = build_triples(specialize(pair));
  TruncatedOperator adag = adjoint(pair.a), bdag = adjoint(pair.b);

  auto matrix_for = [&](TableRow row) -> TruncatedOperator {
    switch (row) {
      case TableRow::A: return pair.a;
      case TableRow::B: return pair.b;
      case TableRow::ADag: return adag;
      case TableRow::BDag: return bdag;
      case TableRow::K0: return triples.k.zero;
      case TableRow::KPlus: return triples.k.plus;
      case TableRow::KMinus: return triples.k.minus;
      case TableRow::P0: return triples.p.zero;
      case TableRow::PPlus: return triples.p.plus;
      case TableRow::PMinus: return triples.p.minus;
    }
    throw std::invalid_argument("verify_tables: unknown row");
  };

  auto member = [&](Family f, Parity p, long m) -> const FockVector& {
    const FamilyPair& fp = p == Parity::Even ? even : odd;
    const auto& list = f == Family::Phi ? fp.phi : fp.psi;
    return list.at(size_t(m)).vector;
  };

  std::vector<TableRowCheck> out;
  auto run_row = [&](int table, TableRow row, Parity column) {
    TruncatedOperator op = matrix_for(row);
    Family fam = (row == TableRow::A || row == TableRow::B || row == TableRow::K0 ||
                  row == TableRow::KPlus || row == TableRow::KMinus)
                     ? Family::Phi
                     : Family::Psi;
    double worst = 0.0;
    bool exact_ok = true;
    bool flagged = false;
    for (long m = 0; m <= m_max; ++m) {
      TableEntry entry = table_coefficient(table, row, column, m);
      flagged = flagged || entry.printed_form_inconsistent;
      FockVector applied = op * member(fam, column, m);
      FockVector expected;
      if (entry.target) {
        expected = double(entry.coefficient.convert_to<double>()) *
                   member(entry.target->family, entry.target->parity, entry.target->m);
      } else {
        expected = FockVector::Zero(applied.size());
      }
      worst = std::max(worst, (applied - expected).cwiseAbs().maxCoeff());
      if (derived_table_coefficient(row, column, m) !=
          RadicalRational(entry.coefficient))
        exact_ok = false;
    }
    out.push_back({table, row, column, worst, exact_ok, flagged, worst <= tol && exact_ok});
  };

  for (TableRow row : {TableRow::A, TableRow::B, TableRow::ADag, TableRow::BDag}) {
    run_row(1, row, Parity::Even);
    run_row(1, row, Parity::Odd);
  }
  for (TableRow row : {TableRow::K0, TableRow::KPlus, TableRow::KMinus, TableRow::P0,
                       TableRow::PPlus, TableRow::PMinus}) {
    run_row(2, row, Parity::Even);
    run_row(2, row, Parity::Odd);
  }
  return out;
}

InterleavedFamilies interleave(const FamilyPair& even, const FamilyPair& odd) {
  if (even.phi.size() != odd.phi.size())
    throw std::invalid_argument("interleave: even and odd families must have equal length");
  InterleavedFamilies out;
  for (size_t m = 0; m < even.phi.size(); ++m) {
    out.phi.push_back(even.phi[m].vector);
    out.phi.push_back(odd.phi[m].vector);
    out.xi.push_back(even.psi[m].vector);
    out.xi.push_back(odd.psi[m].vector);
  }
  return out;
}

Rat alt_dual_scale(long m) {
  if (m < 0) throw std::invalid_argument("alt_dual_scale: m must be non-negative");
  Int df = double_factorial(2 * m - 1);
  return Rat(factorial(2 * m), df * df);
}

bool spans_intersect_trivially(const std::vector<IndexedVector>& even,
                               const std::vector<IndexedVector>& odd, double tol) {
  if (even.empty() || odd.empty())
    throw std::invalid_argument("spans_intersect_trivially: empty family");
  Matrix both = stack(even, odd);
  Matrix e = stack(even, {});
  Matrix o = stack(odd, {});
  return rank_of(both, tol) == rank_of(e, tol) + rank_of(o, tol);
}

}  // namespace ecsusy
