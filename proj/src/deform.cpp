#include "ecsusy/deform.hpp"

#include <random>
#include <stdexcept>

namespace ecsusy {

namespace {

double uniform01(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

double uniform_pm1(std::mt19937_64& rng) { return 2.0 * uniform01(rng) - 1.0; }

struct RelationSpec {
  const char* name;
  int table;
  TableRow row;
  Parity column;
};

const std::vector<FockVector>& list_for(const TiltedFamilies& fams, Family f, Parity p) {
  if (f == Family::Phi) return p == Parity::Even ? fams.phi : fams.chi;
  return p == Parity::Even ? fams.psi : fams.eta;
}

double relation_residual(const TruncatedOperator& op, const RelationSpec& rel,
                         const TiltedFamilies& fams) {
  Family src_family = (rel.row == TableRow::A || rel.row == TableRow::B ||
                       rel.row == TableRow::K0 || rel.row == TableRow::KPlus ||
                       rel.row == TableRow::KMinus)
                          ? Family::Phi
                          : Family::Psi;
  const auto& src = list_for(fams, src_family, rel.column);
  long m_max = long(src.size()) - 1;
  double worst = 0.0;
  for (long m = 0; m <= m_max; ++m) {
    TableEntry entry = table_coefficient(rel.table, rel.row, rel.column, m);
    if (entry.target && entry.target->m > m_max) continue;
    FockVector applied = op * src[size_t(m)];
    FockVector expected = FockVector::Zero(applied.size());
    if (entry.target) {
      const auto& tgt = list_for(fams, entry.target->family, entry.target->parity);
      expected = entry.coefficient.convert_to<double>() * tgt[size_t(entry.target->m)];
    }
    worst = std::max(worst, (applied - expected).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace

DeformationPair make_deformation(const TruncatedOperator& s, const TruncatedOperator& t,
                                 double condition_cap) {
  if (s.dim() != t.dim()) throw std::invalid_argument("make_deformation: dimension mismatch");
  double cs = condition_number(s), ct = condition_number(t);
  if (!(cs < condition_cap) || !(ct < condition_cap))
    throw std::domain_error("make_deformation: condition number above cap");
  TruncatedOperator si = inverse(s), ti = inverse(t);
  Matrix eye = Matrix::Identity(s.dim(), s.dim());
  double res = std::max(max_abs(s.entries() * si.entries() - eye),
                        max_abs(t.entries() * ti.entries() - eye));
  return {s, t, si, ti, cs, ct, res};
}

ECSusyQuadruple deform_quadruple(const PBPair& base, const DeformationPair& def) {
  if (base.dim() != def.s.dim())
    throw std::invalid_argument("deform_quadruple: dimension mismatch");
  return {compose(compose(def.t, base.b), def.s_inv),
          compose(compose(def.s, base.a), def.t_inv),
          compose(compose(def.t, base.a), def.s_inv),
          compose(compose(def.s, base.b), def.t_inv),
          -1.0, 1.0};
}

Su11Triples tilted_triples(const DeformationPair& def, const Su11Triples& base) {
  auto conjugate = [](const TruncatedOperator& g, const TruncatedOperator& x,
                      const TruncatedOperator& ginv) {
    return compose(compose(g, x), ginv);
  };
  TruncatedOperator t_adj = adjoint(def.t), s_adj = adjoint(def.s);
  TruncatedOperator t_inv_adj = adjoint(def.t_inv), s_inv_adj = adjoint(def.s_inv);
  Su11Triple k{conjugate(def.t, base.k.plus, def.t_inv),
               conjugate(def.t, base.k.minus, def.t_inv),
               conjugate(def.t, base.k.zero, def.t_inv), "k~"};
  Su11Triple l{conjugate(def.s, base.k.plus, def.s_inv),
               conjugate(def.s, base.k.minus, def.s_inv),
               conjugate(def.s, base.k.zero, def.s_inv), "l~"};
  Su11Triple p{conjugate(t_inv_adj, base.p.plus, t_adj),
               conjugate(t_inv_adj, base.p.minus, t_adj),
               conjugate(t_inv_adj, base.p.zero, t_adj), "p~"};
  Su11Triple q{conjugate(s_inv_adj, base.p.plus, s_adj),
               conjugate(s_inv_adj, base.p.minus, s_adj),
               conjugate(s_inv_adj, base.p.zero, s_adj), "q~"};
  return {k, l, p, q};
}

TiltedFamilies tilted_vectors(const DeformationPair& def, const FamilyPair& even,
                              const FamilyPair& odd) {
  TiltedFamilies out;
  TruncatedOperator t_inv_adj = adjoint(def.t_inv), s_inv_adj = adjoint(def.s_inv);
  for (const auto& v : even.phi) out.phi.push_back(def.t * v.vector);
  for (const auto& v : even.psi) out.psi.push_back(t_inv_adj * v.vector);
  for (const auto& v : odd.phi) out.chi.push_back(def.s * v.vector);
  for (const auto& v : odd.psi) out.eta.push_back(s_inv_adj * v.vector);
  return out;
}

std::vector<RelationResidual> verify_tilted_ladder(const Su11Triples& tilted,
                                                   const TiltedFamilies& fams) {
  const RelationSpec specs[] = {
      {"k~+ phi~_m = (m+1/2) phi~_{m+1}", 2, TableRow::KPlus, Parity::Even},
      {"k~- phi~_m = m phi~_{m-1}", 2, TableRow::KMinus, Parity::Even},
      {"p~+ psi~_m = (m+1) psi~_{m+1}", 2, TableRow::PPlus, Parity::Even},
      {"p~- psi~_m = (m-1/2) psi~_{m-1}", 2, TableRow::PMinus, Parity::Even},
      {"l~+ chi~_m = (m+1/2) chi~_{m+1}", 2, TableRow::KPlus, Parity::Odd},
      {"l~- chi~_m = m(2m+1)/(2m-1) chi~_{m-1}", 2, TableRow::KMinus, Parity::Odd},
      {"q~+ eta~_m = (m+1)(2m+3)/(2m+1) eta~_{m+1}", 2, TableRow::PPlus, Parity::Odd},
      {"q~- eta~_m = (m-1/2) eta~_{m-1}", 2, TableRow::PMinus, Parity::Odd},
  };
  auto op_for = [&](const RelationSpec& r) -> const TruncatedOperator& {
    bool plus = r.row == TableRow::KPlus || r.row == TableRow::PPlus;
    bool phi_side = r.row == TableRow::KPlus || r.row == TableRow::KMinus;
    const Su11Triple& t = phi_side ? (r.column == Parity::Even ? tilted.k : tilted.l)
                                   : (r.column == Parity::Even ? tilted.p : tilted.q);
    return plus ? t.plus : t.minus;
  };
  std::vector<RelationResidual> out;
  for (const auto& rel : specs)
    out.push_back({rel.name, relation_residual(op_for(rel), rel, fams)});
  return out;
}

std::vector<RelationResidual> verify_mapping_diagram(const ECSusyQuadruple& quad,
                                                     const TiltedFamilies& fams) {
  struct Mapping {
    const char* name;
    TruncatedOperator op;
    RelationSpec rel;
  };
  const Mapping maps[] = {
      {"s phi~_m = chi~_m", quad.s, {"", 1, TableRow::B, Parity::Even}},
      {"c phi~_m = 2m/(2m-1) chi~_{m-1}", quad.c, {"", 1, TableRow::A, Parity::Even}},
      {"d chi~_m = (2m+1) phi~_{m+1}", quad.d, {"", 1, TableRow::B, Parity::Odd}},
      {"r chi~_m = (2m+1) phi~_m", quad.r, {"", 1, TableRow::A, Parity::Odd}},
      {"r' psi~_m = (2m+1) eta~_m", adjoint(quad.r), {"", 1, TableRow::ADag, Parity::Even}},
      {"d' psi~_m = (2m-1) eta~_{m-1}", adjoint(quad.d), {"", 1, TableRow::BDag, Parity::Even}},
      {"s' eta~_m = psi~_m", adjoint(quad.s), {"", 1, TableRow::BDag, Parity::Odd}},
      {"c' eta~_m = (2m+2)/(2m+1) psi~_{m+1}", adjoint(quad.c),
       {"", 1, TableRow::ADag, Parity::Odd}},
  };
  std::vector<RelationResidual> out;
  for (const auto& m : maps)
    out.push_back({m.name, relation_residual(m.op, m.rel, fams)});
  return out;
}

TruncatedOperator seeded_diagonal(Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m = Matrix::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i) m(i, i) = Complex(0.5 + 1.5 * uniform01(rng), 0.0);
  return TruncatedOperator(std::move(m), 0);
}

TruncatedOperator seeded_parity_block(Index dim, std::uint64_t seed, double strength) {
  std::mt19937_64 rng(seed);
  Matrix m = Matrix::Identity(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index off : {-4, -2, 2, 4}) {
      Index j = i + off;
      if (j < 0 || j >= dim) continue;
      m(i, j) = Complex(strength * 0.25 * uniform_pm1(rng), 0.0);
    }
  return TruncatedOperator(std::move(m), 4);
}

TruncatedOperator seeded_mixing_similarity(Index dim, std::uint64_t seed, double strength) {
  std::mt19937_64 rng(seed);
  Matrix m = Matrix::Identity(dim, dim);
  for (Index i = 0; i + 1 < dim; ++i) m(i, i + 1) = Complex(strength * uniform_pm1(rng), 0.0);
  return TruncatedOperator(std::move(m), 1);
}

FockVector seeded_vector(Index dim, Index support, std::uint64_t seed) {
  if (support < 0 || support > dim)
    throw std::invalid_argument("seeded_vector: support out of range");
  std::mt19937_64 rng(seed);
  FockVector v = FockVector::Zero(dim);
  for (Index i = 0; i < support; ++i) {
    double re = uniform_pm1(rng);
    double im = uniform_pm1(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

}  // namespace ecsusy
