#include "ecsusy/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ecsusy {

namespace {

Index minimal_bandwidth(const Matrix& m) {
  Index b = 0;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Complex(0.0, 0.0)) b = std::max(b, std::abs(i - j));
  return b;
}

Index clamp_band(Index sum, Index dim) { return std::min(sum, dim); }

}  // namespace

TruncatedOperator::TruncatedOperator(Matrix entries, Index bandwidth)
    : entries_(std::move(entries)), bandwidth_(bandwidth) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols())
    throw std::invalid_argument("TruncatedOperator: matrix must be square and non-empty");
  if (bandwidth_ < 0 || bandwidth_ > dim())
    throw std::invalid_argument("TruncatedOperator: bandwidth out of range");
  if (!entries_.allFinite())
    throw std::invalid_argument("TruncatedOperator: entries must be finite");
  for (Index i = 0; i < dim(); ++i)
    for (Index j = 0; j < dim(); ++j)
      if (std::abs(i - j) > bandwidth_ && entries_(i, j) != Complex(0.0, 0.0))
        throw std::invalid_argument("TruncatedOperator: nonzero entry outside declared band");
}

TruncatedOperator TruncatedOperator::dense(Matrix entries) {
  Index b = minimal_bandwidth(entries);
  return TruncatedOperator(std::move(entries), b);
}

FockVector TruncatedOperator::operator*(const FockVector& v) const {
  if (v.size() != dim()) throw std::invalid_argument("apply: dimension mismatch");
  return entries_ * v;
}

TruncatedOperator identity(Index dim) {
  if (dim < 1) throw std::invalid_argument("identity: dim must be positive");
  return TruncatedOperator(Matrix::Identity(dim, dim), 0);
}

TruncatedOperator bosonic_annihilator(Index dim) {
  if (dim < 1) throw std::invalid_argument("bosonic_annihilator: dim must be positive");
  Matrix m = Matrix::Zero(dim, dim);
  for (Index n = 1; n < dim; ++n) m(n - 1, n) = std::sqrt(double(n));
  return TruncatedOperator(std::move(m), dim > 1 ? 1 : 0);
}

TruncatedOperator adjoint(const TruncatedOperator& a) {
  return TruncatedOperator(a.entries().adjoint(), a.bandwidth());
}

TruncatedOperator compose(const TruncatedOperator& a, const TruncatedOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("compose: dimension mismatch");
  return TruncatedOperator(a.entries() * b.entries(),
                           clamp_band(a.bandwidth() + b.bandwidth(), a.dim()));
}

TruncatedOperator commutator(const TruncatedOperator& a, const TruncatedOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("commutator: dimension mismatch");
  return TruncatedOperator(a.entries() * b.entries() - b.entries() * a.entries(),
                           clamp_band(a.bandwidth() + b.bandwidth(), a.dim()));
}

TruncatedOperator inverse(const TruncatedOperator& a) {
  Eigen::PartialPivLU<Matrix> lu(a.entries());
  Matrix inv = lu.inverse();
  if (!inv.allFinite() ||
      max_abs(a.entries() * inv - Matrix::Identity(a.dim(), a.dim())) > 1e-6)
    throw std::domain_error("inverse: operator is numerically singular");
  return TruncatedOperator::dense(std::move(inv));
}

TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator+: dimension mismatch");
  return TruncatedOperator(a.entries() + b.entries(),
                           std::max(a.bandwidth(), b.bandwidth()));
}

TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operator-: dimension mismatch");
  return TruncatedOperator(a.entries() - b.entries(),
                           std::max(a.bandwidth(), b.bandwidth()));
}

TruncatedOperator operator*(Complex s, const TruncatedOperator& a) {
  return TruncatedOperator(s * a.entries(), a.bandwidth());
}

TruncatedOperator operator*(const TruncatedOperator& a, const TruncatedOperator& b) {
  return compose(a, b);
}

double leading_block_residual(const TruncatedOperator& a, const TruncatedOperator& b,
                              Index guard) {
  if (a.dim() != b.dim()) throw std::invalid_argument("leading_block_residual: dimension mismatch");
  if (guard < 0 || guard >= a.dim())
    throw std::invalid_argument("leading_block_residual: guard must be in [0, dim)");
  Index k = a.dim() - guard;
  return max_abs(a.entries().topLeftCorner(k, k) - b.entries().topLeftCorner(k, k));
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

std::vector<FockVector> nullspace(const TruncatedOperator& a, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("nullspace: tol must be positive");
  Eigen::JacobiSVD<Matrix> svd(a.entries(), Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() > 0 ? sv(0) : 0.0;
  std::vector<FockVector> kernel;
  for (Index i = 0; i < sv.size(); ++i)
    if (smax == 0.0 || sv(i) < tol * smax) kernel.push_back(svd.matrixV().col(i));
  return kernel;
}

double condition_number(const TruncatedOperator& a) {
  Eigen::JacobiSVD<Matrix> svd(a.entries());
  const auto& sv = svd.singularValues();
  double smin = sv(sv.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smin;
}

Complex inner(const FockVector& u, const FockVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("inner: dimension mismatch");
  return u.dot(v);
}

}  // namespace ecsusy
