#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace ecsusy {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using FockVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Dense operator on the first `dim` Fock levels together with a declared
/// bandwidth b: every entry (i, j) with |i - j| > b is exactly zero.
class TruncatedOperator {
 public:
  TruncatedOperator(Matrix entries, Index bandwidth);

  /// Wraps a matrix, scanning for the minimal consistent bandwidth.
  static TruncatedOperator dense(Matrix entries);

  Index dim() const { return entries_.rows(); }
  Index bandwidth() const { return bandwidth_; }
  const Matrix& entries() const { return entries_; }

  FockVector operator*(const FockVector& v) const;

 private:
  Matrix entries_;
  Index bandwidth_;
};

TruncatedOperator identity(Index dim);

/// c0: maps e_n to sqrt(n) e_{n-1}; the top raise is lost to truncation.
TruncatedOperator bosonic_annihilator(Index dim);

TruncatedOperator adjoint(const TruncatedOperator& a);
TruncatedOperator compose(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator commutator(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator inverse(const TruncatedOperator& a);

TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator operator*(Complex s, const TruncatedOperator& a);
TruncatedOperator operator*(const TruncatedOperator& a, const TruncatedOperator& b);

/// Max |A - B| over the leading (dim - guard) block.  Truncation corrupts at
/// most the trailing `guard` rows/columns of an identity whose operands have
/// total bandwidth `guard`, so the leading block is the meaningful part.
double leading_block_residual(const TruncatedOperator& a, const TruncatedOperator& b,
                              Index guard);

double max_abs(const Matrix& m);

/// Orthonormal basis of the numerical kernel: right singular vectors whose
/// singular value falls below tol * sigma_max.
std::vector<FockVector> nullspace(const TruncatedOperator& a, double tol = 1e-10);

double condition_number(const TruncatedOperator& a);

/// Physics convention: conjugate-linear in the first argument.
Complex inner(const FockVector& u, const FockVector& v);

}  // namespace ecsusy
