#pragma once

#include <optional>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace ecsusy {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(long n);

/// n!! for n >= -1 with the conventions 0!! = (-1)!! = 1.
Int double_factorial(long n);

/// Splits n > 0 as root^2 * squarefree.  Exact whenever every repeated prime
/// factor of n is at most 65536 or the remainder after small-prime removal is
/// a perfect square; factorial-built inputs always satisfy this.
std::pair<Int, Int> square_free_split(Int n);

/// Exact value q * sqrt(r).  Canonical form: r is a squarefree positive
/// integer (any rational part of a radicand is folded into q), and q = 0
/// forces r = 1.  Equality of values is equality of fields.
class RadicalRational {
 public:
  RadicalRational() : coeff_(0), radicand_(1) {}
  explicit RadicalRational(Rat q) : coeff_(std::move(q)), radicand_(1) { normalize(); }
  RadicalRational(long num, long den) : coeff_(Rat(num, den)), radicand_(1) { normalize(); }

  static RadicalRational sqrt_of(const Rat& r);
  static RadicalRational make(const Rat& q, const Rat& r);

  const Rat& coeff() const { return coeff_; }
  const Int& radicand() const { return radicand_; }
  bool is_zero() const { return coeff_ == 0; }
  bool is_rational() const { return radicand_ == 1; }

  double value() const;

  RadicalRational operator*(const RadicalRational& o) const;
  RadicalRational operator/(const RadicalRational& o) const;
  RadicalRational operator-() const;
  bool operator==(const RadicalRational& o) const = default;

 private:
  Rat coeff_;
  Int radicand_;
  void normalize();
};

/// sqrt((2m)!) / (2m-1)!!, the even-family normalization.
RadicalRational even_norm(long m);

/// sqrt((2m+1)!) / (2m-1)!!, the odd-family normalization.
RadicalRational odd_norm(long m);

enum class Family { Phi, Psi };
enum class Parity { Even, Odd };

enum class TableRow { A, B, ADag, BDag, K0, KPlus, KMinus, P0, PPlus, PMinus };

struct TableTarget {
  Family family;
  Parity parity;
  long m;
  bool operator==(const TableTarget&) const = default;
};

struct TableEntry {
  Rat coefficient;
  std::optional<TableTarget> target;  // empty: the action annihilates
  bool printed_form_inconsistent = false;
};

/// Closed-form ladder coefficient of `row` acting on the (column, m) family
/// member.  Table 1 holds the four pseudo-boson operators, Table 2 the six
/// su(1,1) generators.  Lowering past the bottom of a family yields a zero
/// entry with no target.  Two Table-1 entries are flagged: their consistent
/// form (returned here) disagrees with the printed one.
TableEntry table_coefficient(int table, TableRow row, Parity column, long m);

/// Same coefficient derived independently from the Fock-level ladder factors
/// and the family normalizations, in exact radical arithmetic.  Must equal
/// table_coefficient(...).coefficient exactly.
RadicalRational derived_table_coefficient(TableRow row, Parity column, long m);

/// Normalization relating family member (family, parity, m) to its Fock
/// vector: phi members carry even_norm/odd_norm, psi members the inverse.
RadicalRational family_norm(Family family, Parity parity, long m);

}  // namespace ecsusy
