#include "ecsusy/exact.hpp"

#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace ecsusy {

namespace {

using Float = boost::multiprecision::cpp_bin_float_50;

const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    constexpr uint32_t limit = 65536;
    std::vector<bool> composite(limit + 1, false);
    std::vector<uint32_t> out;
    for (uint32_t p = 2; p <= limit; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (uint64_t q = uint64_t(p) * p; q <= limit; q += p) composite[q] = true;
    }
    return out;
  }();
  return primes;
}

}  // namespace

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be non-negative");
  Int r = 1;
  for (long k = 2; k <= n; ++k) r *= k;
  return r;
}

Int double_factorial(long n) {
  if (n < -1) throw std::invalid_argument("double_factorial: n must be at least -1");
  Int r = 1;
  for (long k = n; k > 1; k -= 2) r *= k;
  return r;
}

std::pair<Int, Int> square_free_split(Int n) {
  if (n <= 0) throw std::invalid_argument("square_free_split: n must be positive");
  Int root = 1, free = 1;
  for (uint32_t p : small_primes()) {
    if (n == 1) break;
    if (Int(p) * p > n) break;
    unsigned mult = 0;
    while (n % p == 0) {
      n /= p;
      ++mult;
    }
    for (unsigned i = 0; i < mult / 2; ++i) root *= p;
    if (mult % 2) free *= p;
  }
  if (n > 1) {
    Int s = boost::multiprecision::sqrt(n);
    if (s * s == n)
      root *= s;
    else
      free *= n;
  }
  return {root, free};
}

void RadicalRational::normalize() {
  if (coeff_ == 0) radicand_ = 1;
}

RadicalRational RadicalRational::sqrt_of(const Rat& r) {
  if (r < 0) throw std::domain_error("RadicalRational: negative radicand");
  if (r == 0) return RadicalRational();
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  // sqrt(num/den) = sqrt(num * den) / den
  auto [root, free] = square_free_split(num * den);
  RadicalRational out;
  out.coeff_ = Rat(root, den);
  out.radicand_ = free;
  out.normalize();
  return out;
}

RadicalRational RadicalRational::make(const Rat& q, const Rat& r) {
  RadicalRational s = sqrt_of(r);
  s.coeff_ *= q;
  s.normalize();
  return s;
}

double RadicalRational::value() const {
  Float v = Float(boost::multiprecision::numerator(coeff_)) /
            Float(boost::multiprecision::denominator(coeff_)) *
            boost::multiprecision::sqrt(Float(radicand_));
  return v.convert_to<double>();
}

RadicalRational RadicalRational::operator*(const RadicalRational& o) const {
  RadicalRational out;
  Int g = boost::multiprecision::gcd(radicand_, o.radicand_);
  out.coeff_ = coeff_ * o.coeff_ * Rat(g);
  out.radicand_ = (radicand_ / g) * (o.radicand_ / g);
  out.normalize();
  return out;
}

RadicalRational RadicalRational::operator/(const RadicalRational& o) const {
  if (o.is_zero()) throw std::domain_error("RadicalRational: division by zero");
  // 1 / (q sqrt(R)) = (1 / (q R)) sqrt(R)
  RadicalRational inv;
  inv.coeff_ = Rat(1) / (o.coeff_ * Rat(o.radicand_));
  inv.radicand_ = o.radicand_;
  return *this * inv;
}

RadicalRational RadicalRational::operator-() const {
  RadicalRational out = *this;
  out.coeff_ = -out.coeff_;
  return out;
}

RadicalRational even_norm(long m) {
  if (m < 0) throw std::invalid_argument("even_norm: m must be non-negative");
  return RadicalRational::sqrt_of(Rat(factorial(2 * m))) /
         RadicalRational(Rat(double_factorial(2 * m - 1)));
}

RadicalRational odd_norm(long m) {
  if (m < 0) throw std::invalid_argument("odd_norm: m must be non-negative");
  return RadicalRational::sqrt_of(Rat(factorial(2 * m + 1))) /
         RadicalRational(Rat(double_factorial(2 * m - 1)));
}

RadicalRational family_norm(Family family, Parity parity, long m) {
  RadicalRational n = parity == Parity::Even ? even_norm(m) : odd_norm(m);
  if (family == Family::Psi) return RadicalRational(Rat(1)) / n;
  return n;
}

namespace {

struct RowAction {
  Family family;  // which family the row acts on
  long step;      // Fock-index shift
};

RowAction row_action(TableRow row) {
  switch (row) {
    case TableRow::A: return {Family::Phi, -1};
    case TableRow::B: return {Family::Phi, +1};
    case TableRow::ADag: return {Family::Psi, +1};
    case TableRow::BDag: return {Family::Psi, -1};
    case TableRow::K0: return {Family::Phi, 0};
    case TableRow::KPlus: return {Family::Phi, +2};
    case TableRow::KMinus: return {Family::Phi, -2};
    case TableRow::P0: return {Family::Psi, 0};
    case TableRow::PPlus: return {Family::Psi, +2};
    case TableRow::PMinus: return {Family::Psi, -2};
  }
  throw std::invalid_argument("row_action: unknown row");
}

// Fock-level factor of the row's operator mapping e_n to e_{n+step}.
RadicalRational fock_factor(TableRow row, long n) {
  switch (row) {
    case TableRow::A:
    case TableRow::BDag:
      return RadicalRational::sqrt_of(Rat(n));
    case TableRow::B:
    case TableRow::ADag:
      return RadicalRational::sqrt_of(Rat(n + 1));
    case TableRow::K0:
    case TableRow::P0:
      return RadicalRational(Rat(2 * n + 1, 4));
    case TableRow::KPlus:
    case TableRow::PPlus:
      return RadicalRational::make(Rat(1, 2), Rat((n + 1) * (n + 2)));
    case TableRow::KMinus:
    case TableRow::PMinus:
      return RadicalRational::make(Rat(1, 2), Rat(n * (n - 1)));
  }
  throw std::invalid_argument("fock_factor: unknown row");
}

bool in_table(int table, TableRow row) {
  bool t1 = row == TableRow::A || row == TableRow::B || row == TableRow::ADag ||
            row == TableRow::BDag;
  return table == 1 ? t1 : !t1;
}

}  // namespace

TableEntry table_coefficient(int table, TableRow row, Parity column, long m) {
  if (table != 1 && table != 2) throw std::invalid_argument("table_coefficient: table must be 1 or 2");
  if (!in_table(table, row)) throw std::invalid_argument("table_coefficient: row not in table");
  if (m < 0) throw std::invalid_argument("table_coefficient: m must be non-negative");

  const bool even = column == Parity::Even;
  TableEntry e;
  auto zero = [&] {
    e.coefficient = 0;
    e.target.reset();
    return e;
  };
  auto set = [&](Rat c, Family f, Parity p, long mt) {
    e.coefficient = std::move(c);
    e.target = TableTarget{f, p, mt};
    return e;
  };

  switch (row) {
    case TableRow::A:
      if (even) return m == 0 ? zero() : set(Rat(2 * m, 2 * m - 1), Family::Phi, Parity::Odd, m - 1);
      return set(Rat(2 * m + 1), Family::Phi, Parity::Even, m);
    case TableRow::B:
      if (even) return set(Rat(1), Family::Phi, Parity::Odd, m);
      return set(Rat(2 * m + 1), Family::Phi, Parity::Even, m + 1);
    case TableRow::ADag:
      if (even) return set(Rat(2 * m + 1), Family::Psi, Parity::Odd, m);
      // Printed target family is inconsistent with the dual ladder; the
      // consistent target is the psi family.
      e = set(Rat(2 * m + 2, 2 * m + 1), Family::Psi, Parity::Even, m + 1);
      e.printed_form_inconsistent = true;
      return e;
    case TableRow::BDag:
      if (even) {
        // Printed intermediate Fock index is inconsistent (2m+1 for 2m-1);
        // the consistent final form is kept.
        if (m == 0) return zero();
        e = set(Rat(2 * m - 1), Family::Psi, Parity::Odd, m - 1);
        e.printed_form_inconsistent = true;
        return e;
      }
      return set(Rat(1), Family::Psi, Parity::Even, m);
    case TableRow::K0:
      return set(even ? Rat(4 * m + 1, 4) : Rat(4 * m + 3, 4), Family::Phi, column, m);
    case TableRow::KPlus:
      return set(Rat(2 * m + 1, 2), Family::Phi, column, m + 1);
    case TableRow::KMinus:
      if (m == 0) return zero();
      if (even) return set(Rat(m), Family::Phi, column, m - 1);
      return set(Rat(m * (2 * m + 1), 2 * m - 1), Family::Phi, column, m - 1);
    case TableRow::P0:
      return set(even ? Rat(4 * m + 1, 4) : Rat(4 * m + 3, 4), Family::Psi, column, m);
    case TableRow::PPlus:
      if (even) return set(Rat(m + 1), Family::Psi, column, m + 1);
      return set(Rat((m + 1) * (2 * m + 3), 2 * m + 1), Family::Psi, column, m + 1);
    case TableRow::PMinus:
      if (m == 0) return zero();
      return set(Rat(2 * m - 1, 2), Family::Psi, column, m - 1);
  }
  throw std::invalid_argument("table_coefficient: unknown row");
}

RadicalRational derived_table_coefficient(TableRow row, Parity column, long m) {
  if (m < 0) throw std::invalid_argument("derived_table_coefficient: m must be non-negative");
  RowAction act = row_action(row);
  long n_src = column == Parity::Even ? 2 * m : 2 * m + 1;
  long n_tgt = n_src + act.step;
  if (n_tgt < 0) return RadicalRational();
  RadicalRational factor = fock_factor(row, n_src);
  if (factor.is_zero()) return RadicalRational();
  Parity tgt_parity = n_tgt % 2 == 0 ? Parity::Even : Parity::Odd;
  long tgt_m = n_tgt / 2;
  return family_norm(act.family, column, m) * factor /
         family_norm(act.family, tgt_parity, tgt_m);
}

}  // namespace ecsusy
