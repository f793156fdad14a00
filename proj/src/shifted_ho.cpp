#include "ecsusy/shifted_ho.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ecsusy/exact.hpp"

namespace ecsusy {

namespace {

void require_resolved(const GridSpec& spec, int n_max, double shift, const char* who) {
  if (!resolves(spec, n_max, shift)) {
    std::ostringstream msg;
    msg << who << ": grid (L=" << spec.half_width << ", M=" << spec.points
        << ") does not resolve e_" << n_max << " shifted by " << shift;
    throw std::domain_error(msg.str());
  }
}

GridFunction derivative(const GridFunction& f) {
  const Index m = f.samples.size();
  const double h = f.spec.spacing();
  GridFunction out{f.spec, Eigen::VectorXcd::Zero(m)};
  for (Index i = 2; i + 2 < m; ++i)
    out.samples(i) = (-f.samples(i + 2) + 8.0 * f.samples(i + 1) - 8.0 * f.samples(i - 1) +
                      f.samples(i - 2)) /
                     (12.0 * h);
  auto one_sided = [&](Index i, int dir) {
    out.samples(i) = double(dir) *
                     (-3.0 * f.samples(i) + 4.0 * f.samples(i + dir) - f.samples(i + 2 * dir)) /
                     (2.0 * h);
  };
  one_sided(0, +1);
  one_sided(1, +1);
  one_sided(m - 2, -1);
  one_sided(m - 1, -1);
  return out;
}

}  // namespace

Complex hermite_polynomial(int n, Complex z) {
  if (n < 0) throw std::invalid_argument("hermite_polynomial: n must be non-negative");
  Complex hm1(0.0), h(1.0);
  for (int k = 0; k < n; ++k) {
    Complex next = 2.0 * z * h - 2.0 * double(k) * hm1;
    hm1 = h;
    h = next;
  }
  return h;
}

Complex hermite_eigenfunction(int n, Complex z) {
  if (n < 0) throw std::invalid_argument("hermite_eigenfunction: n must be non-negative");
  const double pi_quarter = std::pow(std::numbers::pi, -0.25);
  Complex e0 = pi_quarter * std::exp(-z * z / 2.0);
  if (n == 0) return e0;
  Complex em1 = e0;
  Complex e = std::sqrt(2.0) * z * e0;
  for (int k = 1; k < n; ++k) {
    Complex next = z * std::sqrt(2.0 / double(k + 1)) * e -
                   std::sqrt(double(k) / double(k + 1)) * em1;
    em1 = e;
    e = next;
  }
  return e;
}

bool resolves(const GridSpec& spec, int n_max, double shift) {
  if (spec.points < 16 || spec.half_width <= 0.0) return false;
  double reach = std::sqrt(2.0 * n_max + 1.0) + std::abs(shift);
  return spec.half_width >= reach + 3.0 && spec.spacing() * reach <= 0.25;
}

GridSpec default_grid(int n_max, double alpha) {
  double l = std::max(12.0, 4.0 * std::sqrt(2.0 * n_max + 1.0) + 4.0 * std::abs(alpha) + 4.0);
  return {l, 2001};
}

std::vector<GridFunction> hermite_family(int n_max, double shift, const GridSpec& spec) {
  require_resolved(spec, n_max, shift, "hermite_family");
  const Index m = spec.points;
  std::vector<GridFunction> out;
  out.reserve(size_t(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out.push_back({spec, Eigen::VectorXcd::Zero(m)});
  const double pi_quarter = std::pow(std::numbers::pi, -0.25);
  for (Index i = 0; i < m; ++i) {
    Complex z(spec.x(i), -shift);
    Complex em1(0.0), e = pi_quarter * std::exp(-z * z / 2.0);
    out[0].samples(i) = e;
    for (int n = 0; n < n_max; ++n) {
      Complex next = z * std::sqrt(2.0 / double(n + 1)) * e -
                     std::sqrt(double(n) / double(n + 1)) * em1;
      em1 = e;
      e = next;
      out[size_t(n) + 1].samples(i) = e;
    }
  }
  return out;
}

ShiftedFamilies shifted_family(int n_max, double alpha, const GridSpec& spec) {
  return {hermite_family(n_max, alpha, spec), hermite_family(n_max, -alpha, spec)};
}

Complex inner_product(const GridFunction& f, const GridFunction& g) {
  if (f.samples.size() != g.samples.size() ||
      f.spec.half_width != g.spec.half_width)
    throw std::invalid_argument("inner_product: grid mismatch");
  Complex sum = f.samples.dot(g.samples);
  Complex ends = std::conj(f.samples(0)) * g.samples(0) +
                 std::conj(f.samples(f.samples.size() - 1)) * g.samples(g.samples.size() - 1);
  return f.spec.spacing() * (sum - 0.5 * ends);
}

GridFunction apply_pseudo_ladder(const GridFunction& f, double alpha, LadderDirection dir) {
  GridFunction df = derivative(f);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex shift(0.0, -alpha * inv_sqrt2);
  GridFunction out{f.spec, Eigen::VectorXcd::Zero(f.samples.size())};
  double sign = dir == LadderDirection::Lower ? 1.0 : -1.0;
  for (Index i = 0; i < f.samples.size(); ++i)
    out.samples(i) =
        inv_sqrt2 * (f.spec.x(i) * f.samples(i) + sign * df.samples(i)) + shift * f.samples(i);
  return out;
}

double interior_max_abs(const GridFunction& f, Index margin) {
  if (2 * margin >= f.samples.size())
    throw std::invalid_argument("interior_max_abs: margin swallows the grid");
  return f.samples.segment(margin, f.samples.size() - 2 * margin).cwiseAbs().maxCoeff();
}

TiltedGridFamilies tilted_ho_vectors(double alpha, double sigma, double tau, long m_max,
                                     const GridSpec& spec) {
  if (m_max < 0) throw std::invalid_argument("tilted_ho_vectors: m_max must be non-negative");
  int n_top = int(2 * m_max + 1);
  auto even_shift = hermite_family(n_top, alpha + tau, spec);
  auto even_dual = hermite_family(n_top, -(alpha + tau), spec);
  auto odd_shift = hermite_family(n_top, alpha + sigma, spec);
  auto odd_dual = hermite_family(n_top, -(alpha + sigma), spec);
  TiltedGridFamilies out;
  for (long m = 0; m <= m_max; ++m) {
    double en = even_norm(m).value();
    double on = odd_norm(m).value();
    GridFunction phi = even_shift[size_t(2 * m)];
    phi.samples *= en;
    GridFunction psi = even_dual[size_t(2 * m)];
    psi.samples /= en;
    GridFunction chi = odd_shift[size_t(2 * m + 1)];
    chi.samples *= on;
    GridFunction eta = odd_dual[size_t(2 * m + 1)];
    eta.samples /= on;
    out.phi.push_back(std::move(phi));
    out.psi.push_back(std::move(psi));
    out.chi.push_back(std::move(chi));
    out.eta.push_back(std::move(eta));
  }
  return out;
}

FockVector grid_to_fock(const GridFunction& f, const std::vector<GridFunction>& dual) {
  if (dual.empty()) throw std::invalid_argument("grid_to_fock: empty dual family");
  FockVector coords(Index(dual.size()));
  for (size_t n = 0; n < dual.size(); ++n) coords(Index(n)) = inner_product(dual[n], f);
  return coords;
}

std::filesystem::path write_grid_csv(const std::filesystem::path& dir,
                                     const std::string& family, long index, double alpha,
                                     double shift, const GridFunction& f) {
  auto fmt = [](double v) {
    std::ostringstream s;
    s << v;
    return s.str();
  };
  std::filesystem::path file =
      dir / (family + "_" + std::to_string(index) + "_" + fmt(alpha) + "_" + fmt(shift) +
             ".csv");
  std::ofstream out(file);
  if (!out) throw std::runtime_error("write_grid_csv: cannot open " + file.string());
  out.precision(17);
  for (Index i = 0; i < f.samples.size(); ++i)
    out << f.spec.x(i) << "," << f.samples(i).real() << "," << f.samples(i).imag() << "\n";
  return file;
}

}  // namespace ecsusy
