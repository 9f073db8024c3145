#include "zerograph/numeric_roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "zerograph/sturm.hpp"

namespace zerograph {

namespace {

using Cx = std::complex<long double>;

long double to_ld(const mpz_class& z) {
  // mpz -> long double via the decimal string keeps 64-bit mantissa precision
  return std::stold(z.get_str());
}

std::vector<long double> to_ld(const IntPoly& p) {
  std::vector<long double> out;
  for (const auto& c : p.coeffs()) out.push_back(to_ld(c));
  return out;
}

// Horner for value and derivative.
std::pair<Cx, Cx> eval_with_derivative(const std::vector<long double>& c, Cx z) {
  Cx value = 0, deriv = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    deriv = deriv * z + value;
    value = value * z + *it;
  }
  return {value, deriv};
}

// Roots of a square-free factor; returns the iteration count (negative when
// the cap was hit).
int aberth(const IntPoly& factor, double tol, std::vector<Cx>& roots) {
  const auto c = to_ld(factor);
  const std::size_t n = c.size() - 1;
  roots.clear();
  if (n == 1) {
    roots.emplace_back(-c[0] / c[1], 0.0L);
    return 0;
  }
  const long double radius = to_ld(root_bound(factor));
  for (std::size_t k = 0; k < n; ++k) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                                  static_cast<long double>(n) +
                              0.4L;
    roots.push_back(std::polar(radius, angle));
  }

  for (int iter = 1; iter <= kMaxAberthIterations; ++iter) {
    long double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      auto [value, deriv] = eval_with_derivative(c, roots[k]);
      if (value == Cx(0)) continue;
      const Cx ratio = value / deriv;
      Cx repulsion = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) repulsion += 1.0L / (roots[k] - roots[j]);
      }
      const Cx step = ratio / (1.0L - ratio * repulsion);
      roots[k] -= step;
      worst = std::max(worst, std::abs(step));
    }
    if (worst < tol) {
      // a final Newton pass on each simple root
      for (auto& r : roots) {
        auto [value, deriv] = eval_with_derivative(c, r);
        if (deriv != Cx(0)) r -= value / deriv;
      }
      return iter;
    }
  }
  return -kMaxAberthIterations;
}

}  // namespace

NumericRoots numeric_roots(const IntPoly& p, double tol) {
  if (p.degree() < 1) throw std::invalid_argument("numeric_roots: degree must be at least 1");
  NumericRoots out;
  const auto coeffs = to_ld(p);
  std::vector<Cx> found;
  for (const auto& f : square_free_decomposition(p)) {
    const int iters = aberth(f.factor, tol, found);
    if (iters < 0) out.converged = false;
    out.iterations = std::max(out.iterations, std::abs(iters));
    for (const Cx& r : found) {
      const long double residual = std::abs(eval_with_derivative(coeffs, r).first);
      for (int m = 0; m < f.multiplicity; ++m) {
        out.roots.push_back(NumericRoot{
            {static_cast<double>(r.real()), static_cast<double>(r.imag())},
            static_cast<double>(residual)});
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const NumericRoot& a, const NumericRoot& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

HalfPlaneReport check_halfplane_negative(const IntPoly& p, double tol) {
  HalfPlaneReport report;
  report.max_real_part = -std::numeric_limits<double>::infinity();
  if (p.degree() < 1) return report;
  report.roots = numeric_roots(p, tol);
  for (const auto& r : report.roots.roots) {
    report.max_real_part = std::max(report.max_real_part, r.value.real());
  }
  report.all_negative = report.roots.converged && report.max_real_part < -tol;
  return report;
}

}  // namespace zerograph
