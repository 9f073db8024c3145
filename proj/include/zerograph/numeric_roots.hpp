#pragma once

#include <complex>
#include <vector>

#include "zerograph/int_poly.hpp"

namespace zerograph {

struct NumericRoot {
  std::complex<double> value;
  double residual = 0.0;  // |p(value)| evaluated in extended precision
};

struct NumericRoots {
  std::vector<NumericRoot> roots;  // degree-many, repeated by multiplicity
  bool converged = true;
  int iterations = 0;  // worst case over the square-free factors
};

inline constexpr int kMaxAberthIterations = 500;

/// Aberth-Ehrlich simultaneous iteration, run separately on each exact
/// square-free factor so repeated roots come out at full precision.
/// Starting points lie on the circle of radius equal to the factor's Cauchy
/// bound at angles 2*pi*k/n + 0.4. Stops when the largest correction is
/// below tol; otherwise returns after kMaxAberthIterations with
/// converged = false. Roots are sorted by (real, imag).
/// Throws std::invalid_argument for degree < 1.
NumericRoots numeric_roots(const IntPoly& p, double tol = 1e-12);

struct HalfPlaneReport {
  bool all_negative = true;
  double max_real_part = 0.0;  // -inf when there are no roots
  NumericRoots roots;
};

/// Numeric check that every root has real part < -tol. Not a certificate.
/// A constant polynomial passes vacuously.
HalfPlaneReport check_halfplane_negative(const IntPoly& p, double tol = 1e-9);

}  // namespace zerograph
