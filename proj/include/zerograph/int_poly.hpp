#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace zerograph {

/// Dense univariate polynomial with exact integer coefficients, ascending.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients and
/// degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> ascending);
  IntPoly(std::initializer_list<long> ascending);

  static IntPoly monomial(std::size_t k, const mpz_class& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }

  void add_to(std::size_t k, const mpz_class& c);
  mpz_class evaluate(const mpz_class& z) const;

  IntPoly& operator+=(const IntPoly& other);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

/// Human-readable form, e.g. "1 + 4z + 4z^2"; "0" for the zero polynomial.
std::string to_string(const IntPoly& p);

}  // namespace zerograph
