#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "zerograph/int_poly.hpp"

namespace zerograph {

/// Dense polynomial over Q, ascending, trailing zeros trimmed.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> ascending);
  explicit QPoly(const IntPoly& p);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  const mpq_class& lead() const { return c_.back(); }

  QPoly derivative() const;
  mpq_class evaluate(const mpq_class& x) const;
  /// Sign at +infinity (positive = true) or -infinity.
  int sign_at_infinity(bool positive) const;
  /// Scaled by a positive rational so that |lead| = 1.
  QPoly normalized() const;
  /// Primitive integer multiple with positive leading coefficient.
  IntPoly to_primitive_int() const;

  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Quotient and remainder of a / b (b nonzero).
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(QPoly a, QPoly b);

struct SquareFreeFactor {
  IntPoly factor;  // primitive, positive leading coefficient, degree >= 1
  int multiplicity = 0;
};

/// Yun's algorithm: p = c * prod factor^multiplicity with pairwise coprime,
/// square-free factors. Empty for constant p.
std::vector<SquareFreeFactor> square_free_decomposition(const IntPoly& p);

/// A real endpoint that may be -infinity or +infinity.
struct Endpoint {
  enum class Kind { kFinite, kNegInf, kPosInf };
  Kind kind = Kind::kFinite;
  mpq_class value = 0;

  static Endpoint at(const mpq_class& v) { return {Kind::kFinite, v}; }
  static Endpoint neg_inf() { return {Kind::kNegInf, 0}; }
  static Endpoint pos_inf() { return {Kind::kPosInf, 0}; }
};

/// Sturm sequence of a square-free polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const QPoly& square_free);

  /// Sign variations at x, zeros skipped.
  std::size_t variations(const Endpoint& x) const;
  /// Distinct roots in (lo, hi]; zero when hi <= lo.
  std::size_t count(const Endpoint& lo, const Endpoint& hi) const;

  const QPoly& base() const { return seq_.front(); }

 private:
  std::vector<QPoly> seq_;
};

/// Square-free part p / gcd(p, p').
QPoly square_free_part(const IntPoly& p);

/// Number of distinct real roots of p in (lo, hi]. Throws
/// std::invalid_argument for the zero polynomial.
std::size_t sturm_count(const IntPoly& p, const Endpoint& lo, const Endpoint& hi);

/// Integer B with every complex root of p strictly inside |z| < B.
mpz_class root_bound(const IntPoly& p);

/// Disjoint intervals (lo, hi], each holding exactly one distinct real root
/// of the square-free polynomial behind seq, covering every root in
/// (lo, hi]. Ascending.
std::vector<std::pair<mpq_class, mpq_class>> isolate_roots(const SturmSequence& seq,
                                                            const mpq_class& lo,
                                                            const mpq_class& hi);

}  // namespace zerograph
