#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zerograph/cyc8.hpp"
#include "zerograph/int_poly.hpp"

namespace zerograph {

/// Raised by to_int_poly; degree() names the offending coefficient.
class CoefficientError : public std::runtime_error {
 public:
  CoefficientError(std::size_t degree, const std::string& what)
      : std::runtime_error(what), degree_(degree) {}
  std::size_t degree() const { return degree_; }

 private:
  std::size_t degree_;
};

/// Exact transcription of a Cyc8-coefficient polynomial whose coefficients
/// are all rational integers.
IntPoly to_int_poly(const std::vector<Cyc8>& coeffs);

enum class Property { kRealNegative, kRealNonpositive, kPurelyImaginary, kDeg2Bound };
enum class Verdict { kProven, kRefuted };

std::string_view to_string(Property p);
std::string_view to_string(Verdict v);
Property parse_property(std::string_view name);

/// Half-open interval (lo, hi] with the number of roots it stands for.
struct RootInterval {
  mpq_class lo;
  mpq_class hi;
  int multiplicity = 0;
};

/// Exact root-location verdict.
///
/// real-negative / real-nonpositive, proven: one interval per distinct real
///   root, each isolating it, with its multiplicity; multiplicities sum to
///   the degree. Refuted: the intervals that were counted and a note.
/// purely-imaginary: as above for q(u) = p(sqrt u), i.e. in u = z^2.
/// deg2-bound: the single interval (-1/d2, 0) with its root count (0 when
///   proven), plus isolating intervals of any offending roots.
struct Certificate {
  Property property = Property::kRealNegative;
  Verdict verdict = Verdict::kRefuted;
  std::vector<RootInterval> intervals;
  std::string notes;

  bool proven() const { return verdict == Verdict::kProven; }
};

/// All roots real and < 0 (or <= 0 with allow_zero_root), counted with
/// multiplicity. Throws std::invalid_argument for the zero polynomial.
Certificate certify_real_negative(const IntPoly& p, bool allow_zero_root = false);

/// No root in the open interval (-1/d2, 0). d2 = 0 is accepted only for a
/// constant polynomial.
Certificate certify_deg2_bound(const IntPoly& p, std::uint64_t d2);

/// Only even exponents, and q(u) = p with z^2 -> u has all roots real <= 0.
Certificate certify_purely_imaginary(const IntPoly& p);

/// Re-derives a certificate's claims at its recorded rational endpoints
/// without reusing the square-free splitting: for each interval with claimed
/// multiplicity m, gcd(p, p', ..., p^(m-1)) has exactly one distinct root in
/// it and gcd(p, ..., p^(m)) has none. Returns an empty string when the
/// evidence holds, otherwise the reason it does not.
std::string recheck(const Certificate& c, const IntPoly& p);

}  // namespace zerograph
