#include "zerograph/certify.hpp"

#include <algorithm>

#include "zerograph/sturm.hpp"

namespace zerograph {

namespace {

struct RootInfo {
  RootInterval interval;
  bool is_zero_root = false;
};

// Every distinct real root of p with an isolating interval and multiplicity.
// Intervals are pairwise disjoint, ascending, and never straddle 0: the
// search runs on (-B, 0] and (0, B] separately.
std::vector<RootInfo> real_roots(const IntPoly& p) {
  std::vector<RootInfo> out;
  if (p.degree() < 1) return out;
  const mpq_class bound(root_bound(p));
  const SturmSequence all(square_free_part(p));
  std::vector<std::pair<SturmSequence, int>> factors;
  for (const auto& f : square_free_decomposition(p)) {
    factors.emplace_back(SturmSequence(QPoly(f.factor)), f.multiplicity);
  }

  auto intervals = isolate_roots(all, -bound, 0);
  auto positive = isolate_roots(all, 0, bound);
  intervals.insert(intervals.end(), positive.begin(), positive.end());

  for (const auto& [lo, hi] : intervals) {
    RootInfo info;
    info.interval.lo = lo;
    info.interval.hi = hi;
    for (const auto& [seq, mult] : factors) {
      if (seq.count(Endpoint::at(lo), Endpoint::at(hi)) == 1) {
        info.interval.multiplicity = mult;
        break;
      }
    }
    info.is_zero_root = hi == 0 && p.coeff(0) == 0;
    out.push_back(std::move(info));
  }
  return out;
}

std::string count_note(int in_region, int degree, const char* region) {
  return std::to_string(in_region) + " of " + std::to_string(degree) +
         " roots (with multiplicity) are real and " + region;
}

}  // namespace

IntPoly to_int_poly(const std::vector<Cyc8>& coeffs) {
  std::vector<mpz_class> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_rational()) {
      throw CoefficientError(k, "coefficient of z^" + std::to_string(k) + " is not rational: " +
                                    to_string(coeffs[k]));
    }
    if (!coeffs[k].is_integer()) {
      throw CoefficientError(k, "coefficient of z^" + std::to_string(k) + " is not an integer: " +
                                    to_string(coeffs[k]));
    }
    out.push_back(coeffs[k].coord(0).get_num());
  }
  return IntPoly(std::move(out));
}

std::string_view to_string(Property p) {
  switch (p) {
    case Property::kRealNegative: return "real-negative";
    case Property::kRealNonpositive: return "real-nonpositive";
    case Property::kPurelyImaginary: return "purely-imaginary";
    case Property::kDeg2Bound: return "deg2-bound";
  }
  return "?";
}

std::string_view to_string(Verdict v) { return v == Verdict::kProven ? "proven" : "refuted"; }

Property parse_property(std::string_view name) {
  if (name == "real-negative") return Property::kRealNegative;
  if (name == "real-nonpositive") return Property::kRealNonpositive;
  if (name == "purely-imaginary" || name == "imaginary") return Property::kPurelyImaginary;
  if (name == "deg2-bound" || name == "deg2") return Property::kDeg2Bound;
  throw std::invalid_argument("unknown property '" + std::string(name) + "'");
}

Certificate certify_real_negative(const IntPoly& p, bool allow_zero_root) {
  if (p.is_zero()) throw std::invalid_argument("certify_real_negative: identically zero polynomial");
  Certificate cert;
  cert.property = allow_zero_root ? Property::kRealNonpositive : Property::kRealNegative;
  const char* region = allow_zero_root ? "<= 0" : "< 0";
  if (p.degree() == 0) {
    cert.verdict = Verdict::kProven;
    cert.notes = "constant polynomial: no roots";
    return cert;
  }

  int in_region = 0;
  std::vector<RootInterval> inside, outside;
  for (const auto& r : real_roots(p)) {
    const bool ok = r.interval.hi <= 0 && (allow_zero_root || !r.is_zero_root);
    if (ok) {
      in_region += r.interval.multiplicity;
      inside.push_back(r.interval);
    } else {
      outside.push_back(r.interval);
    }
  }

  cert.notes = count_note(in_region, p.degree(), region);
  if (in_region == p.degree()) {
    cert.verdict = Verdict::kProven;
    cert.intervals = std::move(inside);
    return cert;
  }
  cert.verdict = Verdict::kRefuted;
  if (!outside.empty()) {
    cert.intervals = std::move(outside);
    cert.notes += "; listed intervals hold real roots outside the region";
  } else {
    cert.intervals = std::move(inside);
    cert.notes += "; the remaining " + std::to_string(p.degree() - in_region) +
                  " roots are not real";
  }
  return cert;
}

Certificate certify_deg2_bound(const IntPoly& p, std::uint64_t d2) {
  if (p.is_zero()) throw std::invalid_argument("certify_deg2_bound: identically zero polynomial");
  Certificate cert;
  cert.property = Property::kDeg2Bound;
  if (d2 == 0) {
    if (p.degree() != 0) {
      throw std::invalid_argument("certify_deg2_bound: deg2 = 0 requires a constant polynomial");
    }
    cert.verdict = Verdict::kProven;
    cert.notes = "deg2 = 0: arcless graph, constant polynomial, bound holds vacuously";
    return cert;
  }

  const mpq_class lo(mpz_class(-1), mpz_class(static_cast<unsigned long>(d2)));
  std::size_t count = 0;
  std::vector<RootInterval> offending;
  if (p.degree() >= 1) {
    const SturmSequence seq(square_free_part(p));
    const bool zero_root = p.coeff(0) == 0;
    count = seq.count(Endpoint::at(lo), Endpoint::at(0)) - (zero_root ? 1 : 0);
    if (count > 0) {
      for (const auto& r : real_roots(p)) {
        if (r.interval.lo >= lo && r.interval.hi <= 0 && !r.is_zero_root) {
          offending.push_back(r.interval);
        }
      }
    }
  }
  cert.intervals.push_back(RootInterval{lo, 0, static_cast<int>(count)});
  cert.intervals.insert(cert.intervals.end(), offending.begin(), offending.end());
  cert.verdict = count == 0 ? Verdict::kProven : Verdict::kRefuted;
  cert.notes = std::to_string(count) + " distinct roots in the open interval (" + lo.get_str() +
               ", 0)";
  return cert;
}

Certificate certify_purely_imaginary(const IntPoly& p) {
  if (p.is_zero()) {
    throw std::invalid_argument("certify_purely_imaginary: identically zero polynomial");
  }
  Certificate cert;
  cert.property = Property::kPurelyImaginary;
  std::vector<mpz_class> q;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k % 2 == 1) {
      if (p.coeffs()[k] != 0) {
        cert.verdict = Verdict::kRefuted;
        cert.notes = "odd exponent " + std::to_string(k) + " has a nonzero coefficient";
        return cert;
      }
    } else {
      q.push_back(p.coeffs()[k]);
    }
  }

  const IntPoly qu(std::move(q));
  Certificate inner = certify_real_negative(qu, true);
  cert.verdict = inner.verdict;
  cert.intervals = std::move(inner.intervals);
  cert.notes = "intervals are in u = z^2; q(u) = " + to_string(qu) + ": " + inner.notes;
  if (cert.proven()) {
    cert.notes += "; every root of p is +-i*sqrt(-u)";
    if (qu.coeff(0) == 0) {
      std::size_t k = 0;
      while (qu.coeff(k) == 0) ++k;
      cert.notes += "; z = 0 is a root of multiplicity " + std::to_string(2 * k) +
                    " (counted as imaginary)";
    }
  }
  return cert;
}

std::string recheck(const Certificate& c, const IntPoly& p) {
  if (p.is_zero()) return "polynomial is identically zero";

  IntPoly target = p;
  if (c.property == Property::kPurelyImaginary) {
    std::vector<mpz_class> q;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
      if (k % 2 == 1 && p.coeffs()[k] != 0) {
        return c.proven() ? "odd exponent present" : "";
      }
      if (k % 2 == 0) q.push_back(p.coeffs()[k]);
    }
    target = IntPoly(std::move(q));
  }

  // gcd of the first `order` derivatives
  auto derivative_gcd = [&](int order) {
    QPoly f(target);
    QPoly g = f;
    for (int k = 1; k < order; ++k) {
      f = f.derivative();
      g = gcd(g, f);
    }
    return g;
  };
  auto distinct_in = [](const QPoly& g, const RootInterval& iv) -> std::size_t {
    if (g.degree() < 1) return 0;
    const QPoly sf = divmod(g, gcd(g, g.derivative())).first;
    return SturmSequence(sf).count(Endpoint::at(iv.lo), Endpoint::at(iv.hi));
  };

  std::size_t first = 0;
  if (c.property == Property::kDeg2Bound) {
    if (c.intervals.empty()) return target.degree() == 0 ? "" : "missing deg2 interval";
    const RootInterval& open = c.intervals.front();
    std::size_t n = distinct_in(QPoly(target), open);
    if (target.coeff(0) == 0 && open.hi == 0) --n;
    if (static_cast<int>(n) != open.multiplicity) return "deg2 interval count does not match";
    if (c.proven() != (n == 0)) return "deg2 verdict does not match the count";
    first = 1;
  }

  int total = 0;
  for (std::size_t k = first; k < c.intervals.size(); ++k) {
    const RootInterval& iv = c.intervals[k];
    if (iv.multiplicity < 1) continue;
    if (distinct_in(derivative_gcd(iv.multiplicity), iv) != 1) {
      return "interval (" + iv.lo.get_str() + ", " + iv.hi.get_str() +
             "] lacks a root of the claimed multiplicity";
    }
    if (distinct_in(derivative_gcd(iv.multiplicity + 1), iv) != 0) {
      return "interval (" + iv.lo.get_str() + ", " + iv.hi.get_str() +
             "] holds a root of higher multiplicity";
    }
    if (k > first && c.intervals[k - 1].hi > iv.lo) return "intervals overlap";
    total += iv.multiplicity;
  }

  if (c.proven() && c.property != Property::kDeg2Bound) {
    if (total != target.degree()) return "multiplicities do not add up to the degree";
    const bool allow_zero = c.property != Property::kRealNegative;
    for (const auto& iv : c.intervals) {
      if (iv.hi > 0) return "interval reaches into the positive axis";
      if (!allow_zero && iv.hi == 0 && target.coeff(0) == 0) return "zero root not allowed";
    }
  }
  return "";
}

}  // namespace zerograph
