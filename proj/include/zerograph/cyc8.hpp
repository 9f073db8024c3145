#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <string>

namespace zerograph {

/// Exact element c0 + c1*z + c2*z^2 + c3*z^3 of Q(z), z = exp(i*pi/4), z^4 = -1.
/// Contains i = z^2, (1+i)/sqrt2 = z and (1-i)/sqrt2 = conj(z).
class Cyc8 {
 public:
  Cyc8() = default;
  Cyc8(long integer) : c_{mpq_class(integer), 0, 0, 0} {}  // NOLINT(implicit)
  Cyc8(mpq_class c0, mpq_class c1, mpq_class c2, mpq_class c3);

  static Cyc8 zeta() { return Cyc8(0, 1, 0, 0); }
  static Cyc8 imag_unit() { return Cyc8(0, 0, 1, 0); }

  const mpq_class& coord(int k) const { return c_[static_cast<std::size_t>(k)]; }

  /// Complex conjugate: z -> z^-1 = -z^3.
  Cyc8 conj() const;

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_integer() const { return is_rational() && c_[0].get_den() == 1; }

  std::complex<double> to_complex() const;

  Cyc8& operator+=(const Cyc8& o);
  Cyc8& operator-=(const Cyc8& o);
  Cyc8& operator*=(const Cyc8& o);
  friend Cyc8 operator+(Cyc8 a, const Cyc8& b) { return a += b; }
  friend Cyc8 operator-(Cyc8 a, const Cyc8& b) { return a -= b; }
  friend Cyc8 operator*(Cyc8 a, const Cyc8& b) { return a *= b; }
  friend Cyc8 operator-(const Cyc8& a) { return Cyc8() - a; }
  friend bool operator==(const Cyc8& a, const Cyc8& b) { return a.c_ == b.c_; }

 private:
  std::array<mpq_class, 4> c_{0, 0, 0, 0};
};

/// Readable form such as "1", "-i" or "1/2 + 3z - z^3" (z the primitive 8th root).
std::string to_string(const Cyc8& x);

}  // namespace zerograph
