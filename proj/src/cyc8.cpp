#include "zerograph/cyc8.hpp"

#include <cmath>

namespace zerograph {

Cyc8::Cyc8(mpq_class c0, mpq_class c1, mpq_class c2, mpq_class c3)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
  for (auto& c : c_) c.canonicalize();
}

Cyc8 Cyc8::conj() const { return Cyc8(c_[0], -c_[3], -c_[2], -c_[1]); }

std::complex<double> Cyc8::to_complex() const {
  const double h = std::sqrt(0.5);
  const std::complex<double> powers[4] = {{1.0, 0.0}, {h, h}, {0.0, 1.0}, {-h, h}};
  std::complex<double> out{0.0, 0.0};
  for (std::size_t k = 0; k < 4; ++k) out += c_[k].get_d() * powers[k];
  return out;
}

Cyc8& Cyc8::operator+=(const Cyc8& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

Cyc8& Cyc8::operator-=(const Cyc8& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyc8& Cyc8::operator*=(const Cyc8& o) {
  std::array<mpq_class, 4> r{0, 0, 0, 0};
  for (std::size_t j = 0; j < 4; ++j) {
    if (c_[j] == 0) continue;
    for (std::size_t k = 0; k < 4; ++k) {
      if (o.c_[k] == 0) continue;
      mpq_class t = c_[j] * o.c_[k];
      if (j + k >= 4) {
        r[j + k - 4] -= t;
      } else {
        r[j + k] += t;
      }
    }
  }
  c_ = std::move(r);
  return *this;
}

std::string to_string(const Cyc8& x) {
  if (x.is_zero()) return "0";
  // print the Gaussian part with i when only c0, c2 are present
  const bool gaussian = x.coord(1) == 0 && x.coord(3) == 0;
  static const char* kUnit[4] = {"", "z", "z^2", "z^3"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    const mpq_class& c = x.coord(k);
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const std::string unit = (gaussian && k == 2) ? "i" : kUnit[k];
    if (k == 0 || mag != 1) out += mag.get_str();
    out += unit;
  }
  return out;
}

}  // namespace zerograph
