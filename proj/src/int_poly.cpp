#include "zerograph/int_poly.hpp"

#include <algorithm>

namespace zerograph {

IntPoly::IntPoly(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(std::size_t k, const mpz_class& c) {
  std::vector<mpz_class> v(k + 1, 0);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void IntPoly::add_to(std::size_t k, const mpz_class& c) {
  if (coeffs_.size() <= k) coeffs_.resize(k + 1, 0);
  coeffs_[k] += c;
  trim();
}

mpz_class IntPoly::evaluate(const mpz_class& z) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const mpz_class& c = p.coeffs()[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += "z";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace zerograph
