#include "zerograph/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace zerograph {

QPoly::QPoly(std::vector<mpq_class> ascending) : c_(std::move(ascending)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

QPoly::QPoly(const IntPoly& p) {
  for (const auto& c : p.coeffs()) c_.emplace_back(c);
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::derivative() const {
  std::vector<mpq_class> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<unsigned long>(k));
  return QPoly(std::move(d));
}

mpq_class QPoly::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int QPoly::sign_at_infinity(bool positive) const {
  if (is_zero()) return 0;
  int s = sgn(lead());
  if (!positive && degree() % 2 != 0) s = -s;
  return s;
}

QPoly QPoly::normalized() const {
  if (is_zero()) return {};
  mpq_class scale = abs(lead());
  std::vector<mpq_class> out;
  for (const auto& c : c_) out.push_back(c / scale);
  return QPoly(std::move(out));
}

IntPoly QPoly::to_primitive_int() const {
  if (is_zero()) return {};
  mpz_class den = 1;
  for (const auto& c : c_) den = lcm(den, mpz_class(c.get_den()));
  std::vector<mpz_class> ints;
  mpz_class content = 0;
  for (const auto& c : c_) {
    mpq_class scaled = c * den;
    ints.push_back(scaled.get_num());
    content = gcd(content, ints.back());
  }
  if (lead() < 0) content = -content;
  for (auto& v : ints) v /= content;
  return IntPoly(std::move(ints));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<mpq_class> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] -= b.c_[k];
  return QPoly(std::move(out));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(out));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<mpq_class> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int k = a.degree(); k >= db; --k) {
    const mpq_class q = rem[static_cast<std::size_t>(k)] / b.lead();
    quot[static_cast<std::size_t>(k - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  std::vector<mpq_class> monic;
  for (const auto& c : a.coeffs()) monic.push_back(c / a.lead());
  return QPoly(std::move(monic));
}

std::vector<SquareFreeFactor> square_free_decomposition(const IntPoly& p) {
  std::vector<SquareFreeFactor> out;
  if (p.degree() < 1) return out;
  const QPoly f(p);
  const QPoly df = f.derivative();
  const QPoly a0 = gcd(f, df);
  QPoly b = divmod(f, a0).first;
  QPoly c = divmod(df, a0).first;
  QPoly d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    const QPoly a = gcd(b, d);
    if (a.degree() >= 1) out.push_back(SquareFreeFactor{a.to_primitive_int(), i});
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

SturmSequence::SturmSequence(const QPoly& square_free) {
  if (square_free.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  seq_.push_back(square_free.normalized());
  QPoly next = square_free.derivative().normalized();
  while (!next.is_zero()) {
    seq_.push_back(next);
    QPoly r = divmod(seq_[seq_.size() - 2], seq_.back()).second;
    next = (QPoly() - r).normalized();
  }
}

std::size_t SturmSequence::variations(const Endpoint& x) const {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& s : seq_) {
    int v = 0;
    switch (x.kind) {
      case Endpoint::Kind::kFinite: v = sgn(s.evaluate(x.value)); break;
      case Endpoint::Kind::kNegInf: v = s.sign_at_infinity(false); break;
      case Endpoint::Kind::kPosInf: v = s.sign_at_infinity(true); break;
    }
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

std::size_t SturmSequence::count(const Endpoint& lo, const Endpoint& hi) const {
  const std::size_t a = variations(lo), b = variations(hi);
  return a > b ? a - b : 0;
}

QPoly square_free_part(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free part of the zero polynomial");
  const QPoly f(p);
  if (f.degree() == 0) return f;
  return divmod(f, gcd(f, f.derivative())).first;
}

std::size_t sturm_count(const IntPoly& p, const Endpoint& lo, const Endpoint& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count: identically zero polynomial");
  return SturmSequence(square_free_part(p)).count(lo, hi);
}

mpz_class root_bound(const IntPoly& p) {
  // Cauchy: |z| < 1 + max |a_k / a_n|
  if (p.degree() < 1) return 1;
  const mpz_class lead = abs(p.coeffs().back());
  mpz_class best = 0;
  for (std::size_t k = 0; k + 1 < p.coeffs().size(); ++k) {
    mpz_class c = abs(p.coeffs()[k]);
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
    best = std::max(best, q);
  }
  return best + 1;
}

std::vector<std::pair<mpq_class, mpq_class>> isolate_roots(const SturmSequence& seq,
                                                            const mpq_class& lo,
                                                            const mpq_class& hi) {
  std::vector<std::pair<mpq_class, mpq_class>> done;
  std::vector<std::pair<mpq_class, mpq_class>> pending{{lo, hi}};
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    const std::size_t n = seq.count(Endpoint::at(a), Endpoint::at(b));
    if (n == 0) continue;
    if (n == 1) {
      done.emplace_back(a, b);
      continue;
    }
    mpq_class mid = (a + b) / 2;
    pending.emplace_back(mid, b);
    pending.emplace_back(a, mid);
  }
  std::sort(done.begin(), done.end());
  return done;
}

}  // namespace zerograph
