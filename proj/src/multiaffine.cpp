#include "zerograph/multiaffine.hpp"

#include <bit>
#include <set>

namespace zerograph {

VarSet::VarSet(std::initializer_list<std::size_t> indices) {
  for (std::size_t i : indices) set(i);
}

std::size_t VarSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool VarSet::intersects(const VarSet& o) const {
  for (std::size_t k = 0; k < 4; ++k) {
    if (words_[k] & o.words_[k]) return true;
  }
  return false;
}

std::vector<std::size_t> VarSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < 4; ++k) {
    std::uint64_t w = words_[k];
    while (w) {
      out.push_back(64 * k + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

MultiAffinePoly::MultiAffinePoly(std::vector<std::string> universe)
    : universe_(std::move(universe)) {
  if (universe_.size() > VarSet::kCapacity) {
    throw AlgebraError("variable universe exceeds " + std::to_string(VarSet::kCapacity));
  }
  std::set<std::string_view> seen;
  for (const auto& v : universe_) {
    if (!seen.insert(v).second) throw AlgebraError("duplicate variable '" + v + "'");
  }
}

MultiAffinePoly MultiAffinePoly::constant(std::vector<std::string> universe, const Cyc8& c) {
  MultiAffinePoly p(std::move(universe));
  p.add_term(VarSet{}, c);
  return p;
}

std::optional<std::size_t> MultiAffinePoly::find_var(std::string_view name) const {
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (universe_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t MultiAffinePoly::var_index(std::string_view name) const {
  auto i = find_var(name);
  if (!i) throw AlgebraError("variable '" + std::string(name) + "' not in universe");
  return *i;
}

Cyc8 MultiAffinePoly::coeff(const VarSet& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Cyc8() : it->second;
}

Cyc8 MultiAffinePoly::coeff(const std::vector<std::string>& names) const {
  VarSet s;
  for (const auto& n : names) s.set(var_index(n));
  return coeff(s);
}

void MultiAffinePoly::add_term(const VarSet& s, const Cyc8& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VarSet MultiAffinePoly::support() const {
  VarSet s;
  for (const auto& [mono, c] : terms_) s = s | mono;
  return s;
}

MultiAffinePoly MultiAffinePoly::restrict_universe(std::vector<std::string> names) const {
  MultiAffinePoly out(std::move(names));
  std::vector<std::size_t> remap(universe_.size(), VarSet::kCapacity);
  for (std::size_t i : support().indices()) {
    auto j = out.find_var(universe_[i]);
    if (!j) throw AlgebraError("variable '" + universe_[i] + "' missing from target universe");
    remap[i] = *j;
  }
  for (const auto& [mono, c] : terms_) {
    VarSet s;
    for (std::size_t i : mono.indices()) s.set(remap[i]);
    out.terms_.emplace(s, c);
  }
  return out;
}

MultiAffinePoly multiply(const MultiAffinePoly& p, const MultiAffinePoly& q) {
  if (p.universe() != q.universe()) throw AlgebraError("multiply: universes differ");
  if (p.support().intersects(q.support())) {
    throw AlgebraError("multiply: factors share a variable, product would not be multiaffine");
  }
  MultiAffinePoly out(p.universe());
  for (const auto& [s, c] : p.terms()) {
    for (const auto& [t, d] : q.terms()) out.add_term(s | t, c * d);
  }
  return out;
}

std::string to_string(const MultiAffinePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [s, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")";
    for (std::size_t i : s.indices()) out += "*" + p.universe()[i];
  }
  return out;
}

}  // namespace zerograph
