#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zerograph/cyc8.hpp"

namespace zerograph {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixed-width set of variable indices (at most kCapacity variables).
class VarSet {
 public:
  static constexpr std::size_t kCapacity = 256;

  VarSet() = default;
  VarSet(std::initializer_list<std::size_t> indices);

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  bool empty() const { return (words_[0] | words_[1] | words_[2] | words_[3]) == 0; }
  std::size_t count() const;
  bool intersects(const VarSet& o) const;
  std::vector<std::size_t> indices() const;

  friend VarSet operator|(VarSet a, const VarSet& b) {
    for (std::size_t k = 0; k < 4; ++k) a.words_[k] |= b.words_[k];
    return a;
  }
  // ordered by highest differing variable, so sets of low indices sort first
  friend std::strong_ordering operator<=>(const VarSet& a, const VarSet& b) {
    for (std::size_t k = 4; k-- > 0;) {
      if (a.words_[k] != b.words_[k]) return a.words_[k] <=> b.words_[k];
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  std::array<std::uint64_t, 4> words_{0, 0, 0, 0};
};

/// Multiaffine polynomial over a named variable universe with Cyc8
/// coefficients. Terms are keyed by the set of variables they contain;
/// zero coefficients are never stored.
class MultiAffinePoly {
 public:
  explicit MultiAffinePoly(std::vector<std::string> universe);

  static MultiAffinePoly constant(std::vector<std::string> universe, const Cyc8& c);

  const std::vector<std::string>& universe() const { return universe_; }
  std::optional<std::size_t> find_var(std::string_view name) const;
  std::size_t var_index(std::string_view name) const;

  const std::map<VarSet, Cyc8>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Cyc8 coeff(const VarSet& s) const;
  /// Coefficient of the monomial named by variable names.
  Cyc8 coeff(const std::vector<std::string>& names) const;

  void add_term(const VarSet& s, const Cyc8& c);
  /// Variables occurring in at least one term.
  VarSet support() const;

  /// Same polynomial over another universe; every variable in the support
  /// must be present there.
  MultiAffinePoly restrict_universe(std::vector<std::string> names) const;

  friend bool operator==(const MultiAffinePoly& a, const MultiAffinePoly& b) {
    return a.universe_ == b.universe_ && a.terms_ == b.terms_;
  }

 private:
  std::vector<std::string> universe_;
  std::map<VarSet, Cyc8> terms_;
};

/// Exact product. Both factors must share the universe and have disjoint
/// supports, which keeps the product multiaffine; AlgebraError otherwise.
MultiAffinePoly multiply(const MultiAffinePoly& p, const MultiAffinePoly& q);

std::string to_string(const MultiAffinePoly& p);

}  // namespace zerograph
