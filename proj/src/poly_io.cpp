#include "zerograph/poly_io.hpp"

#include <set>

namespace zerograph {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

mpz_class parse_integer(const json& v) {
  if (!v.is_string()) throw FormatError("exact integers are encoded as strings");
  mpz_class z;
  if (z.set_str(v.get<std::string>(), 10) != 0) {
    throw FormatError("not a decimal integer: '" + v.get<std::string>() + "'");
  }
  return z;
}

mpq_class parse_rational(const json& v) {
  if (!v.is_string()) throw FormatError("exact rationals are encoded as strings");
  mpq_class q;
  if (q.set_str(v.get<std::string>(), 10) != 0 || q.get_den() == 0) {
    throw FormatError("not a decimal rational: '" + v.get<std::string>() + "'");
  }
  q.canonicalize();
  return q;
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw FormatError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(std::string("missing key '") + key + "'");
  return *it;
}

}  // namespace

ordered_json to_json(const IntPoly& p) {
  ordered_json out;
  auto coeffs = ordered_json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  out["coeffs"] = std::move(coeffs);
  if (p.is_zero()) out["identically_zero"] = true;
  return out;
}

IntPoly parse_int_poly(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  return int_poly_from_json(doc);
}

IntPoly int_poly_from_json(const json& doc) {
  const json& coeffs = field(doc, "coeffs");
  if (!coeffs.is_array()) throw FormatError("'coeffs' must be an array");
  for (const auto& item : doc.items()) {
    if (item.key() != "coeffs" && item.key() != "identically_zero") {
      throw FormatError("unknown key '" + item.key() + "' in polynomial");
    }
  }
  std::vector<mpz_class> out;
  for (const auto& c : coeffs) out.push_back(parse_integer(c));
  return IntPoly(std::move(out));
}

ordered_json to_json(const Cyc8& x) {
  mpz_class den = 1;
  for (int k = 0; k < 4; ++k) den = lcm(den, mpz_class(x.coord(k).get_den()));
  ordered_json out;
  static const char* kKeys[4] = {"c0", "c1", "c2", "c3"};
  for (int k = 0; k < 4; ++k) {
    mpq_class scaled = x.coord(k) * den;
    out[kKeys[k]] = mpz_class(scaled.get_num()).get_str();
  }
  out["den"] = den.get_str();
  return out;
}

Cyc8 cyc8_from_json(const json& doc) {
  const mpz_class den = parse_integer(field(doc, "den"));
  if (den <= 0) throw FormatError("Cyc8 denominator must be positive");
  auto coord = [&](const char* key) { return mpq_class(parse_integer(field(doc, key)), den); };
  return Cyc8(coord("c0"), coord("c1"), coord("c2"), coord("c3"));
}

ordered_json to_json(const MultiAffinePoly& p) {
  ordered_json out;
  out["vars"] = p.universe();
  auto terms = ordered_json::array();
  for (const auto& [s, c] : p.terms()) {
    auto names = ordered_json::array();
    for (std::size_t i : s.indices()) names.push_back(p.universe()[i]);
    terms.push_back({{"set", std::move(names)}, {"coeff", to_json(c)}});
  }
  out["terms"] = std::move(terms);
  return out;
}

MultiAffinePoly multiaffine_from_json(const json& doc) {
  const json& vars = field(doc, "vars");
  if (!vars.is_array()) throw FormatError("'vars' must be an array");
  std::vector<std::string> universe;
  for (const auto& v : vars) {
    if (!v.is_string()) throw FormatError("variable names must be strings");
    universe.push_back(v.get<std::string>());
  }
  MultiAffinePoly p(std::move(universe));
  const json& terms = field(doc, "terms");
  if (!terms.is_array()) throw FormatError("'terms' must be an array");
  std::set<VarSet> seen;
  for (const auto& t : terms) {
    VarSet s;
    for (const auto& name : field(t, "set")) {
      if (!name.is_string()) throw FormatError("variable names must be strings");
      const std::size_t i = p.var_index(name.get<std::string>());
      if (s.test(i)) throw FormatError("variable repeated within a term (not multiaffine)");
      s.set(i);
    }
    if (!seen.insert(s).second) throw FormatError("duplicate term");
    p.add_term(s, cyc8_from_json(field(t, "coeff")));
  }
  return p;
}

ordered_json to_json(const Certificate& c) {
  ordered_json out;
  out["property"] = std::string(to_string(c.property));
  out["verdict"] = std::string(to_string(c.verdict));
  auto intervals = ordered_json::array();
  auto mults = ordered_json::array();
  for (const auto& iv : c.intervals) {
    intervals.push_back({iv.lo.get_str(), iv.hi.get_str()});
    mults.push_back(iv.multiplicity);
  }
  out["isolating_intervals"] = std::move(intervals);
  out["multiplicities"] = std::move(mults);
  out["notes"] = c.notes;
  return out;
}

Certificate certificate_from_json(const json& doc) {
  Certificate c;
  c.property = parse_property(field(doc, "property").get<std::string>());
  const std::string verdict = field(doc, "verdict").get<std::string>();
  if (verdict != "proven" && verdict != "refuted") throw FormatError("unknown verdict");
  c.verdict = verdict == "proven" ? Verdict::kProven : Verdict::kRefuted;
  const json& intervals = field(doc, "isolating_intervals");
  const json& mults = field(doc, "multiplicities");
  if (!intervals.is_array() || !mults.is_array() || intervals.size() != mults.size()) {
    throw FormatError("intervals and multiplicities must be parallel arrays");
  }
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    const json& iv = intervals[k];
    if (!iv.is_array() || iv.size() != 2) throw FormatError("an interval is a [lo, hi] pair");
    c.intervals.push_back(
        RootInterval{parse_rational(iv[0]), parse_rational(iv[1]), mults[k].get<int>()});
  }
  c.notes = field(doc, "notes").get<std::string>();
  return c;
}

ordered_json to_json(const NumericRoots& r) {
  ordered_json out;
  out["converged"] = r.converged;
  auto roots = ordered_json::array();
  for (const auto& root : r.roots) {
    roots.push_back(
        {{"re", root.value.real()}, {"im", root.value.imag()}, {"residual", root.residual}});
  }
  out["roots"] = std::move(roots);
  return out;
}

}  // namespace zerograph
