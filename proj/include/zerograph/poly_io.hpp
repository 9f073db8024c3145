#pragma once

#include <string_view>
#include <vector>

#include "json.hpp"
#include "zerograph/certify.hpp"
#include "zerograph/cyc8.hpp"
#include "zerograph/int_poly.hpp"
#include "zerograph/multiaffine.hpp"
#include "zerograph/numeric_roots.hpp"

namespace zerograph {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"coeffs": ["1", "3", ...]} ascending exact decimal integers. The zero
/// polynomial is {"coeffs": [], "identically_zero": true}.
nlohmann::ordered_json to_json(const IntPoly& p);
IntPoly parse_int_poly(std::string_view text);
IntPoly int_poly_from_json(const nlohmann::json& doc);

/// {"c0", "c1", "c2", "c3", "den"}: numerators over a common positive
/// denominator.
nlohmann::ordered_json to_json(const Cyc8& x);
Cyc8 cyc8_from_json(const nlohmann::json& doc);

/// {"vars": [...], "terms": [{"set": [...], "coeff": Cyc8}]}, terms in
/// ascending variable-set order.
nlohmann::ordered_json to_json(const MultiAffinePoly& p);
MultiAffinePoly multiaffine_from_json(const nlohmann::json& doc);

/// {"property", "verdict", "isolating_intervals": [[lo, hi]],
///  "multiplicities": [int], "notes"} with exact rational endpoints.
nlohmann::ordered_json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& doc);

/// {"converged", "roots": [{"re", "im", "residual"}]}
nlohmann::ordered_json to_json(const NumericRoots& r);

}  // namespace zerograph
