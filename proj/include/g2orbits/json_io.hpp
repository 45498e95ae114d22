#pragma once

#include <string>

#include <json.hpp>

#include "g2orbits/derivations.hpp"
#include "g2orbits/octonion.hpp"
#include "g2orbits/orbits.hpp"
#include "g2orbits/roots.hpp"

namespace g2orbits {

using Json = nlohmann::json;

/// Rationals travel as strings "p/q" ("p" for integers).
Json rational_to_json(const Rational& x);
/// Accepts a string or an integer. Throws Error(InvalidInput).
Rational rational_from_json(const Json& j);

/// Array of 8 rational strings.
Json octonion_to_json(const Octonion& x);
Octonion octonion_from_json(const Json& j);

/// 8x8 array of signed basis names such as "-e7".
Json multiplication_table_json();

/// {"dimension", "basis": [14 8x8 matrices], "structure_constants": [{"i","j","k","value"}]}
/// Structure constants are listed for i < j and nonzero values only.
Json derivations_json(const G2Basis& basis);

/// {"generic_tau", "cartan_gram", "roots": [{"coeffs","killing_sq_length","length_class"}]}
Json roots_json(const RootSystem& rs);

Json report_json(const ClassificationReport& report);

Json census_json(const Census& census);

/// Header "tau1,tau2,tau3,stabilizer_dim,orbit_type", one line per lattice point.
std::string census_csv(const Census& census);

}  // namespace g2orbits
