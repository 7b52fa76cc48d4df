#pragma once

// JSON instance format and report helpers. Rationals travel as strings
// ("-3/4", "2"); integer JSON numbers are accepted on input.

#include <json.hpp>

#include "polyhit/adaptability.hpp"
#include "polyhit/family.hpp"
#include "polyhit/greedy1d.hpp"
#include "polyhit/lift.hpp"
#include "polyhit/realroots.hpp"

namespace polyhit {

using Json = nlohmann::json;

Rat rat_from_json(const Json& j);
Json rat_to_json(const Rat& q);
RatVector vector_from_json(const Json& j);
Json vector_to_json(const RatVector& v);
RatMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);
Json matrix_to_json(const RatMatrix& m);

/// Exact form: string for rationals, {"poly", "interval", "approx"} otherwise.
Json real_to_json(const RealValue& v);
std::string approx_string(const RealValue& v);
Json approx_vector(const RatVector& v);
Json interval_to_json(const RatInterval& iv);
Json sigma_to_json(const SigmaResult& s);

AffineFamily family_from_json(const Json& j);
Json family_to_json(const AffineFamily& f);

AdaptInstance adapt_from_json(const Json& j);
Json adapt_to_json(const AdaptInstance& inst);

Json lift_to_json(const LiftOutput& lift);

/// Reads and parses a JSON file; InputError on I/O or syntax problems.
Json read_json_file(const std::string& path);

}  // namespace polyhit
