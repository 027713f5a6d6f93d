#pragma once

#include <json.hpp>

#include "addenergy/energy.hpp"

namespace addenergy {

// IntSet <-> ["0", "1", "3"]; decimal strings keep arbitrary precision.
nlohmann::json to_json(const IntSet& a);
IntSet int_set_from_json(const nlohmann::json& j);

// {"n": 3, "positive": {"1": 2, "2": 1}}
nlohmann::json to_json(const DifferenceProfile& p);
DifferenceProfile profile_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Rational& q); // {"num": "...", "den": "..."}

// "0,1,2" or "0 1 2"
IntSet parse_int_list(const std::string& text);

} // namespace addenergy
