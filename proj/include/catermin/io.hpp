#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "catermin/energy.hpp"
#include "catermin/matching.hpp"
#include "catermin/rational.hpp"

namespace catermin {

// Shared text formats: spine lists and degree sequences are
// comma-separated integers; edge lists are one "u v" pair per line;
// rationals are "p/q" or plain integers.
std::vector<int> parse_int_list(const std::string& text);
std::vector<Rational> parse_rational_list(const std::string& text);
Tree parse_edge_list(const std::string& text);
Tree read_edge_file(const std::string& path);

std::string format_int_list(const std::vector<int>& v);

// JSON array of decimal strings, lowest degree first.
nlohmann::json poly_to_json(const MatchingPolynomial& p);
nlohmann::json energy_to_json(const EnergyValue& e);

} // namespace catermin
