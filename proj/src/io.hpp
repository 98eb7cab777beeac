#pragma once

#include <map>
#include <string>
#include <vector>

#include "poly.hpp"

namespace feld {

// Terms in canonical order, each as {"coeff": "<decimal>", "exps": {...}}.
std::string poly_to_json_string(const laurent_poly& p);

// CSV rows "coeff,monomial" under a fixed header.
std::string poly_to_csv(const laurent_poly& p);

// "z1=3/2,t=2" -> rational point. Throws errc::parse_error on bad input.
std::map<var_id, mpq_class> parse_assignment(const std::string& text);

// "2,4,7" -> strictly increasing 1-based positions within [1, sites].
std::vector<int> parse_positions(const std::string& text, int sites);

// "3,1" -> weakly decreasing nonnegative parts (empty string allowed).
std::vector<int> parse_partition(const std::string& text);

std::string rational_to_string(const mpq_class& q);

}  // namespace feld
