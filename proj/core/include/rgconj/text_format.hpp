#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rgconj/oracle.hpp"

namespace rgconj {

using Structure = std::variant<GraphOracle, OrderOracle>;

/// Parses a `graph ...` or `order ...` file. Errors name the offending line.
Structure parse_structure(std::string_view text);
GraphOracle parse_graph(std::string_view text);
OrderOracle parse_order(std::string_view text);

/// Parses `map <a> <b>` lines into a partial injection.
std::vector<MapPair> parse_map(std::string_view text);

std::string format_map(const std::vector<MapPair>& pairs);

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace rgconj
