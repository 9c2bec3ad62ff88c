#pragma once

#include <json.hpp>
#include <string>

#include "qtoric/complex.hpp"
#include "qtoric/cones.hpp"
#include "qtoric/fan.hpp"

namespace qtoric {

using nlohmann::json;

// {"dim": n, "rays": [[..],..], "max_cones": [[1-based],..]}
Fan fan_from_json(const json& j);
json fan_to_json(const Fan& f);

// {"coeffs": [..]}; entries may be integers or rational strings ("3/4").
RatVec divisor_from_json(const json& j);
TorusDivisor integral_divisor_from_json(const json& j);

// {"constraints": [{"normal": [..], "strict": bool}, ..]}
json cone_to_json(const POCone& c);
POCone cone_from_json(const json& j, std::size_t dim);

// Stable 64-bit content hash (FNV-1a over the canonical serialization).
std::string fan_hash(const Fan& f);

// Obstruction table cache document, alpha as 1-based ray indices.
json obstruction_to_json(const Fan& f, const ObstructionTable& table);
ObstructionTable obstruction_from_json(const json& j);

// Cache round-trip under an exclusive advisory lock; computes on miss.
ObstructionTable cached_obstruction_table(const Fan& f, const std::string& cache_dir);

json load_json_file(const std::string& path);

}  // namespace qtoric
