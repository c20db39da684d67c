#pragma once

#include <filesystem>
#include <string_view>

#include "json.hpp"

#include "emaware/simulate.hpp"
#include "emaware/workload.hpp"

namespace emaware {

// JSON front-ends. Unknown keys are rejected with ConfigError so typos do
// not silently fall back to defaults.

/**
 * {"seed": 1, "length": 1000, "kind": "zipf", "num_regs": 16, "zipf_s": 1.0, "reg_class": "GPR"}
 * {"kind": "skewed", "working_set_lines": 1024, "hot_fraction": 0.1, "hot_weight": 10,
 *  "line_bytes": 64, "write_fraction": 0.5, "base_address": 0, "space": "D"}
 * {"kind": "alu", "max_width": 3, "width_distribution": [0.2, 0.5, 0.2, 0.1]}
 */
GenSpec gen_spec_from_json(const nlohmann::json& j);
nlohmann::json gen_spec_to_json(const GenSpec& spec);

/// Accepts inline JSON (starting with '{') or a path to a JSON file.
nlohmann::json load_json_arg(std::string_view arg);

/**
 * {"rotation_period": 10000000, "count_rotation_writebacks": true, "page_bytes": 4096,
 *  "levels": [{"role": "l1d", "name": "l1d", "sets": 64 | "entries": 512 | "size_bytes": 32768,
 *              "ways": 8, "line_bytes": 64, "rotation_period": 0, "write_allocate": true}, ...]}
 * Missing "levels" means the default hierarchy.
 */
HierarchyConfig hierarchy_from_json(const nlohmann::json& j);

/// Full run configuration document; see README for the schema.
RunConfig run_config_from_json(const nlohmann::json& j);

} // namespace emaware
