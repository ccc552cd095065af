#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "memesim/engine.hpp"

namespace memesim::app {

struct SweepAxis {
    std::string name;
    std::vector<double> values;
};

/// Contents of a run-configuration file: the simulation parameters plus
/// where to write results and, for sweeps, which parameters to vary.
struct RunConfig {
    SimConfig sim;
    std::filesystem::path output_dir;
    /// Sorted by name so sweep output columns have a canonical order.
    std::vector<SweepAxis> axes;
    std::uint32_t replicates = 1;
};

/// Strict-schema load. Unknown keys, wrong types and SimConfig invariant
/// violations all end up in one ConfigError listing every bad field.
RunConfig parse_run_config(const nlohmann::json& doc);

/// Reads and parses a file. Throws std::ios_base::failure when unreadable.
RunConfig load_run_config(const std::filesystem::path& path);

/// Sets a numeric SimConfig field by its config-file name
/// (e.g. "neighbor_radius", "sharing_model.intercept").
/// Throws ConfigError for unknown names or non-integral values on integer fields.
void apply_parameter(SimConfig& config, const std::string& name, double value);

/// Every parameter name apply_parameter accepts.
const std::vector<std::string>& sweepable_parameters();

nlohmann::json to_json(const SimConfig& config);

}  // namespace memesim::app
