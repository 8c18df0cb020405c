#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rqte/table.hpp"

namespace rqte::scenarios {

enum class Scenario { Packet, Dirac, Dispersion, Harmonic, Box, String, Flowtest };

Scenario scenario_from_name(std::string_view name);
const char* scenario_name(Scenario s);

enum class OutputFormat { Csv, Json };

struct ScenarioConfig {
  Scenario scenario = Scenario::Harmonic;
  nlohmann::json params = nlohmann::json::object();  // overrides on top of defaults
  std::filesystem::path out_dir = ".";
  OutputFormat format = OutputFormat::Csv;
};

/// Default parameter set for a scenario. Overrides with keys outside this
/// set are rejected, not ignored.
nlohmann::json default_params(Scenario s);
nlohmann::json resolve_params(Scenario s, const nlohmann::json& overrides);

/// Reads a params file: either a bare params object or a previously written
/// manifest ({"scenario": ..., "params": {...}}). A manifest whose scenario
/// does not match `expected` is rejected.
nlohmann::json load_config_file(const std::filesystem::path& path, Scenario expected);

struct ScenarioOutput {
  Table table;
  nlohmann::json manifest;
  std::filesystem::path results_path;
  std::filesystem::path manifest_path;
  std::string summary;  // one-line human-readable note
};

/// Runs the scenario and writes <name>.csv|.json plus <name>_manifest.json
/// into out_dir. The results table is deterministic: re-running with the
/// manifest as the config reproduces it byte-for-byte on the same platform.
ScenarioOutput run_scenario(const ScenarioConfig& cfg);

/// Canonical fixed-parameter run for regression comparison; results land in
/// <name>_golden.csv|.json.
ScenarioOutput emit_golden(Scenario s, const std::filesystem::path& out_dir,
                           OutputFormat format = OutputFormat::Csv);

}  // namespace rqte::scenarios
