#pragma once

#include <filesystem>
#include <string>

#include "tdsce/harness/experiments.hpp"

namespace tdsce {

std::string to_csv(const ExperimentResult& r);

/// JSON sidecar: config hash, PN generator, profile source, coherence horizons, tool version.
std::string metadata_json(const Scenario& sc, const ExperimentResult& r);

/// Writes path and path with the extension replaced by ".meta".
void write_outputs(const std::filesystem::path& csv_path, const Scenario& sc, const ExperimentResult& r);

std::string tool_version();

}  // namespace tdsce
