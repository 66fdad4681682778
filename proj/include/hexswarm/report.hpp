#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "hexswarm/engine.hpp"

namespace hexswarm {

/// Header `tick,robot_id,q,r,heading,speed,dist_to_target,controller,leader_id,component_size`.
/// leader_id is empty when there is no leader.
void write_trace_csv(std::ostream& out, std::span<const TraceRow> rows);

/// Header `tick,q,r,level`.
void write_field_csv(std::ostream& out, Tick tick, const PheromoneField& field);

nlohmann::json summary_json(const RunSummary& s);

/// One CSV row per run with the scalar summary fields.
void write_batch_csv(std::ostream& out, std::span<const RunSummary> runs);

/// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace hexswarm
