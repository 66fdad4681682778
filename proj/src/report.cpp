#include "hexswarm/report.hpp"

#include <fstream>
#include <ostream>
#include <system_error>

#include <fmt/format.h>

namespace hexswarm {

void write_trace_csv(std::ostream& out, std::span<const TraceRow> rows) {
  out << "tick,robot_id,q,r,heading,speed,dist_to_target,controller,leader_id,component_size\n";
  for (const auto& row : rows) {
    out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", row.tick, row.robot, row.cell.q,
                       row.cell.r, row.heading, row.speed, row.dist_to_target,
                       to_string(row.controller),
                       row.leader ? std::to_string(*row.leader) : std::string(),
                       row.component_size);
  }
}

void write_field_csv(std::ostream& out, Tick tick, const PheromoneField& field) {
  out << "tick,q,r,level\n";
  write_field_rows(out, tick, field);
}

nlohmann::json summary_json(const RunSummary& s) {
  nlohmann::json j;
  j["controller"] = std::string(to_string(s.controller));
  j["seed"] = s.seed;
  j["status"] = std::string(to_string(s.status));
  j["ticks"] = s.ticks;
  j["robots"] = s.robots;
  j["arrived"] = s.arrived;
  j["removed"] = s.removed;
  j["fraction_arrived"] = s.fraction_arrived;
  j["first_arrival_tick"] =
      s.first_arrival_tick ? nlohmann::json(*s.first_arrival_tick) : nlohmann::json(nullptr);
  j["messages"] = s.messages;
  j["max_component_size"] = s.max_component_size;
  j["mean_distance"] = s.mean_distance;
  j["median_distance"] = s.median_distance;
  j["largest_component"] = s.largest_component;
  return j;
}

void write_batch_csv(std::ostream& out, std::span<const RunSummary> runs) {
  out << "seed,controller,status,ticks,arrived,fraction_arrived,first_arrival_tick,messages,"
         "max_component_size,final_median_distance\n";
  for (const auto& s : runs) {
    out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", s.seed, to_string(s.controller),
                       to_string(s.status), s.ticks, s.arrived, s.fraction_arrived,
                       s.first_arrival_tick ? std::to_string(*s.first_arrival_tick) : std::string(),
                       s.messages, s.max_component_size,
                       s.median_distance.empty() ? 0.0 : s.median_distance.back());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hexswarm
