#include "hexswarm/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace hexswarm {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view text, std::size_t line, std::string_view key) {
  text = trim(text);
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ParseError(line, "bad value '" + std::string(text) + "' for " + std::string(key));
  }
  return value;
}

HexCoord parse_cell(std::string_view text, std::size_t line, std::string_view key) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw ParseError(line, std::string(key) + " must be written q,r");
  }
  return {parse_number<int>(text.substr(0, comma), line, key),
          parse_number<int>(text.substr(comma + 1), line, key)};
}

std::vector<Removal> parse_removals(std::string_view text, std::size_t line) {
  std::vector<Removal> out;
  while (!trim(text).empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw ParseError(line, "removals entries are tick:robot");
    out.push_back({parse_number<Tick>(item.substr(0, colon), line, "removals"),
                   parse_number<RobotId>(item.substr(colon + 1), line, "removals")});
  }
  return out;
}

using Setter = std::function<void(ScenarioConfig&, std::string_view, std::size_t)>;

template <typename T, typename M>
Setter number(std::string_view key, M member) {
  return [key, member](ScenarioConfig& c, std::string_view v, std::size_t line) {
    std::invoke(member, c) = parse_number<T>(v, line, key);
  };
}

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table{
      {"controller",
       [](ScenarioConfig& c, std::string_view v, std::size_t) { c.controller = parse_controller(v); }},
      {"robots", number<int>("robots", &ScenarioConfig::robots)},
      {"radius", number<int>("radius", &ScenarioConfig::radius)},
      {"margin", number<int>("margin", &ScenarioConfig::margin)},
      {"target", [](ScenarioConfig& c, std::string_view v,
                    std::size_t line) { c.target = parse_cell(v, line, "target"); }},
      {"entry", [](ScenarioConfig& c, std::string_view v,
                   std::size_t line) { c.entry = parse_cell(v, line, "entry"); }},
      {"seed", number<std::uint64_t>("seed", &ScenarioConfig::seed)},
      {"max_ticks", number<int>("max_ticks", &ScenarioConfig::max_ticks)},
      {"comm_range", number<int>("comm_range", &ScenarioConfig::comm_range)},
      {"ttl", number<int>("ttl", &ScenarioConfig::ttl)},
      {"sensing_radius", number<int>("sensing_radius", &ScenarioConfig::sensing_radius)},
      {"removals", [](ScenarioConfig& c, std::string_view v,
                      std::size_t line) { c.removals = parse_removals(v, line); }},

      {"ga.population", [](ScenarioConfig& c, std::string_view v, std::size_t l) {
         c.ga.population = parse_number<int>(v, l, "population"); }},
      {"ga.generations", [](ScenarioConfig& c, std::string_view v, std::size_t l) {
         c.ga.generations = parse_number<int>(v, l, "generations"); }},
      {"ga.tournament_k", [](ScenarioConfig& c, std::string_view v, std::size_t l) {
         c.ga.tournament_k = parse_number<int>(v, l, "tournament_k"); }},
      {"ga.crossover_prob", [](ScenarioConfig& c, std::string_view v, std::size_t l) {
         c.ga.crossover_prob = parse_number<double>(v, l, "crossover_prob"); }},
      {"ga.mutation_prob", [](ScenarioConfig& c, std::string_view v, std::size_t l) {
         c.ga.mutation_prob = parse_number<double>(v, l, "mutation_prob"); }},
      {"ga.alignment_weight", [](ScenarioConfig& c, std::string_view v, std::size_t l) {
         c.ga.alignment_weight = parse_number<double>(v, l, "alignment_weight"); }},

      {"aco.evaporation", [](ScenarioConfig& c, std::string_view v, std::size_t l) {
         c.aco.evaporation = parse_number<double>(v, l, "evaporation"); }},
      {"aco.deposit", [](ScenarioConfig& c, std::string_view v, std::size_t l) {
         c.aco.deposit = parse_number<double>(v, l, "deposit"); }},
      {"aco.alpha", [](ScenarioConfig& c, std::string_view v, std::size_t l) {
         c.aco.alpha = parse_number<double>(v, l, "alpha"); }},
      {"aco.beta", [](ScenarioConfig& c, std::string_view v, std::size_t l) {
         c.aco.beta = parse_number<double>(v, l, "beta"); }},
      {"aco.floor", [](ScenarioConfig& c, std::string_view v, std::size_t l) {
         c.aco.floor = parse_number<double>(v, l, "floor"); }},

      {"bco.follow_gain", [](ScenarioConfig& c, std::string_view v, std::size_t l) {
         c.bco.follow_gain = parse_number<double>(v, l, "follow_gain"); }},
      {"bco.scout_prob", [](ScenarioConfig& c, std::string_view v, std::size_t l) {
         c.bco.scout_prob = parse_number<double>(v, l, "scout_prob"); }},
      {"bco.leader_timeout", [](ScenarioConfig& c, std::string_view v, std::size_t l) {
         c.bco.leader_timeout = parse_number<int>(v, l, "leader_timeout"); }},
  };
  return table;
}

}  // namespace

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig cfg;
  std::string section;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section != "ga" && section != "aco" && section != "bco") {
        throw ParseError(line_no, "unknown section [" + section + "]");
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    const std::string full = section.empty() ? key : section + "." + key;
    const auto it = setters().find(full);
    if (it == setters().end()) throw ParseError(line_no, "unknown key '" + full + "'");
    it->second(cfg, value, line_no);
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace hexswarm
