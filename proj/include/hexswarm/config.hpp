#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hexswarm/engine.hpp"

namespace hexswarm {

/// Malformed scenario text; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/**
 * Parses the scenario format: `key = value` lines, `#` comments, and
 * `[ga]`, `[aco]`, `[bco]` sections for controller parameters.  Keys not
 * given keep their defaults.  Cells are written `q,r`; removals as a
 * comma-separated list of `tick:robot` pairs.
 *
 * Throws ParseError for syntax problems and unknown keys, ConfigError when
 * the parsed scenario fails validation.
 */
ScenarioConfig parse_config(std::string_view text);

ScenarioConfig load_config(const std::filesystem::path& path);

}  // namespace hexswarm
