#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace triality {

/// Runs one subcommand. `input` carries the typed data, `options` the flags
/// (mode, eps, cutoff, primes and per-command settings such as m, sign or s);
/// options take precedence over same-named input fields. Returns the output
/// document with "schema":"v1". Throws Error.
nlohmann::json run_command(const std::string& command, const std::string& subcommand,
                           const nlohmann::json& input, const nlohmann::json& options);

/// (command, subcommand) pairs; subcommand is empty for top-level commands.
const std::vector<std::pair<std::string, std::string>>& command_table();

}  // namespace triality
