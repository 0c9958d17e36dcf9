#pragma once

// Command implementations behind the eicat tool. Each returns the exit
// code and the JSON document for standard output.

#include "eicat/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eicat {

enum ExitCode : int { kExitOk = 0, kExitInvalid = 1, kExitUsage = 2, kExitInternal = 3 };

struct CommandResult {
  int exit_code = kExitOk;
  Json output;        // single document for standard output
  std::string error;  // message for standard error, empty if none
};

inline constexpr const char* kReportVersion = "1";

CommandResult cmd_validate(const std::string& path);

struct EulerOptions {
  std::optional<std::string> cells_path;
  std::optional<std::size_t> max_chain_length;
};
CommandResult cmd_euler(const std::string& path, const EulerOptions& opts = {});
/// Same report for an already loaded document; `digest` names the input.
CommandResult euler_report(const Json& category_json, const std::string& digest, const EulerOptions& opts = {});

struct GroupOptions {
  std::size_t cap = 200;
  std::optional<std::string> xi;  // comma separated integers
  std::optional<std::uint64_t> seed;
  std::size_t random = 0;  // number of random G-sets to check (burnside)
};

/// sub is one of marks, nu, burnside, orbitcat, equivariant. For
/// equivariant `arg` is a cell list path; otherwise a group spec string
/// or a path to a group JSON file.
CommandResult cmd_group(const std::string& sub, const std::string& arg, const GroupOptions& opts = {});

CommandResult cmd_examples_list();
CommandResult cmd_examples_emit(const std::string& name, std::optional<std::size_t> q = std::nullopt);

/// Serialization used for standard output.
std::string render(const Json& j, bool pretty);

}  // namespace eicat
