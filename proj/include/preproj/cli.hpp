#pragma once

#include "preproj/error.hpp"
#include "preproj/io.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace preproj {

struct CommandRequest {
  std::string subcommand;
  std::map<std::string, std::string> flags;  ///< flag name without dashes → value
  std::optional<std::string> module_path;
  std::optional<std::string> out_path;
  bool pretty = false;
};

enum class RunStatus { ok, invalid_input, not_applicable, theorem_violation };

struct RunReport {
  RunStatus status = RunStatus::ok;
  json payload = json::object();
  std::vector<std::string> diagnostics;
};

std::string_view to_string(RunStatus status);
/// 0 ok, 2 invalid-input, 3 not-applicable, 4 theorem-violation.
int exit_code(RunStatus status);
RunStatus status_for(ErrorKind kind);

const std::vector<std::string>& subcommands();
std::string usage();

/// Runs one subcommand. Never throws for library errors; they become the
/// report status plus a diagnostic line.
RunReport dispatch(const CommandRequest& req);

json report_to_json(const RunReport& report);
/// Text written to stdout: compact JSON, or indented with `pretty`.
std::string render_report(const RunReport& report, bool pretty);

/// argv front end; returns the process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace preproj
