#pragma once

#include "ncqm/json_io.hpp"

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace ncqm {

struct Command {
  std::string verb;
  std::string subverb;
  std::map<std::string, std::string> options;  // flag name (no dashes) -> raw text
};

/// One command, one report. status "ok" carries outputs; status "error"
/// carries error_kind and a message and never outputs.
struct Report {
  Json document;        // the full schema object
  bool ok = false;
  std::string error_kind;  // empty when ok
  std::string message;     // empty when ok
  std::string text;        // human-readable rendering
};

/// Raised for grammar-level misuse (unknown command, missing flag); surfaces
/// as usage text and exit code 2 rather than a domain-error report.
struct UsageFailure {
  std::string message;
};

/// Route a parsed command to the library. Domain errors become error reports;
/// grammar violations throw UsageFailure.
Report dispatch(const Command& cmd);

/// Full entry point: parse argv-style arguments, dispatch (single command or
/// --sweep array), emit JSON or text. Returns the process exit code:
/// 0 ok, 1 domain error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncqm
