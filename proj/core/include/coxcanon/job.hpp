#pragma once

#include "coxcanon/multisection.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace coxcanon {

struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

/// One CLI invocation: subcommand plus flags. Flags override the matching
/// fields of the input document.
struct CliRequest {
  std::string subcommand;
  std::string input_text;  ///< JSON document (already read from --input)
  std::optional<std::string> box_spec;         ///< "lo:hi[,lo:hi...]"
  std::optional<std::string> sublattice_spec;  ///< "a,b[;c,d...]"
  std::string format = "json";                 ///< json | csv
};

struct JobResult {
  int exit_code = 0;        ///< 0 ok, 2 schema violation, 3 math precondition failure
  std::string output;       ///< rendered report (valid when exit_code == 0)
  std::string error;        ///< diagnostic (valid when exit_code != 0)
};

/// Parses, runs and renders. Never throws; failures land in exit_code/error.
/// Output is byte-deterministic for identical requests.
JobResult run_job(const CliRequest& request);

}  // namespace coxcanon
