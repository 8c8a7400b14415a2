#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

namespace sumprod::cli {

inline constexpr const char* tool_version = "1.0.0";

/// Malformed or missing command arguments (exit code 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A verification that ran to completion but reported a failure (exit code 3).
struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Runs one subcommand. `inputs` maps option names to their string values as
/// given on the command line; the result is the command's JSON payload.
/// Deterministic: equal inputs give byte-identical payload dumps.
nlohmann::json run_command(const std::string& command, const nlohmann::json& inputs);

/// {schema, command, inputs, outputs, tool_version, timestamp}. The timestamp
/// honours SOURCE_DATE_EPOCH for reproducible manifests.
nlohmann::json make_manifest(const std::string& command, const nlohmann::json& inputs, const nlohmann::json& outputs);

/// Re-runs a manifest and reports whether its outputs are reproduced exactly.
nlohmann::json replay_manifest(const nlohmann::json& manifest);

/// Human-readable rendering used when --json is not given; empty when the
/// command has no text form (the JSON dump is printed instead).
std::string render_text(const std::string& command, const nlohmann::json& outputs, bool pretty);

}  // namespace sumprod::cli
