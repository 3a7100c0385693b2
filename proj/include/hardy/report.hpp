#pragma once

// JSON serialization and the report envelope written by the CLI.

#include <string>

#include "json.hpp"
#include "hardy/harness.hpp"
#include "hardy/na_theory.hpp"

namespace hardy {

using nlohmann::json;

/// Complex numbers are [re, im].
json to_json(cplx c);
cplx cplx_from_json(const json& j);

json to_json(const BlaschkeProduct& B);
BlaschkeProduct blaschke_from_json(const json& j);

json to_json(const RationalFunction& f);
RationalFunction rational_from_json(const json& j);

json to_json(const SymbolSpec& s);
SymbolSpec symbol_from_json(const json& j);

json to_json(const NAReport& r);
NAReport na_report_from_json(const json& j);

json to_json(const SuiteCase& c);
SuiteCase suite_case_from_json(const json& j);

json to_json(const ConvergenceTrace& t);
ConvergenceTrace trace_from_json(const json& j);

struct ReportEnvelope {
  std::string tool_version;
  std::string command;
  json config = json::object();
  std::string config_hash;
  std::string timestamp;
  /// "na_report", "suite_cases", "example" or "convergence_trace".
  std::string payload_kind;
  json payload;
};

/// 64-bit FNV-1a of config.dump(), as 16 hex digits.
std::string config_hash(const json& config);
/// Fills version, hash and an ISO-8601 UTC timestamp.
ReportEnvelope make_envelope(const std::string& command, const json& config, const std::string& payload_kind,
                             json payload);

json to_json(const ReportEnvelope& e);
ReportEnvelope envelope_from_json(const json& j);

/// Writes to path.tmp and renames over path.
void write_atomic(const std::string& path, const std::string& content);

const char* tool_version();

}  // namespace hardy
