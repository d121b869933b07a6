#pragma once

// JSON reports for verdicts and Q evaluations.

#include "hopfgal/classifier.hpp"

#include <json.hpp>

namespace hopfgal {

inline constexpr const char *tool_version = "1.0.0";
inline constexpr int report_schema_version = 1;

std::string fnv1a_hex(const std::string &data);

nlohmann::json qresult_json(const QResult &r);
nlohmann::json verdict_json(const Verdict &v);

// full report envelope: schema, tool, command, input digest, payload, timing
nlohmann::json report_json(const std::string &command,
                           const std::string &input,
                           nlohmann::json payload, double elapsed_ms);

} // namespace hopfgal
