#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

namespace qalg::report {

inline constexpr const char* kToolName = "qalg";
inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchema = 1;

std::string sha256_hex(std::string_view data);

/// {schema, tool, version, verb, input_hash, body, envelope: {timestamp}}.
/// Everything outside `envelope` is a function of the inputs alone.
nlohmann::json wrap(const std::string& verb, std::string_view canonical_input, nlohmann::json body,
                    bool with_timestamp = true);

/// Indented key: value rendering of a JSON body.
std::string to_text(const nlohmann::json& body);

}  // namespace qalg::report
