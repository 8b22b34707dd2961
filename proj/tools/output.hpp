#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace halfspin::cli {

enum class Format { Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitGoldenMismatch = 3;

using Json = nlohmann::ordered_json;

/// Value rounded to 12 significant digits, so JSON and CSV agree.
Json json_real(double value);

/// Writes text to the path, or to standard output when the path is empty.
void emit(const std::optional<std::string>& path, const std::string& text);

/// One-line diagnostic on standard error: "error: <Code>: <message>".
void report_error(std::string_view code, std::string_view message);

}  // namespace halfspin::cli
