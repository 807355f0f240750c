#pragma once

#include <optional>
#include <string>

#include "toricchi/fan.hpp"

namespace toricchi {

/// A parsed fan file. See docs/fan-format.md for the exact grammar.
struct FanDocument {
  std::optional<std::string> name;
  Fan fan;
};

/// Throws MalformedInput on invalid JSON, missing or unknown keys, or wrong
/// value types and shapes. Does not run validate_fan().
FanDocument parse_fan_document(const std::string& text);

/// Reads and parses a fan file. Throws MalformedInput if it cannot be read.
FanDocument load_fan_file(const std::string& path);

/// Canonical rendering: one key per line, rays and cones one per line.
std::string format_fan_document(const FanDocument& doc);

/// Parses "a1,...,ad" into a divisor. Throws MalformedInput.
WeilDivisor parse_divisor(const std::string& text);

}  // namespace toricchi
