#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace refrank::strings {

std::string trim(std::string_view s);

/// Collapses every run of whitespace (space, tab, CR, LF, FF, VT) to one space.
std::string collapse_whitespace(std::string_view s);

std::string to_lower_ascii(std::string_view s);

/// Canonical form used for name equality: trimmed, inner whitespace
/// collapsed, ASCII-lowercased. Non-ASCII bytes pass through unchanged.
std::string fold_name(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

std::string replace_all(std::string s, std::string_view from, std::string_view to);

bool contains_digit(std::string_view s);

/// Decodes bytes as UTF-8, replacing every invalid sequence with U+FFFD.
/// Total: never fails, output is always valid UTF-8.
std::string utf8_sanitize(std::string_view bytes);

}  // namespace refrank::strings
