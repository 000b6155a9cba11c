#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace morphcx::text {

/// Decodes UTF-8. Invalid bytes decode to U+FFFD one byte at a time, so the
/// result is total over arbitrary input.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);
void append_utf8(std::string& out, char32_t cp);

/// Number of code points in a UTF-8 string.
std::size_t utf8_length(std::string_view s);

/// Lowercases using the C.UTF-8 wide ctype facet when available, ASCII otherwise.
std::string lowercase(std::string_view s);

std::vector<std::string_view> split(std::string_view s, char sep);
std::string_view trim(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// Shortest round-trippable decimal form of a double ("NA" is not produced here).
std::string format_double(double v);

/// 64-bit FNV-1a, stable across platforms; used to derive random streams from ids.
std::uint64_t fnv1a64(std::string_view s);

}  // namespace morphcx::text
