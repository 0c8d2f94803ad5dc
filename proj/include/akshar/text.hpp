#pragma once

// Small text utilities shared by the resource loaders: UTF-8 conversion,
// tab-separated line splitting and char-token parsing.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace akshar {

std::u32string utf8_to_u32(std::string_view s);
std::string u32_to_utf8(std::u32string_view s);
void append_utf8(std::string& out, char32_t c);

// Formats a scalar as U+XXXX (at least four hex digits).
std::string format_scalar(char32_t c);

// Accepts "U+0915", "0x0915", or a single literal UTF-8 character.
char32_t parse_char_token(std::string_view token);

// Parses bare hex ("0915"), optionally prefixed with U+ or 0x.
char32_t parse_hex_scalar(std::string_view text);

std::vector<std::string_view> split(std::string_view s, char sep);
std::vector<std::string_view> split_ws(std::string_view s);
std::string_view trim(std::string_view s);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

// One logical line of a tab-separated resource file. Blank lines and lines
// starting with '#' are skipped by content_lines.
struct Line {
    std::size_t number;
    std::string_view text;
};
std::vector<Line> content_lines(std::string_view file);

}  // namespace akshar
