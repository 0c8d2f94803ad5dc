#include "akshar/text.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "akshar/error.hpp"

namespace akshar {

void append_utf8(std::string& out, char32_t c)
{
    if (c < 0x80) {
        out += static_cast<char>(c);
    } else if (c < 0x800) {
        out += static_cast<char>(0xC0 | (c >> 6));
        out += static_cast<char>(0x80 | (c & 0x3F));
    } else if (c < 0x10000) {
        out += static_cast<char>(0xE0 | (c >> 12));
        out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (c & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (c >> 18));
        out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (c & 0x3F));
    }
}

std::string u32_to_utf8(std::u32string_view s)
{
    std::string out;
    out.reserve(s.size());
    for (char32_t c : s)
        append_utf8(out, c);
    return out;
}

std::u32string utf8_to_u32(std::string_view s)
{
    std::u32string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        auto b = static_cast<unsigned char>(s[i]);
        int extra;
        char32_t c;
        if (b < 0x80) {
            c = b;
            extra = 0;
        } else if ((b & 0xE0) == 0xC0) {
            c = b & 0x1F;
            extra = 1;
        } else if ((b & 0xF0) == 0xE0) {
            c = b & 0x0F;
            extra = 2;
        } else if ((b & 0xF8) == 0xF0) {
            c = b & 0x07;
            extra = 3;
        } else {
            throw Error(ErrorKind::ParseError, "invalid UTF-8 lead byte", i);
        }
        if (i + extra >= s.size() && extra > 0)
            throw Error(ErrorKind::ParseError, "truncated UTF-8 sequence", i);
        for (int k = 1; k <= extra; ++k) {
            auto t = static_cast<unsigned char>(s[i + k]);
            if ((t & 0xC0) != 0x80)
                throw Error(ErrorKind::ParseError, "invalid UTF-8 continuation",
                            i + k);
            c = (c << 6) | (t & 0x3F);
        }
        out += c;
        i += extra + 1;
    }
    return out;
}

std::string format_scalar(char32_t c)
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(c));
    return buf;
}

char32_t parse_hex_scalar(std::string_view text)
{
    auto t = trim(text);
    if (t.starts_with("U+") || t.starts_with("u+") || t.starts_with("0x") ||
        t.starts_with("0X"))
        t.remove_prefix(2);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value, 16);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() ||
        value > 0x10FFFF)
        throw Error(ErrorKind::ParseError,
                    "bad hex scalar '" + std::string(text) + "'");
    return static_cast<char32_t>(value);
}

char32_t parse_char_token(std::string_view token)
{
    if (token.size() > 2 && (token.starts_with("U+") || token.starts_with("0x")))
        return parse_hex_scalar(token);
    auto chars = utf8_to_u32(token);
    if (chars.size() != 1)
        throw Error(ErrorKind::ParseError,
                    "expected one character, got '" + std::string(token) + "'");
    return chars[0];
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

static bool is_space(char c)
{
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
}

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> parts;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i]))
            ++i;
        std::size_t start = i;
        while (i < s.size() && !is_space(s[i]))
            ++i;
        if (i > start)
            parts.push_back(s.substr(start, i - start));
    }
    return parts;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && is_space(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && is_space(s.back()))
        s.remove_suffix(1);
    return s;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::IoError, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorKind::IoError, "cannot write " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw Error(ErrorKind::IoError, "short write to " + path.string());
}

std::vector<Line> content_lines(std::string_view file)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    for (auto raw : split(file, '\n')) {
        ++number;
        if (!raw.empty() && raw.back() == '\r')
            raw.remove_suffix(1);
        auto t = trim(raw);
        if (t.empty() || t.front() == '#')
            continue;
        lines.push_back({number, raw});
    }
    return lines;
}

}  // namespace akshar
