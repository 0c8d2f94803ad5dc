#pragma once

// Reference implementations used only by tests. They deliberately re-derive
// results from the raw files with their own parsing, sharing no code with
// the library beyond plain data types.

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "akshar/glyph.hpp"

#ifndef AKSHAR_DATA_DIR
#error "tests need AKSHAR_DATA_DIR"
#endif
#ifndef AKSHAR_TEST_DIR
#error "tests need AKSHAR_TEST_DIR"
#endif

namespace oracle {

inline std::filesystem::path data_dir()
{
    return AKSHAR_DATA_DIR;
}

inline std::filesystem::path test_dir()
{
    return AKSHAR_TEST_DIR;
}

inline std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open " + p.string());
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

inline std::vector<std::string> fields(const std::string& line, char sep = '\t')
{
    std::vector<std::string> out(1);
    for (char c : line) {
        if (c == sep)
            out.emplace_back();
        else
            out.back() += c;
    }
    return out;
}

inline std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        if (!l.empty() && l.back() == '\r')
            l.pop_back();
        if (!l.empty() && l[0] != '#')
            out.push_back(l);
    }
    return out;
}

// Minimal UTF-8 decoder for well-formed test data.
inline std::u32string decode_utf8(const std::string& s)
{
    std::u32string out;
    for (std::size_t i = 0; i < s.size();) {
        auto b = static_cast<unsigned char>(s[i]);
        int n = b < 0x80 ? 1 : b < 0xE0 ? 2 : b < 0xF0 ? 3 : 4;
        char32_t c = n == 1 ? b : n == 2 ? (b & 0x1F) : n == 3 ? (b & 0x0F) : (b & 0x07);
        for (int k = 1; k < n; ++k)
            c = (c << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
        out += c;
        i += n;
    }
    return out;
}

// --- code table -----------------------------------------------------------

struct TableRow {
    int row, cell;
    char32_t scalar;
};

// scalar -> (row, cell), read straight from the table file.
inline std::map<char32_t, std::pair<int, int>> read_table(const std::filesystem::path& p)
{
    std::map<char32_t, std::pair<int, int>> out;
    for (const auto& l : lines_of(slurp(p))) {
        if (l[0] == '@')
            continue;
        auto f = fields(l);
        out[static_cast<char32_t>(std::stoul(f[2], nullptr, 16))] = {std::stoi(f[0]), std::stoi(f[1])};
    }
    return out;
}

// --- fonts ----------------------------------------------------------------

struct RawBank {
    int level;
    std::size_t start;  // absolute file offset
    std::size_t length;
};

struct RawFont {
    int size = 0;
    std::string file;
    std::vector<RawBank> banks;
    int bpg() const { return size * size / 8; }
};

inline RawFont read_raw_font(std::string file)
{
    RawFont f;
    f.file = std::move(file);
    if (f.file.size() < 16 || f.file.compare(0, 4, "IFNT") != 0)
        throw std::runtime_error("not an IFNT file");
    f.size = static_cast<unsigned char>(f.file[4]);
    int n = static_cast<unsigned char>(f.file[5]);
    std::size_t at = 16;
    for (int b = 0; b < n; ++b) {
        const auto* p = reinterpret_cast<const unsigned char*>(f.file.data()) + 6 + b * 5;
        std::size_t len = p[1] | (p[2] << 8) | (p[3] << 16) | (static_cast<std::size_t>(p[4]) << 24);
        f.banks.push_back({p[0], at, len});
        at += len;
    }
    return f;
}

// Glyph bytes by direct seek: bank start + ((row - base) * 94 + cell - 1) * bpg.
// Level 2 banks start at row 56, the others at row 1; a level bank is
// preferred over a whole-plane bank.
inline std::string raw_glyph(const RawFont& f, int row, int cell)
{
    int want = row <= 55 ? 1 : 2;
    const RawBank* hit = nullptr;
    for (const auto& b : f.banks)
        if (b.level == want)
            hit = &b;
    if (!hit)
        for (const auto& b : f.banks)
            if (b.level == 0)
                hit = &b;
    if (!hit)
        throw std::runtime_error("no bank");
    int base = hit->level == 2 ? 56 : 1;
    std::size_t off = (static_cast<std::size_t>(row - base) * 94 + (cell - 1)) * f.bpg();
    if (off + f.bpg() > hit->length)
        throw std::runtime_error("outside bank");
    return f.file.substr(hit->start + off, f.bpg());
}

// Pixel-by-pixel blit into a PBM P4 image; every pixel is read by bit
// arithmetic on the raw glyph bytes.
inline std::string blit_pbm(const RawFont& f, const std::vector<akshar::PositionedGlyph>& line)
{
    int width = 0;
    for (const auto& g : line)
        width += g.advance;
    int height = f.size;
    std::vector<std::vector<bool>> px(height, std::vector<bool>(width, false));
    int pen = 0;
    for (const auto& g : line) {
        auto bytes = raw_glyph(f, g.glyph.row(), g.glyph.cell());
        for (int y = 0; y < f.size; ++y)
            for (int x = 0; x < f.size; ++x) {
                auto byte = static_cast<unsigned char>(bytes[y * (f.size / 8) + x / 8]);
                if (!((byte >> (7 - x % 8)) & 1))
                    continue;
                int tx = pen + g.dx + x, ty = g.dy + y;
                if (tx >= 0 && tx < width && ty >= 0 && ty < height)
                    px[ty][tx] = true;
            }
        pen += g.advance;
    }
    std::string out = "P4\n" + std::to_string(width) + " " + std::to_string(height) + "\n";
    int stride = (width + 7) / 8;
    for (int y = 0; y < height; ++y) {
        std::string row(stride, '\0');
        for (int x = 0; x < width; ++x)
            if (px[y][x])
                row[x / 8] = static_cast<char>(row[x / 8] | (0x80 >> (x % 8)));
        out += row;
    }
    return out;
}

// --- ime ------------------------------------------------------------------

struct ImeRow {
    std::string key;
    std::u32string output;
    std::uint64_t frequency;
    std::vector<std::pair<int, int>> codes;
};

inline std::vector<ImeRow> read_ime(const std::filesystem::path& p,
                                    const std::map<char32_t, std::pair<int, int>>& table)
{
    std::vector<ImeRow> out;
    for (const auto& l : lines_of(slurp(p))) {
        auto f = fields(l);
        ImeRow r{f[0], decode_utf8(f[1]), f.size() > 2 && !f[2].empty() ? std::stoull(f[2]) : 0, {}};
        for (char32_t c : r.output)
            r.codes.push_back(c < 0x80 ? std::pair{0, static_cast<int>(c)} : table.at(c));
        out.push_back(std::move(r));
    }
    return out;
}

struct Expected {
    std::string key;
    std::u32string output;
    std::uint64_t frequency;
    bool exact;
};

// Filter every row by prefix, then sort by the stated ranking.
inline std::vector<Expected> ime_candidates(const std::vector<ImeRow>& rows, const std::string& buffer)
{
    if (buffer.empty())
        return {};
    std::vector<const ImeRow*> hits;
    for (const auto& r : rows)
        if (r.key.size() >= buffer.size() && r.key.compare(0, buffer.size(), buffer) == 0)
            hits.push_back(&r);
    std::sort(hits.begin(), hits.end(), [&](const ImeRow* a, const ImeRow* b) {
        auto rank = [&](const ImeRow* r) {
            return std::make_tuple(r->key != buffer, ~r->frequency, r->codes, r->key);
        };
        return rank(a) < rank(b);
    });
    std::vector<Expected> out;
    for (const auto* r : hits)
        out.push_back({r->key, r->output, r->frequency, r->key == buffer});
    return out;
}

// --- coverage -------------------------------------------------------------

struct Counts {
    std::size_t l1 = 0, l2 = 0, other = 0;
};

inline Counts count_levels(const std::u32string& corpus,
                           const std::map<char32_t, std::pair<int, int>>& table)
{
    Counts c;
    for (char32_t ch : corpus) {
        auto it = table.find(ch);
        if (it == table.end())
            ++c.other;
        else if (it->second.first <= 55)
            ++c.l1;
        else
            ++c.l2;
    }
    return c;
}

}  // namespace oracle
