#pragma once

// Packed monochrome bitmap fonts addressed by CodePoint.
//
// File layout (IFNT):
//   0   "IFNT"
//   4   u8 glyph size (16, 24 or 48)
//   5   u8 bank count (0..2)
//   6   per bank: u8 level, u32 little-endian byte length
//   16  bank bodies, contiguous, in header order
//
// Bank level 1 and 2 hold the rows of that level starting at its first row
// (1 and 56). Level 0 is a whole-plane bank starting at row 1 and serves any
// code without a bank of its own. Glyphs are row-major, MSB first, size/8
// bytes per row.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "akshar/codetable.hpp"
#include "akshar/glyph.hpp"

namespace akshar {

inline constexpr std::size_t kFontHeaderSize = 16;

enum class GlyphSize : std::uint8_t { Px16 = 16, Px24 = 24, Px48 = 48 };

GlyphSize parse_glyph_size(int pixels);

constexpr int pixels(GlyphSize s) noexcept { return static_cast<int>(s); }
constexpr std::size_t row_bytes(GlyphSize s) noexcept { return static_cast<std::size_t>(s) / 8; }
constexpr std::size_t bytes_per_glyph(GlyphSize s) noexcept
{
    return static_cast<std::size_t>(s) * static_cast<std::size_t>(s) / 8;
}

// ((row - 1) * 94 + (cell - 1)) * bytes_per_glyph: the glyph's position in a
// bank that starts at row 1.
std::size_t glyph_offset(CodePoint code, GlyphSize size) noexcept;

enum class BankLevel : std::uint8_t { Plane = 0, L1 = 1, L2 = 2 };

int first_row(BankLevel level) noexcept;

struct Glyph {
    GlyphSize size;
    std::span<const std::uint8_t> bits;

    bool pixel(int x, int y) const noexcept
    {
        auto b = bits[static_cast<std::size_t>(y) * row_bytes(size) + static_cast<std::size_t>(x) / 8];
        return (b >> (7 - x % 8)) & 1;
    }
};

class FontLibrary {
public:
    struct BankRegion {
        BankLevel level;
        std::size_t offset;  // into data(), i.e. after the header
        std::size_t length;
    };

    static FontLibrary parse(std::vector<std::uint8_t> file, std::optional<GlyphSize> expected = {});
    static FontLibrary load(const std::filesystem::path& path,
                            std::optional<GlyphSize> expected = {});

    GlyphSize size() const noexcept { return size_; }
    const std::vector<BankRegion>& banks() const noexcept { return banks_; }

    // The bank that serves a code, if any.
    const BankRegion* bank_for(CodePoint code) const noexcept;

    // Byte offset of a glyph from the start of the file.
    std::size_t file_offset(CodePoint code) const;

    Glyph get_glyph(CodePoint code) const;
    bool has_glyph(CodePoint code) const noexcept;

private:
    GlyphSize size_ = GlyphSize::Px16;
    std::vector<BankRegion> banks_;
    std::vector<std::uint8_t> file_;
};

// Serialises banks into an IFNT file.
struct FontBank {
    BankLevel level;
    std::vector<std::uint8_t> body;
};
std::vector<std::uint8_t> build_font(GlyphSize size, const std::vector<FontBank>& banks);

class Raster {
public:
    Raster(int width, int height);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t stride() const noexcept { return static_cast<std::size_t>(width_ + 7) / 8; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    bool get(int x, int y) const noexcept;
    void set(int x, int y) noexcept;

    friend bool operator==(const Raster&, const Raster&) = default;

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> bits_;
};

// Width is the sum of advances and height the glyph size; glyphs are ORed in
// at their pen positions and clipped to the raster.
Raster render_line(std::span<const PositionedGlyph> line, const FontLibrary& lib);

// Binary PBM: "P4\n<w> <h>\n" followed by the packed rows.
std::string to_pbm(const Raster& raster);
Raster parse_pbm(std::string_view pbm);

// Placeholder face: every assigned character is a box showing its scalar in
// hex, printable ASCII sits half-width in row 3, and each extra code (glyph
// variants referenced by shaping rules) is a dashed box labelled row/cell.
std::vector<std::uint8_t> make_debug_font(const CodeTable& table,
                                          std::span<const CodePoint> extra_codes,
                                          GlyphSize size);

// Glyph code used for printable ASCII and space, and their advance.
CodePoint ascii_glyph_code(char32_t c);
int ascii_advance(GlyphSize size) noexcept;

}  // namespace akshar
