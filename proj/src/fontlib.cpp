#include "akshar/fontlib.hpp"

#include <algorithm>
#include <array>
#include <cstring>

#include "akshar/error.hpp"
#include "akshar/text.hpp"

namespace akshar {

GlyphSize parse_glyph_size(int px)
{
    switch (px) {
    case 16: return GlyphSize::Px16;
    case 24: return GlyphSize::Px24;
    case 48: return GlyphSize::Px48;
    default:
        throw Error(ErrorKind::ParseError,
                    "glyph size must be 16, 24 or 48, got " + std::to_string(px));
    }
}

std::size_t glyph_offset(CodePoint code, GlyphSize size) noexcept
{
    return static_cast<std::size_t>(code.linear()) * bytes_per_glyph(size);
}

int first_row(BankLevel level) noexcept
{
    return level == BankLevel::L2 ? kL2FirstRow : 1;
}

namespace {

std::uint32_t read_u32le(const std::uint8_t* p)
{
    return static_cast<std::uint32_t>(p[0]) | static_cast<std::uint32_t>(p[1]) << 8 |
           static_cast<std::uint32_t>(p[2]) << 16 | static_cast<std::uint32_t>(p[3]) << 24;
}

void write_u32le(std::uint8_t* p, std::uint32_t v)
{
    for (int i = 0; i < 4; ++i)
        p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

}  // namespace

FontLibrary FontLibrary::parse(std::vector<std::uint8_t> file, std::optional<GlyphSize> expected)
{
    if (file.size() < kFontHeaderSize || std::memcmp(file.data(), "IFNT", 4) != 0)
        throw Error(ErrorKind::BadMagic, "not an IFNT font file");
    FontLibrary lib;
    int px = file[4];
    if (px != 16 && px != 24 && px != 48)
        throw Error(ErrorKind::BadMagic, "unsupported glyph size " + std::to_string(px));
    lib.size_ = static_cast<GlyphSize>(px);
    if (expected && *expected != lib.size_)
        throw Error(ErrorKind::BadMagic, "font is " + std::to_string(px) + "px, expected " +
                                             std::to_string(pixels(*expected)) + "px");
    int count = file[5];
    if (count > 2)
        throw Error(ErrorKind::BadMagic, "at most two banks fit the header");

    const auto bpg = bytes_per_glyph(lib.size_);
    std::size_t cursor = 0;
    const std::size_t body = file.size() - kFontHeaderSize;
    for (int b = 0; b < count; ++b) {
        const std::uint8_t* entry = file.data() + 6 + 5 * b;
        if (entry[0] > 2)
            throw Error(ErrorKind::BadMagic, "bad bank level " + std::to_string(entry[0]));
        auto level = static_cast<BankLevel>(entry[0]);
        for (const auto& other : lib.banks_)
            if (other.level == level)
                throw Error(ErrorKind::BadMagic, "duplicate bank level");
        std::size_t length = read_u32le(entry + 1);
        if (length % bpg != 0)
            throw Error(ErrorKind::LengthNotMultiple,
                        "bank " + std::to_string(b) + " length " + std::to_string(length) +
                            " is not a multiple of " + std::to_string(bpg));
        if (cursor + length > body)
            throw Error(ErrorKind::TruncatedBank,
                        "bank " + std::to_string(b) + " needs " + std::to_string(length) +
                            " bytes, " + std::to_string(body - cursor) + " present",
                        kFontHeaderSize + cursor);
        lib.banks_.push_back({level, cursor, length});
        cursor += length;
    }
    if (cursor != body)
        throw Error(ErrorKind::LengthNotMultiple,
                    std::to_string(body - cursor) + " trailing bytes after the last bank",
                    kFontHeaderSize + cursor);
    lib.file_ = std::move(file);
    return lib;
}

FontLibrary FontLibrary::load(const std::filesystem::path& path, std::optional<GlyphSize> expected)
{
    auto bytes = read_file(path);
    return parse(std::vector<std::uint8_t>(bytes.begin(), bytes.end()), expected);
}

const FontLibrary::BankRegion* FontLibrary::bank_for(CodePoint code) const noexcept
{
    auto want = code.level() == Level::L1 ? BankLevel::L1 : BankLevel::L2;
    const BankRegion* plane = nullptr;
    for (const auto& b : banks_) {
        if (b.level == want)
            return &b;
        if (b.level == BankLevel::Plane)
            plane = &b;
    }
    return plane;
}

namespace {

std::optional<std::size_t> bank_relative(const FontLibrary::BankRegion& bank, CodePoint code,
                                         GlyphSize size)
{
    auto skip = glyph_offset(CodePoint(first_row(bank.level), 1), size);
    auto off = glyph_offset(code, size);
    if (off < skip || off - skip + bytes_per_glyph(size) > bank.length)
        return std::nullopt;
    return off - skip;
}

}  // namespace

std::size_t FontLibrary::file_offset(CodePoint code) const
{
    const auto* bank = bank_for(code);
    auto rel = bank ? bank_relative(*bank, code, size_) : std::nullopt;
    if (!rel)
        throw Error(ErrorKind::OutOfBank, "no glyph for " + to_string(code) + " in this font");
    return kFontHeaderSize + bank->offset + *rel;
}

bool FontLibrary::has_glyph(CodePoint code) const noexcept
{
    const auto* bank = bank_for(code);
    return bank && bank_relative(*bank, code, size_).has_value();
}

Glyph FontLibrary::get_glyph(CodePoint code) const
{
    auto at = file_offset(code);
    return Glyph{size_, std::span<const std::uint8_t>(file_).subspan(at, bytes_per_glyph(size_))};
}

std::vector<std::uint8_t> build_font(GlyphSize size, const std::vector<FontBank>& banks)
{
    if (banks.size() > 2)
        throw Error(ErrorKind::BadMagic, "at most two banks fit the header");
    std::vector<std::uint8_t> out(kFontHeaderSize, 0);
    std::memcpy(out.data(), "IFNT", 4);
    out[4] = static_cast<std::uint8_t>(size);
    out[5] = static_cast<std::uint8_t>(banks.size());
    for (std::size_t b = 0; b < banks.size(); ++b) {
        out[6 + 5 * b] = static_cast<std::uint8_t>(banks[b].level);
        write_u32le(out.data() + 7 + 5 * b, static_cast<std::uint32_t>(banks[b].body.size()));
    }
    for (const auto& b : banks)
        out.insert(out.end(), b.body.begin(), b.body.end());
    return out;
}

Raster::Raster(int width, int height)
    : width_(std::max(width, 0)), height_(std::max(height, 0)),
      bits_(stride() * static_cast<std::size_t>(height_), 0)
{
}

bool Raster::get(int x, int y) const noexcept
{
    if (x < 0 || y < 0 || x >= width_ || y >= height_)
        return false;
    return (bits_[static_cast<std::size_t>(y) * stride() + static_cast<std::size_t>(x) / 8] >>
            (7 - x % 8)) & 1;
}

void Raster::set(int x, int y) noexcept
{
    if (x < 0 || y < 0 || x >= width_ || y >= height_)
        return;
    bits_[static_cast<std::size_t>(y) * stride() + static_cast<std::size_t>(x) / 8] |=
        static_cast<std::uint8_t>(0x80 >> (x % 8));
}

Raster render_line(std::span<const PositionedGlyph> line, const FontLibrary& lib)
{
    const int size = pixels(lib.size());
    int width = 0;
    for (const auto& g : line)
        width += g.advance;
    Raster raster(width, size);
    int pen = 0;
    for (const auto& g : line) {
        auto glyph = lib.get_glyph(g.glyph);
        for (int y = 0; y < size; ++y)
            for (int x = 0; x < size; ++x)
                if (glyph.pixel(x, y))
                    raster.set(pen + g.dx + x, g.dy + y);
        pen += g.advance;
    }
    return raster;
}

std::string to_pbm(const Raster& raster)
{
    std::string out = "P4\n" + std::to_string(raster.width()) + " " +
                      std::to_string(raster.height()) + "\n";
    out.append(raster.bits().begin(), raster.bits().end());
    return out;
}

Raster parse_pbm(std::string_view pbm)
{
    auto fail = [] { throw Error(ErrorKind::ParseError, "not a binary PBM (P4) image"); };
    if (!pbm.starts_with("P4"))
        fail();
    std::size_t pos = 2;
    auto next_int = [&]() {
        while (pos < pbm.size()) {
            if (pbm[pos] == '#') {
                while (pos < pbm.size() && pbm[pos] != '\n')
                    ++pos;
            } else if (pbm[pos] == ' ' || pbm[pos] == '\n' || pbm[pos] == '\r' ||
                       pbm[pos] == '\t') {
                ++pos;
            } else {
                break;
            }
        }
        int v = 0;
        bool any = false;
        while (pos < pbm.size() && pbm[pos] >= '0' && pbm[pos] <= '9') {
            v = v * 10 + (pbm[pos++] - '0');
            any = true;
        }
        if (!any)
            fail();
        return v;
    };
    int w = next_int();
    int h = next_int();
    if (pos >= pbm.size() && !(w == 0 || h == 0))
        fail();
    ++pos;  // single whitespace byte before the raster
    Raster r(w, h);
    if (pbm.size() - std::min(pos, pbm.size()) != r.bits().size())
        fail();
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            auto byte = static_cast<std::uint8_t>(pbm[pos + static_cast<std::size_t>(y) * r.stride() +
                                                      static_cast<std::size_t>(x) / 8]);
            if ((byte >> (7 - x % 8)) & 1)
                r.set(x, y);
        }
    return r;
}

CodePoint ascii_glyph_code(char32_t c)
{
    if (c == U' ')
        return CodePoint(1, 1);
    if (c > 0x20 && c < 0x7F)
        return CodePoint(3, static_cast<int>(c) - 0x20);
    throw Error(ErrorKind::UnknownChar, format_scalar(c) + " has no ASCII glyph");
}

int ascii_advance(GlyphSize size) noexcept
{
    return pixels(size) / 2;
}

namespace {

// 3x5 hex digits, one row per nibble of the value (MSB = leftmost column).
constexpr std::array<std::array<std::uint8_t, 5>, 16> kDigits = {{
    {7, 5, 5, 5, 7}, {2, 6, 2, 2, 7}, {7, 1, 7, 4, 7}, {7, 1, 7, 1, 7},
    {5, 5, 7, 1, 1}, {7, 4, 7, 1, 7}, {7, 4, 7, 5, 7}, {7, 1, 1, 2, 2},
    {7, 5, 7, 5, 7}, {7, 5, 7, 1, 7}, {2, 5, 7, 5, 5}, {6, 5, 6, 5, 6},
    {7, 4, 4, 4, 7}, {6, 5, 5, 5, 6}, {7, 4, 6, 4, 7}, {7, 4, 6, 4, 4},
}};

using Canvas = std::array<std::array<bool, 16>, 16>;

void draw_digit(Canvas& c, int digit, int x0, int y0)
{
    for (int y = 0; y < 5; ++y)
        for (int x = 0; x < 3; ++x)
            if ((kDigits[static_cast<std::size_t>(digit)][static_cast<std::size_t>(y)] >> (2 - x)) & 1)
                c[static_cast<std::size_t>(y0 + y)][static_cast<std::size_t>(x0 + x)] = true;
}

void draw_box(Canvas& c, bool dashed)
{
    for (int i = 1; i <= 14; ++i) {
        if (dashed && i % 2 == 0)
            continue;
        auto k = static_cast<std::size_t>(i);
        c[1][k] = c[14][k] = c[k][1] = c[k][14] = true;
    }
}

Canvas char_canvas(char32_t scalar)
{
    Canvas c{};
    draw_box(c, false);
    draw_digit(c, (scalar >> 12) & 0xF, 4, 3);
    draw_digit(c, (scalar >> 8) & 0xF, 9, 3);
    draw_digit(c, (scalar >> 4) & 0xF, 4, 9);
    draw_digit(c, scalar & 0xF, 9, 9);
    return c;
}

Canvas ascii_canvas(char32_t ch)
{
    Canvas c{};
    draw_digit(c, (ch >> 4) & 0xF, 0, 5);
    draw_digit(c, ch & 0xF, 4, 5);
    for (std::size_t x = 0; x < 7; ++x)
        c[12][x] = true;
    return c;
}

Canvas variant_canvas(CodePoint code)
{
    Canvas c{};
    draw_box(c, true);
    draw_digit(c, code.row() / 10 % 10, 4, 3);
    draw_digit(c, code.row() % 10, 9, 3);
    draw_digit(c, code.cell() / 10 % 10, 4, 9);
    draw_digit(c, code.cell() % 10, 9, 9);
    return c;
}

void blit_scaled(std::vector<std::uint8_t>& body, std::size_t at, const Canvas& c, GlyphSize size)
{
    const int px = pixels(size);
    for (int y = 0; y < px; ++y)
        for (int x = 0; x < px; ++x)
            if (c[static_cast<std::size_t>(y * 16 / px)][static_cast<std::size_t>(x * 16 / px)])
                body[at + static_cast<std::size_t>(y) * row_bytes(size) + static_cast<std::size_t>(x) / 8] |=
                    static_cast<std::uint8_t>(0x80 >> (x % 8));
}

}  // namespace

std::vector<std::uint8_t> make_debug_font(const CodeTable& table,
                                          std::span<const CodePoint> extra_codes, GlyphSize size)
{
    std::vector<std::pair<CodePoint, Canvas>> glyphs;
    glyphs.emplace_back(CodePoint(1, 1), Canvas{});
    for (char32_t c = 0x21; c < 0x7F; ++c)
        glyphs.emplace_back(ascii_glyph_code(c), ascii_canvas(c));
    for (const auto& e : table.entries())
        glyphs.emplace_back(e.code, char_canvas(e.ch.scalar));
    for (const auto& code : extra_codes)
        glyphs.emplace_back(code, variant_canvas(code));

    int last_l1 = 0;
    int last_l2 = 0;
    for (const auto& [code, _] : glyphs) {
        auto& last = code.level() == Level::L1 ? last_l1 : last_l2;
        last = std::max(last, code.row());
    }

    const auto bpg = bytes_per_glyph(size);
    std::vector<FontBank> banks;
    banks.push_back({BankLevel::L1, std::vector<std::uint8_t>(
                                        static_cast<std::size_t>(last_l1) * kCells * bpg, 0)});
    if (last_l2)
        banks.push_back({BankLevel::L2,
                         std::vector<std::uint8_t>(
                             static_cast<std::size_t>(last_l2 - kL2FirstRow + 1) * kCells * bpg, 0)});
    for (const auto& [code, canvas] : glyphs) {
        auto& bank = code.level() == Level::L1 ? banks[0] : banks[1];
        auto skip = glyph_offset(CodePoint(first_row(bank.level), 1), size);
        blit_scaled(bank.body, glyph_offset(code, size) - skip, canvas, size);
    }
    return build_font(size, banks);
}

}  // namespace akshar
