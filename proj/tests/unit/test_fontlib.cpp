#include <doctest.h>

#include <random>
#include <set>

#include "akshar/error.hpp"
#include "akshar/fontlib.hpp"
#include "akshar/shaping.hpp"
#include "support/oracles.hpp"

using namespace akshar;

namespace {

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an akshar::Error");
    return ErrorKind::IoError;
}

std::vector<std::uint8_t> full_plane(GlyphSize size, std::uint32_t seed)
{
    std::mt19937 rng(seed);
    std::vector<std::uint8_t> body(kRows * kCells * bytes_per_glyph(size));
    for (auto& b : body)
        b = static_cast<std::uint8_t>(rng());
    return body;
}

std::vector<std::uint8_t> header(int size, std::vector<std::pair<int, std::uint32_t>> banks)
{
    std::vector<std::uint8_t> h = {'I', 'F', 'N', 'T', static_cast<std::uint8_t>(size),
                                   static_cast<std::uint8_t>(banks.size())};
    for (auto [level, len] : banks) {
        h.push_back(static_cast<std::uint8_t>(level));
        for (int i = 0; i < 4; ++i)
            h.push_back(static_cast<std::uint8_t>(len >> (8 * i)));
    }
    h.resize(16, 0);
    return h;
}

}  // namespace

TEST_CASE("glyph sizes and offsets")
{
    CHECK(bytes_per_glyph(GlyphSize::Px16) == 32);
    CHECK(bytes_per_glyph(GlyphSize::Px24) == 72);
    CHECK(bytes_per_glyph(GlyphSize::Px48) == 288);

    CHECK(glyph_offset(CodePoint(1, 1), GlyphSize::Px16) == 0);
    CHECK(glyph_offset(CodePoint(2, 1), GlyphSize::Px16) == 3008);
    CHECK(glyph_offset(CodePoint(1, 2), GlyphSize::Px48) == 288);

    CHECK(parse_glyph_size(24) == GlyphSize::Px24);
    CHECK(kind_of([] { parse_glyph_size(32); }) == ErrorKind::ParseError);
}

TEST_CASE("glyph offsets are injective and tile a full bank")
{
    for (auto size : {GlyphSize::Px16, GlyphSize::Px24, GlyphSize::Px48}) {
        std::set<std::size_t> seen;
        auto bpg = bytes_per_glyph(size);
        for (int r = 1; r <= kRows; ++r)
            for (int c = 1; c <= kCells; ++c) {
                auto off = glyph_offset(CodePoint(r, c), size);
                CHECK(off % bpg == 0);
                CHECK(off + bpg <= kRows * kCells * bpg);
                seen.insert(off);
            }
        CHECK(seen.size() == static_cast<std::size_t>(kRows * kCells));
        CHECK(*seen.rbegin() == (kRows * kCells - 1) * bpg);
    }
}

TEST_CASE("load_font")
{
    SUBCASE("a full plane bank loads")
    {
        auto file = build_font(GlyphSize::Px16, {{BankLevel::Plane, full_plane(GlyphSize::Px16, 1)}});
        CHECK(file.size() == kFontHeaderSize + 94 * 94 * 32);
        auto lib = FontLibrary::parse(file, GlyphSize::Px16);
        REQUIRE(lib.banks().size() == 1);
        CHECK(lib.banks()[0].length == 94u * 94u * 32u);
    }
    SUBCASE("empty and foreign files")
    {
        CHECK(kind_of([] { FontLibrary::parse({}); }) == ErrorKind::BadMagic);
        CHECK(kind_of([] { FontLibrary::parse(std::vector<std::uint8_t>(32, 'x')); }) == ErrorKind::BadMagic);
    }
    SUBCASE("a 33-byte tail")
    {
        auto file = header(16, {{1, 32}});
        file.resize(16 + 32 + 33, 0);
        CHECK(kind_of([&] { FontLibrary::parse(file); }) == ErrorKind::LengthNotMultiple);
    }
    SUBCASE("a bank whose length is not a multiple of the glyph size")
    {
        auto file = header(16, {{1, 33}});
        file.resize(16 + 33, 0);
        CHECK(kind_of([&] { FontLibrary::parse(file); }) == ErrorKind::LengthNotMultiple);
    }
    SUBCASE("a bank longer than the file")
    {
        auto file = header(16, {{1, 64}});
        file.resize(16 + 32, 0);
        CHECK(kind_of([&] { FontLibrary::parse(file); }) == ErrorKind::TruncatedBank);
    }
    SUBCASE("header checks")
    {
        auto file = header(16, {{1, 32}});
        file.resize(48, 0);
        CHECK(kind_of([&] { FontLibrary::parse(file, GlyphSize::Px24); }) == ErrorKind::BadMagic);
        auto bad_size = header(20, {});
        CHECK(kind_of([&] { FontLibrary::parse(bad_size); }) == ErrorKind::BadMagic);
        auto bad_level = header(16, {{7, 0}});
        CHECK(kind_of([&] { FontLibrary::parse(bad_level); }) == ErrorKind::BadMagic);
        auto twice = header(16, {{1, 0}, {1, 0}});
        CHECK(kind_of([&] { FontLibrary::parse(twice); }) == ErrorKind::BadMagic);
    }
    SUBCASE("missing file")
    {
        CHECK(kind_of([] { FontLibrary::load("/nonexistent/font.ifnt"); }) == ErrorKind::IoError);
    }
}

TEST_CASE("get_glyph")
{
    SUBCASE("an all-ones first cell")
    {
        std::vector<std::uint8_t> body(94 * 32, 0);
        std::fill(body.begin(), body.begin() + 32, 0xFF);
        auto lib = FontLibrary::parse(build_font(GlyphSize::Px16, {{BankLevel::L1, body}}));
        auto g = lib.get_glyph(CodePoint(1, 1));
        REQUIRE(g.bits.size() == 32);
        CHECK(std::all_of(g.bits.begin(), g.bits.end(), [](auto b) { return b == 0xFF; }));
        CHECK(g.pixel(15, 15));
        CHECK_FALSE(lib.get_glyph(CodePoint(1, 2)).pixel(0, 0));
    }
    SUBCASE("cells beyond the bank")
    {
        std::vector<std::uint8_t> body(94 * 32, 0);
        auto lib = FontLibrary::parse(build_font(GlyphSize::Px16, {{BankLevel::L1, body}}));
        CHECK(lib.has_glyph(CodePoint(1, 94)));
        CHECK(kind_of([&] { lib.get_glyph(CodePoint(2, 1)); }) == ErrorKind::OutOfBank);
        CHECK(kind_of([&] { lib.get_glyph(CodePoint(56, 1)); }) == ErrorKind::OutOfBank);
    }
    SUBCASE("level 2 banks start at row 56")
    {
        std::vector<std::uint8_t> l2(2 * 94 * 32, 0);
        l2[0] = 0x80;             // (56, 1)
        l2[94 * 32 + 32] = 0x40;  // (57, 2)
        auto lib = FontLibrary::parse(build_font(
            GlyphSize::Px16, {{BankLevel::L1, std::vector<std::uint8_t>(32, 0)}, {BankLevel::L2, l2}}));
        CHECK(lib.get_glyph(CodePoint(56, 1)).pixel(0, 0));
        CHECK(lib.get_glyph(CodePoint(57, 2)).pixel(1, 0));
        CHECK(kind_of([&] { lib.get_glyph(CodePoint(58, 1)); }) == ErrorKind::OutOfBank);
    }
    SUBCASE("slices match raw file reads for every cell of a full plane")
    {
        for (auto size : {GlyphSize::Px16, GlyphSize::Px24}) {
            auto file = build_font(size, {{BankLevel::Plane, full_plane(size, 9)}});
            auto lib = FontLibrary::parse(file);
            auto raw = oracle::read_raw_font(std::string(file.begin(), file.end()));
            for (int r = 1; r <= kRows; ++r)
                for (int c = 1; c <= kCells; ++c) {
                    auto g = lib.get_glyph(CodePoint(r, c));
                    REQUIRE(std::string(g.bits.begin(), g.bits.end()) == oracle::raw_glyph(raw, r, c));
                }
        }
    }
}

TEST_CASE("render_line")
{
    auto table = CodeTable::parse("16\t1\t0915\tDevanagari\tka\n16\t2\t0916\tDevanagari\tkha\n");
    auto file = make_debug_font(table, {}, GlyphSize::Px16);
    auto lib = FontLibrary::parse(file);
    auto raw = oracle::read_raw_font(std::string(file.begin(), file.end()));

    SUBCASE("empty input")
    {
        auto r = render_line({}, lib);
        CHECK(r.width() == 0);
        CHECK(r.height() == 16);
        CHECK(r.bits().empty());
        CHECK(to_pbm(r) == "P4\n0 16\n");
    }
    SUBCASE("a single glyph equals its bitmap")
    {
        std::vector<PositionedGlyph> line = {{CodePoint(16, 1), 0, 0, 16}};
        auto r = render_line(line, lib);
        auto g = lib.get_glyph(CodePoint(16, 1));
        REQUIRE(r.width() == 16);
        for (int y = 0; y < 16; ++y)
            for (int x = 0; x < 16; ++x)
                CHECK(r.get(x, y) == g.pixel(x, y));
    }
    SUBCASE("two glyphs concatenate, checked against the blit oracle")
    {
        std::vector<PositionedGlyph> line = {{CodePoint(16, 1), 0, 0, 16}, {CodePoint(16, 2), 0, 0, 16}};
        auto r = render_line(line, lib);
        CHECK(r.width() == 32);
        CHECK(to_pbm(r) == oracle::blit_pbm(raw, line));
    }
    SUBCASE("offsets, overlap and clipping")
    {
        std::vector<PositionedGlyph> line = {{CodePoint(16, 1), 0, 0, 12},
                                             {CodePoint(16, 2), -6, 3, 10},
                                             {CodePoint(3, 33), 4, -5, 8}};
        auto r = render_line(line, lib);
        CHECK(r.width() == 30);
        CHECK(to_pbm(r) == oracle::blit_pbm(raw, line));
    }
    SUBCASE("glyph errors propagate")
    {
        std::vector<PositionedGlyph> line = {{CodePoint(40, 1), 0, 0, 16}};
        CHECK(kind_of([&] { render_line(line, lib); }) == ErrorKind::OutOfBank);
    }
    SUBCASE("PBM round trip")
    {
        std::vector<PositionedGlyph> line = {{CodePoint(16, 2), 0, 0, 13}};
        auto r = render_line(line, lib);
        CHECK(parse_pbm(to_pbm(r)) == r);
        CHECK(kind_of([] { parse_pbm("P1\n1 1\n0"); }) == ErrorKind::ParseError);
    }
}

TEST_CASE("ASCII glyph codes")
{
    CHECK(ascii_glyph_code(U' ') == CodePoint(1, 1));
    CHECK(ascii_glyph_code(U'A') == CodePoint(3, 33));
    CHECK(ascii_glyph_code(U'~') == CodePoint(3, 94));
    CHECK(kind_of([] { ascii_glyph_code(U'\n'); }) == ErrorKind::UnknownChar);
    CHECK(ascii_advance(GlyphSize::Px24) == 12);
}

TEST_CASE("shipped fonts cover the table, the ASCII row and every rule glyph")
{
    auto table = CodeTable::load(oracle::data_dir() / "tables/indic.tsv");
    auto rules = RuleSet::load(oracle::data_dir() / "shaping/indic.rules", table);
    for (int px : {16, 24, 48}) {
        auto lib = FontLibrary::load(oracle::data_dir() / ("fonts/indic" + std::to_string(px) + ".ifnt"),
                                     parse_glyph_size(px));
        for (const auto& e : table.entries())
            CHECK(lib.has_glyph(e.code));
        for (char32_t c = 0x20; c < 0x7F; ++c)
            CHECK(lib.has_glyph(ascii_glyph_code(c)));
        for (auto code : rules.variant_codes())
            CHECK(lib.has_glyph(code));
    }
}

TEST_CASE("debug font scales the same drawing")
{
    auto table = CodeTable::parse("16\t1\t0915\tDevanagari\tka\n");
    auto small = FontLibrary::parse(make_debug_font(table, {}, GlyphSize::Px16));
    auto big = FontLibrary::parse(make_debug_font(table, {}, GlyphSize::Px48));
    auto g16 = small.get_glyph(CodePoint(16, 1));
    auto g48 = big.get_glyph(CodePoint(16, 1));
    for (int y = 0; y < 48; ++y)
        for (int x = 0; x < 48; ++x)
            REQUIRE(g48.pixel(x, y) == g16.pixel(x / 3, y / 3));
}
