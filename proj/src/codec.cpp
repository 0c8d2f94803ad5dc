#include "akshar/codec.hpp"

#include <array>

#include "akshar/error.hpp"
#include "akshar/text.hpp"

namespace akshar {

Bytes encode_internal(std::u32string_view text, const CodeTable& table)
{
    Bytes out;
    out.reserve(text.size() * 2);
    for (std::size_t i = 0; i < text.size(); ++i) {
        char32_t c = text[i];
        if (c < 0x80) {
            out.push_back(static_cast<std::uint8_t>(c));
            continue;
        }
        auto code = table.find_char(c);
        if (!code)
            throw Error(ErrorKind::NotAssigned, format_scalar(c) + " has no code", i);
        out.push_back(code->lead());
        out.push_back(code->trail());
    }
    return out;
}

namespace {

enum class Unit { Ascii, Pair, TruncatedPair, InvalidTrail, IllegalByte };

// Classifies the unit starting at stream[i].
Unit classify(std::span<const std::uint8_t> s, std::size_t i)
{
    std::uint8_t b = s[i];
    if (b < 0x80)
        return Unit::Ascii;
    if (!CodePoint::valid_byte(b))
        return Unit::IllegalByte;
    if (i + 1 >= s.size())
        return Unit::TruncatedPair;
    if (!CodePoint::valid_byte(s[i + 1]))
        return Unit::InvalidTrail;
    return Unit::Pair;
}

[[noreturn]] void raise(Unit u, std::size_t i)
{
    switch (u) {
    case Unit::TruncatedPair:
        throw Error(ErrorKind::TruncatedPair, "lead byte at end of stream", i);
    case Unit::InvalidTrail:
        throw Error(ErrorKind::InvalidTrail, "trail byte outside 0xA1..0xFE", i + 1);
    default:
        throw Error(ErrorKind::IllegalByte, "byte in 0x80..0xA0 or 0xFF", i);
    }
}

}  // namespace

std::u32string decode_internal(std::span<const std::uint8_t> stream, const CodeTable& table,
                               const DecodeOptions& options)
{
    std::u32string out;
    out.reserve(stream.size());
    std::size_t i = 0;
    while (i < stream.size()) {
        auto unit = classify(stream, i);
        if (unit == Unit::Ascii) {
            out += static_cast<char32_t>(stream[i]);
            ++i;
            continue;
        }
        if (unit == Unit::Pair) {
            auto code = CodePoint::from_bytes(stream[i], stream[i + 1]);
            if (const auto* ch = table.find_code(code)) {
                out += ch->scalar;
            } else if (options.lossy) {
                out += options.replacement;
            } else {
                throw Error(ErrorKind::UnassignedCode, to_string(code) + " is not assigned", i);
            }
            i += 2;
            continue;
        }
        if (!options.lossy)
            raise(unit, i);
        // Resynchronise on the next byte; a bad trail is re-read as a new unit.
        out += options.replacement;
        ++i;
    }
    return out;
}

void validate_internal(std::span<const std::uint8_t> stream)
{
    std::size_t i = 0;
    while (i < stream.size()) {
        auto unit = classify(stream, i);
        if (unit == Unit::Ascii)
            ++i;
        else if (unit == Unit::Pair)
            i += 2;
        else
            raise(unit, i);
    }
}

Bytes internal_to_interchange(std::span<const std::uint8_t> stream)
{
    Bytes out;
    out.reserve(stream.size() + 8);
    bool shifted = false;
    std::size_t i = 0;
    while (i < stream.size()) {
        auto unit = classify(stream, i);
        if (unit == Unit::Ascii) {
            if (stream[i] == kShiftOut || stream[i] == kShiftIn)
                throw Error(ErrorKind::IllegalByte,
                            "SO/SI control bytes cannot be carried in interchange code", i);
            if (shifted) {
                out.push_back(kShiftIn);
                shifted = false;
            }
            out.push_back(stream[i]);
            ++i;
        } else if (unit == Unit::Pair) {
            if (!shifted) {
                out.push_back(kShiftOut);
                shifted = true;
            }
            out.push_back(static_cast<std::uint8_t>(stream[i] - 0x80));
            out.push_back(static_cast<std::uint8_t>(stream[i + 1] - 0x80));
            i += 2;
        } else {
            raise(unit, i);
        }
    }
    if (shifted)
        out.push_back(kShiftIn);
    return out;
}

Bytes interchange_to_internal(std::span<const std::uint8_t> stream)
{
    auto in_range = [](std::uint8_t b) { return b >= 0x21 && b <= 0x7E; };
    Bytes out;
    out.reserve(stream.size());
    bool shifted = false;
    std::size_t i = 0;
    while (i < stream.size()) {
        std::uint8_t b = stream[i];
        if (!shifted) {
            if (b == kShiftOut)
                shifted = true;
            else if (b == kShiftIn)
                throw Error(ErrorKind::FramingError, "SI outside a shift region", i);
            else if (b >= 0x80)
                throw Error(ErrorKind::IllegalByte, "8-bit byte in interchange stream", i);
            else
                out.push_back(b);
            ++i;
            continue;
        }
        if (b == kShiftIn) {
            shifted = false;
            ++i;
            continue;
        }
        if (b == kShiftOut)
            throw Error(ErrorKind::FramingError, "SO inside a shift region", i);
        if (!in_range(b))
            throw Error(ErrorKind::IllegalByte, "byte outside 0x21..0x7E in shift region", i);
        if (i + 1 >= stream.size() || stream[i + 1] == kShiftIn)
            throw Error(ErrorKind::TruncatedPair, "odd byte count in shift region", i);
        if (!in_range(stream[i + 1]))
            throw Error(ErrorKind::InvalidTrail, "trail byte outside 0x21..0x7E", i + 1);
        out.push_back(static_cast<std::uint8_t>(b + 0x80));
        out.push_back(static_cast<std::uint8_t>(stream[i + 1] + 0x80));
        i += 2;
    }
    if (shifted)
        throw Error(ErrorKind::FramingError, "unterminated shift region", stream.size());
    return out;
}

Fallback parse_fallback(std::string_view name)
{
    if (name == "strict")
        return Fallback::Strict;
    if (name == "passthrough")
        return Fallback::Passthrough;
    if (name == "mark")
        return Fallback::Mark;
    throw Error(ErrorKind::ParseError, "unknown fallback '" + std::string(name) + "'");
}

bool is_parallel_script(Script s) noexcept
{
    return s == Script::Devanagari || s == Script::Bengali || s == Script::Telugu;
}

char32_t block_base(Script s)
{
    switch (s) {
    case Script::Devanagari: return 0x0900;
    case Script::Bengali: return 0x0980;
    case Script::Telugu: return 0x0C00;
    default:
        throw Error(ErrorKind::NoCounterpart,
                    std::string(to_string(s)) + " is not on the shared Indic chart");
    }
}

std::u32string transliterate_parallel(std::u32string_view text, Script from, Script to,
                                      const CodeTable& table, Fallback fallback)
{
    char32_t from_base = block_base(from);
    char32_t to_base = block_base(to);
    std::u32string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char32_t c = text[i];
        if (c < from_base || c >= from_base + 0x80) {
            out += c;
            continue;
        }
        char32_t target = c - from_base + to_base;
        const auto code = table.find_char(target);
        if (code && table.lookup_code(*code).script == to) {
            out += target;
            continue;
        }
        switch (fallback) {
        case Fallback::Strict:
            throw Error(ErrorKind::NoCounterpart,
                        format_scalar(c) + " has no " + std::string(to_string(to)) +
                            " counterpart",
                        i);
        case Fallback::Passthrough:
            out += c;
            break;
        case Fallback::Mark:
            out += U'*';
            out += c;
            break;
        }
    }
    return out;
}

namespace {

struct RomanChart {
    std::array<const char*, 0x80> independent{};  // vowels, signs, digits
    std::array<const char*, 0x80> consonant{};
    std::array<const char*, 0x80> matra{};
    char32_t virama = 0x4D;
};

RomanChart make_chart(Script script)
{
    RomanChart c;
    const std::pair<int, const char*> vowels[] = {
        {0x05, "a"}, {0x06, "A"}, {0x07, "i"}, {0x08, "I"}, {0x09, "u"}, {0x0A, "U"},
        {0x0B, "R"}, {0x0C, "lR"}, {0x0F, "e"}, {0x10, "ai"}, {0x13, "o"}, {0x14, "au"},
        {0x01, "M"}, {0x02, "M"}, {0x03, "H"}};
    const std::pair<int, const char*> matras[] = {
        {0x3E, "A"}, {0x3F, "i"}, {0x40, "I"}, {0x41, "u"}, {0x42, "U"}, {0x43, "R"},
        {0x47, "e"}, {0x48, "ai"}, {0x4B, "o"}, {0x4C, "au"}};
    const std::pair<int, const char*> consonants[] = {
        {0x15, "k"},  {0x16, "kh"}, {0x17, "g"},  {0x18, "gh"}, {0x19, "G"},  {0x1A, "c"},
        {0x1B, "ch"}, {0x1C, "j"},  {0x1D, "jh"}, {0x1E, "J"},  {0x1F, "T"},  {0x20, "Th"},
        {0x21, "D"},  {0x22, "Dh"}, {0x23, "N"},  {0x24, "t"},  {0x25, "th"}, {0x26, "d"},
        {0x27, "dh"}, {0x28, "n"},  {0x29, "n"},  {0x2A, "p"},  {0x2B, "ph"}, {0x2C, "b"},
        {0x2D, "bh"}, {0x2E, "m"},  {0x2F, "y"},  {0x30, "r"},  {0x31, "r"},  {0x32, "l"},
        {0x33, "L"},  {0x35, "v"},  {0x36, "z"},  {0x37, "S"},  {0x38, "s"},  {0x39, "h"}};
    static const char* const digits[] = {"0", "1", "2", "3", "4", "5", "6", "7", "8", "9"};
    for (auto [off, s] : vowels)
        c.independent[off] = s;
    for (auto [off, s] : matras)
        c.matra[off] = s;
    for (auto [off, s] : consonants)
        c.consonant[off] = s;
    for (int d = 0; d < 10; ++d)
        c.independent[0x66 + d] = digits[d];
    if (script == Script::Telugu) {
        // Telugu distinguishes short and long e/o.
        c.independent[0x0E] = "e";
        c.independent[0x0F] = "E";
        c.independent[0x12] = "o";
        c.independent[0x13] = "O";
        c.matra[0x46] = "e";
        c.matra[0x47] = "E";
        c.matra[0x4A] = "o";
        c.matra[0x4B] = "O";
    }
    if (script == Script::Devanagari) {
        c.independent[0x64] = ".";
        c.independent[0x65] = "..";
    }
    return c;
}

const RomanChart& chart_for(Script s)
{
    static const RomanChart deva = make_chart(Script::Devanagari);
    static const RomanChart beng = make_chart(Script::Bengali);
    static const RomanChart telu = make_chart(Script::Telugu);
    switch (s) {
    case Script::Bengali: return beng;
    case Script::Telugu: return telu;
    default: return deva;
    }
}

}  // namespace

std::string romanize_hk(std::u32string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char32_t c = text[i];
        const RomanChart* chart = nullptr;
        char32_t base = 0;
        for (auto s : {Script::Devanagari, Script::Bengali, Script::Telugu}) {
            base = block_base(s);
            if (c >= base && c < base + 0x80) {
                chart = &chart_for(s);
                break;
            }
        }
        if (!chart) {
            append_utf8(out, c);
            continue;
        }
        auto off = static_cast<std::size_t>(c - base);
        if (const char* cons = chart->consonant[off]) {
            out += cons;
            auto in_block = [&](std::size_t j) {
                return j < text.size() && text[j] >= base && text[j] < base + 0x80;
            };
            if (in_block(i + 1) && text[i + 1] - base == 0x3C)
                ++i;  // nukta carries no romanization of its own
            auto noff = in_block(i + 1) ? static_cast<std::size_t>(text[i + 1] - base) : 0;
            if (in_block(i + 1) && noff == chart->virama) {
                ++i;
            } else if (in_block(i + 1) && chart->matra[noff]) {
                out += chart->matra[noff];
                ++i;
            } else {
                out += 'a';
            }
        } else if (const char* ind = chart->independent[off]) {
            out += ind;
        } else if (const char* m = chart->matra[off]) {
            out += m;
        } else if (off != chart->virama) {
            append_utf8(out, c);
        }
    }
    return out;
}

}  // namespace akshar
