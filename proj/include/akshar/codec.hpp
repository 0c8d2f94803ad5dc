#pragma once

// Byte-level codecs over a CodeTable.
//
// Internal code: ASCII bytes (< 0x80) pass through as single units; every
// assigned character becomes the pair (0xA0 + row, 0xA0 + cell).
//
// Interchange code: the 7-bit form used on the wire. Each double-byte pair
// has 0x80 subtracted from both bytes and runs of pairs are framed by SO
// (0x0E) ... SI (0x0F). ASCII outside the frames is unchanged.

#include <cstdint>
#include <string>
#include <span>
#include <string_view>
#include <vector>

#include "akshar/codetable.hpp"

namespace akshar {

using Bytes = std::vector<std::uint8_t>;

inline constexpr std::uint8_t kShiftOut = 0x0E;
inline constexpr std::uint8_t kShiftIn = 0x0F;

Bytes encode_internal(std::u32string_view text, const CodeTable& table);

struct DecodeOptions {
    bool lossy = false;
    char32_t replacement = U'�';
};

std::u32string decode_internal(std::span<const std::uint8_t> stream, const CodeTable& table,
                               const DecodeOptions& options = {});

// Checks framing only (no table lookup); throws on the first violation.
void validate_internal(std::span<const std::uint8_t> stream);

Bytes internal_to_interchange(std::span<const std::uint8_t> stream);
Bytes interchange_to_internal(std::span<const std::uint8_t> stream);

enum class Fallback { Strict, Passthrough, Mark };

Fallback parse_fallback(std::string_view name);

// Scripts laid out on the shared ISCII-derived chart: same letter, same
// offset within each script's 128-scalar block.
bool is_parallel_script(Script s) noexcept;
char32_t block_base(Script s);

std::u32string transliterate_parallel(std::u32string_view text, Script from, Script to,
                                      const CodeTable& table,
                                      Fallback fallback = Fallback::Strict);

// Harvard-Kyoto romanization of Devanagari, Bengali and Telugu letters
// (inherent vowel written out, virama suppresses it). Other characters are
// copied unchanged.
std::string romanize_hk(std::u32string_view text);

}  // namespace akshar
