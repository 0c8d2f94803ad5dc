#pragma once

// Character sequence -> positioned glyph sequence.
//
// Rules are literal char patterns applied leftmost-longest in one pass; ties
// go to the rule that appears first in the file. Characters no rule covers
// use their default glyph: the character's own code for table characters,
// row 3 (row 1 for space) at half width for ASCII.
//
// Rule file, tab-separated:
//   Virama          <char>          (may repeat, one per script)
//   Class           <name>  <char or range U+0915-U+0939> ...
//   PreBaseReorder  <pattern>  <glyph specs>
//   AttachAbove     ...
//   AttachBelow     ...
//   ConjunctSubst   ...
// Patterns are space-separated chars (U+XXXX or a literal character) or
// $Class tokens. A glyph spec is base[,dx,dy[,advance]] where base is $n
// (default glyph of the n-th pattern char), a char, or row.cell. Offsets and
// advances are pixels at the 16px design size and scale with the font.

#include <array>
#include <cstdint>
#include <map>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "akshar/codetable.hpp"
#include "akshar/fontlib.hpp"
#include "akshar/glyph.hpp"

namespace akshar {

enum class RuleKind { PreBaseReorder, AttachAbove, AttachBelow, ConjunctSubst };

std::string_view to_string(RuleKind k) noexcept;

struct ShapingRule {
    RuleKind kind;
    std::u32string pattern;
    std::vector<PositionedGlyph> replacement;  // design-size units
    std::size_t source_line = 0;
};

class RuleSet {
public:
    // Validates every rule, expands classes, and rejects rule sets whose glyph
    // output could be read back in more than one way.
    static RuleSet parse(std::string_view text, const CodeTable& table);
    static RuleSet load(const std::filesystem::path& path, const CodeTable& table);
    static RuleSet from_rules(std::vector<ShapingRule> rules, const CodeTable& table,
                              std::u32string_view viramas = {});

    const std::vector<ShapingRule>& rules() const noexcept { return rules_; }
    std::size_t max_pattern() const noexcept { return max_pattern_; }

    // Glyph codes referenced by rules that are not any character's own code.
    std::vector<CodePoint> variant_codes() const;

    std::optional<PositionedGlyph> default_glyph(char32_t c) const;

    // Index of the first rule with this exact pattern.
    std::optional<std::size_t> find_pattern(std::u32string_view pattern) const;

    // Every character with a default glyph (table chars plus printable ASCII).
    std::u32string alphabet() const;

private:
    std::unordered_map<char32_t, CodePoint> defaults_;
    std::vector<ShapingRule> rules_;
    std::unordered_map<std::u32string, std::size_t> by_pattern_;
    std::size_t max_pattern_ = 0;
    // Per glyph size: every glyph sequence shape() can emit for one token,
    // mapped back to the characters it came from.
    std::array<std::map<std::vector<std::uint64_t>, std::u32string>, 3> codewords_;

public:
    const std::map<std::vector<std::uint64_t>, std::u32string>& codewords(GlyphSize size) const;
};

std::vector<PositionedGlyph> shape(std::u32string_view chars, const RuleSet& rules,
                                   GlyphSize size = GlyphSize::Px16);

std::u32string decompose(std::span<const PositionedGlyph> glyphs, const RuleSet& rules,
                         GlyphSize size = GlyphSize::Px16);

std::uint64_t glyph_key(const PositionedGlyph& g) noexcept;

// Sardinas-Patterson test over sequences of glyph keys.
bool uniquely_decodable(const std::vector<std::vector<std::uint64_t>>& code);

}  // namespace akshar
