#include "akshar/shaping.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <set>

#include "akshar/error.hpp"
#include "akshar/text.hpp"

namespace akshar {

std::string_view to_string(RuleKind k) noexcept
{
    switch (k) {
    case RuleKind::PreBaseReorder: return "PreBaseReorder";
    case RuleKind::AttachAbove: return "AttachAbove";
    case RuleKind::AttachBelow: return "AttachBelow";
    case RuleKind::ConjunctSubst: return "ConjunctSubst";
    }
    return "PreBaseReorder";
}

namespace {

constexpr int kDesign = 16;

std::size_t size_index(GlyphSize s) noexcept
{
    return s == GlyphSize::Px16 ? 0 : s == GlyphSize::Px24 ? 1 : 2;
}

int scale(int v, GlyphSize size) noexcept
{
    int num = v * pixels(size);
    // floor division keeps the mapping injective for negative offsets too
    return num >= 0 ? num / kDesign : -((-num + kDesign - 1) / kDesign);
}

PositionedGlyph scaled(PositionedGlyph g, GlyphSize size) noexcept
{
    g.dx = scale(g.dx, size);
    g.dy = scale(g.dy, size);
    g.advance = scale(g.advance, size);
    return g;
}

[[noreturn]] void rule_error(std::size_t line, const std::string& what)
{
    throw Error(ErrorKind::InvalidRule,
                (line ? "line " + std::to_string(line) + ": " : std::string()) + what);
}

int parse_num(std::string_view s, std::size_t line)
{
    s = trim(s);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        rule_error(line, "bad number '" + std::string(s) + "'");
    return v;
}

RuleKind parse_kind(std::string_view s, std::size_t line)
{
    for (auto k : {RuleKind::PreBaseReorder, RuleKind::AttachAbove, RuleKind::AttachBelow,
                   RuleKind::ConjunctSubst})
        if (to_string(k) == s)
            return k;
    rule_error(line, "unknown rule kind '" + std::string(s) + "'");
}

// A replacement glyph before $n references are bound to pattern chars.
struct GlyphTemplate {
    int pattern_ref = 0;  // 1-based, 0 when the base is a fixed code
    std::optional<CodePoint> code;
    std::optional<char32_t> ch;
    int dx = 0;
    int dy = 0;
    std::optional<int> advance;
};

GlyphTemplate parse_glyph_spec(std::string_view spec, std::size_t line)
{
    auto parts = split(spec, ',');
    if (parts.size() != 1 && parts.size() != 3 && parts.size() != 4)
        rule_error(line, "glyph spec '" + std::string(spec) + "' needs base[,dx,dy[,advance]]");
    GlyphTemplate t;
    auto base = parts[0];
    if (base.starts_with("$")) {
        t.pattern_ref = parse_num(base.substr(1), line);
        if (t.pattern_ref < 1)
            rule_error(line, "pattern reference must be $1 or later");
    } else if (auto dot = base.find('.'); dot != std::string_view::npos && base.size() > 2 &&
                                           base[0] >= '0' && base[0] <= '9') {
        int row = parse_num(base.substr(0, dot), line);
        int cell = parse_num(base.substr(dot + 1), line);
        if (row < 1 || row > kRows || cell < 1 || cell > kCells)
            rule_error(line, "glyph code " + std::string(base) + " outside 1..94");
        t.code = CodePoint(row, cell);
    } else {
        try {
            t.ch = parse_char_token(base);
        } catch (const Error& e) {
            rule_error(line, e.detail());
        }
    }
    if (parts.size() >= 3) {
        t.dx = parse_num(parts[1], line);
        t.dy = parse_num(parts[2], line);
    }
    if (parts.size() == 4)
        t.advance = parse_num(parts[3], line);
    return t;
}

}  // namespace

std::uint64_t glyph_key(const PositionedGlyph& g) noexcept
{
    auto u16 = [](int v) { return static_cast<std::uint64_t>(static_cast<std::uint16_t>(v)); };
    return static_cast<std::uint64_t>(g.glyph.row()) << 56 |
           static_cast<std::uint64_t>(g.glyph.cell()) << 48 | u16(g.dx) << 32 | u16(g.dy) << 16 |
           u16(g.advance);
}

bool uniquely_decodable(const std::vector<std::vector<std::uint64_t>>& code)
{
    using Word = std::vector<std::uint64_t>;
    std::set<Word> words(code.begin(), code.end());
    if (words.size() != code.size())
        return false;
    for (const auto& w : words)
        if (w.empty())
            return false;

    auto is_proper_prefix = [](const Word& p, const Word& w) {
        return p.size() < w.size() && std::equal(p.begin(), p.end(), w.begin());
    };

    // Dangling suffixes; the code is uniquely decodable iff none is a codeword.
    std::set<Word> seen;
    std::deque<Word> pending;
    auto push = [&](Word w) {
        if (seen.insert(w).second)
            pending.push_back(std::move(w));
    };
    for (const auto& a : words)
        for (const auto& b : words)
            if (is_proper_prefix(a, b))
                push(Word(b.begin() + static_cast<std::ptrdiff_t>(a.size()), b.end()));
    while (!pending.empty()) {
        Word s = std::move(pending.front());
        pending.pop_front();
        if (words.count(s))
            return false;
        for (const auto& w : words) {
            if (is_proper_prefix(s, w))
                push(Word(w.begin() + static_cast<std::ptrdiff_t>(s.size()), w.end()));
            else if (is_proper_prefix(w, s))
                push(Word(s.begin() + static_cast<std::ptrdiff_t>(w.size()), s.end()));
        }
    }
    return true;
}

std::optional<PositionedGlyph> RuleSet::default_glyph(char32_t c) const
{
    if (auto it = defaults_.find(c); it != defaults_.end())
        return PositionedGlyph{it->second, 0, 0, kDesign};
    if (c >= 0x20 && c < 0x7F)
        return PositionedGlyph{ascii_glyph_code(c), 0, 0, kDesign / 2};
    return std::nullopt;
}

std::optional<std::size_t> RuleSet::find_pattern(std::u32string_view pattern) const
{
    if (auto it = by_pattern_.find(std::u32string(pattern)); it != by_pattern_.end())
        return it->second;
    return std::nullopt;
}

std::u32string RuleSet::alphabet() const
{
    std::u32string out;
    for (char32_t c = 0x20; c < 0x7F; ++c)
        out += c;
    std::vector<char32_t> chars;
    for (const auto& [c, _] : defaults_)
        chars.push_back(c);
    std::sort(chars.begin(), chars.end());
    out.append(chars.begin(), chars.end());
    return out;
}

std::vector<CodePoint> RuleSet::variant_codes() const
{
    std::set<CodePoint> codes;
    std::set<CodePoint> own;
    for (const auto& [_, code] : defaults_)
        own.insert(code);
    for (const auto& r : rules_)
        for (const auto& g : r.replacement)
            if (!own.count(g.glyph) && g.glyph.row() != 3 && g.glyph != CodePoint(1, 1))
                codes.insert(g.glyph);
    return {codes.begin(), codes.end()};
}

const std::map<std::vector<std::uint64_t>, std::u32string>& RuleSet::codewords(GlyphSize size) const
{
    return codewords_[size_index(size)];
}

RuleSet RuleSet::from_rules(std::vector<ShapingRule> rules, const CodeTable& table,
                            std::u32string_view viramas)
{
    RuleSet set;
    for (const auto& e : table.entries())
        set.defaults_.emplace(e.ch.scalar, e.code);

    for (std::size_t i = 0; i < rules.size(); ++i) {
        const auto& r = rules[i];
        const auto line = r.source_line;
        if (r.pattern.empty())
            rule_error(line, "empty pattern");
        for (char32_t c : r.pattern)
            if (!set.default_glyph(c))
                rule_error(line, format_scalar(c) + " in pattern has no glyph");
        if (r.kind == RuleKind::ConjunctSubst) {
            if (viramas.empty())
                rule_error(line, "ConjunctSubst needs a Virama declaration");
            if (r.pattern.find_first_of(viramas) == std::u32string::npos)
                rule_error(line, "ConjunctSubst pattern has no virama");
            if (r.replacement.empty())
                rule_error(line, "empty replacement");
        } else if (r.replacement.size() != r.pattern.size()) {
            rule_error(line, std::string(to_string(r.kind)) +
                                 " must emit one glyph per pattern char");
        }
        for (const auto& g : r.replacement)
            if (std::abs(g.dx) > kDesign || std::abs(g.dy) > kDesign || g.advance < 0 ||
                g.advance > kDesign)
                rule_error(line, "offsets must stay within the 16px design cell");
        set.max_pattern_ = std::max(set.max_pattern_, r.pattern.size());
        set.by_pattern_.try_emplace(r.pattern, i);
    }
    set.rules_ = std::move(rules);

    // Codewords: one per default glyph, one per live rule.
    std::map<std::vector<std::uint64_t>, std::u32string> design;
    auto add = [&](std::vector<std::uint64_t> word, std::u32string chars, std::size_t line) {
        auto [it, fresh] = design.emplace(std::move(word), chars);
        if (!fresh)
            rule_error(line, "glyph output of " + u32_to_utf8(chars) +
                                 " is indistinguishable from that of " + u32_to_utf8(it->second));
    };
    for (char32_t c : set.alphabet())
        add({glyph_key(*set.default_glyph(c))}, std::u32string(1, c), 0);
    for (const auto& [pattern, index] : set.by_pattern_) {
        std::vector<std::uint64_t> word;
        for (const auto& g : set.rules_[index].replacement)
            word.push_back(glyph_key(g));
        add(std::move(word), pattern, set.rules_[index].source_line);
    }
    std::vector<std::vector<std::uint64_t>> words;
    for (const auto& [w, _] : design)
        words.push_back(w);
    if (!uniquely_decodable(words))
        rule_error(0, "rule outputs are ambiguous: some glyph sequence has two readings");

    for (auto size : {GlyphSize::Px16, GlyphSize::Px24, GlyphSize::Px48}) {
        auto& out = set.codewords_[size_index(size)];
        for (char32_t c : set.alphabet())
            out.emplace(std::vector<std::uint64_t>{glyph_key(scaled(*set.default_glyph(c), size))},
                        std::u32string(1, c));
        for (const auto& [pattern, index] : set.by_pattern_) {
            std::vector<std::uint64_t> word;
            for (const auto& g : set.rules_[index].replacement)
                word.push_back(glyph_key(scaled(g, size)));
            out.emplace(std::move(word), pattern);
        }
    }
    return set;
}

RuleSet RuleSet::parse(std::string_view text, const CodeTable& table)
{
    std::u32string viramas;
    std::unordered_map<std::string, std::u32string> classes;
    std::vector<ShapingRule> rules;

    for (const auto& line : content_lines(text)) {
        auto fields = split(line.text, '\t');
        auto kind = trim(fields[0]);
        if (kind == "Virama") {
            if (fields.size() != 2)
                rule_error(line.number, "expected Virama<TAB>char");
            try {
                viramas += parse_char_token(trim(fields[1]));
            } catch (const Error& e) {
                rule_error(line.number, e.detail());
            }
            continue;
        }
        if (kind == "Class") {
            if (fields.size() != 3)
                rule_error(line.number, "expected Class<TAB>name<TAB>members");
            std::u32string members;
            for (auto tok : split_ws(fields[2])) {
                try {
                    if (auto dash = tok.find('-'); dash != std::string_view::npos && dash > 0) {
                        char32_t lo = parse_char_token(tok.substr(0, dash));
                        char32_t hi = parse_char_token(tok.substr(dash + 1));
                        for (char32_t c = lo; c <= hi; ++c)
                            if (table.find_char(c))
                                members += c;
                    } else {
                        members += parse_char_token(tok);
                    }
                } catch (const Error& e) {
                    rule_error(line.number, e.detail());
                }
            }
            if (members.empty())
                rule_error(line.number, "class has no members");
            classes[std::string(trim(fields[1]))] = members;
            continue;
        }
        if (fields.size() != 3)
            rule_error(line.number, "expected kind<TAB>pattern<TAB>replacement");
        RuleKind rk = parse_kind(kind, line.number);

        // Pattern positions: each a set of alternatives (one char unless $Class).
        std::vector<std::u32string> slots;
        for (auto tok : split_ws(fields[1])) {
            if (tok.starts_with("$")) {
                auto it = classes.find(std::string(tok.substr(1)));
                if (it == classes.end())
                    rule_error(line.number, "undefined class " + std::string(tok));
                slots.push_back(it->second);
            } else {
                try {
                    slots.emplace_back(1, parse_char_token(tok));
                } catch (const Error& e) {
                    rule_error(line.number, e.detail());
                }
            }
        }
        std::vector<GlyphTemplate> templates;
        for (auto tok : split_ws(fields[2]))
            templates.push_back(parse_glyph_spec(tok, line.number));
        for (const auto& t : templates)
            if (t.pattern_ref > static_cast<int>(slots.size()))
                rule_error(line.number, "$" + std::to_string(t.pattern_ref) + " past pattern end");

        // Expand the cartesian product of class slots, first slot slowest.
        std::vector<std::size_t> pick(slots.size(), 0);
        for (bool done = false; !done;) {
            ShapingRule rule{rk, {}, {}, line.number};
            for (std::size_t k = 0; k < slots.size(); ++k)
                rule.pattern += slots[k][pick[k]];
            for (const auto& t : templates) {
                char32_t src = t.pattern_ref ? rule.pattern[static_cast<std::size_t>(t.pattern_ref - 1)]
                                             : t.ch.value_or(0);
                PositionedGlyph g{CodePoint(1, 1), t.dx, t.dy, kDesign};
                if (t.code) {
                    g.glyph = *t.code;
                } else if (auto def = table.find_char(src)) {
                    g.glyph = *def;
                } else if (src >= 0x20 && src < 0x7F) {
                    g.glyph = ascii_glyph_code(src);
                    g.advance = kDesign / 2;
                } else {
                    rule_error(line.number, format_scalar(src) + " has no glyph");
                }
                if (t.advance)
                    g.advance = *t.advance;
                rule.replacement.push_back(g);
            }
            rules.push_back(std::move(rule));

            std::size_t k = slots.size();
            for (;;) {
                if (k == 0) {
                    done = true;
                    break;
                }
                --k;
                if (++pick[k] < slots[k].size())
                    break;
                pick[k] = 0;
            }
        }
    }
    return from_rules(std::move(rules), table, viramas);
}

RuleSet RuleSet::load(const std::filesystem::path& path, const CodeTable& table)
{
    return parse(read_file(path), table);
}

std::vector<PositionedGlyph> shape(std::u32string_view chars, const RuleSet& rules, GlyphSize size)
{
    std::vector<PositionedGlyph> out;
    out.reserve(chars.size());
    std::size_t i = 0;
    while (i < chars.size()) {
        std::size_t longest = std::min(rules.max_pattern(), chars.size() - i);
        bool matched = false;
        for (std::size_t len = longest; len >= 1; --len) {
            if (auto r = rules.find_pattern(chars.substr(i, len))) {
                for (const auto& g : rules.rules()[*r].replacement)
                    out.push_back(scaled(g, size));
                i += len;
                matched = true;
                break;
            }
        }
        if (matched)
            continue;
        auto def = rules.default_glyph(chars[i]);
        if (!def)
            throw Error(ErrorKind::UnknownChar, format_scalar(chars[i]) + " has no glyph", i);
        out.push_back(scaled(*def, size));
        ++i;
    }
    return out;
}

std::u32string decompose(std::span<const PositionedGlyph> glyphs, const RuleSet& rules,
                         GlyphSize size)
{
    const auto& words = rules.codewords(size);
    std::size_t longest = 1;
    for (const auto& [w, _] : words)
        longest = std::max(longest, w.size());

    std::vector<std::uint64_t> keys;
    keys.reserve(glyphs.size());
    for (const auto& g : glyphs)
        keys.push_back(glyph_key(g));

    // reach[j]: the codeword ending at j on the (unique) parse of keys[0, j).
    const std::size_t n = keys.size();
    std::vector<const std::pair<const std::vector<std::uint64_t>, std::u32string>*> reach(n + 1, nullptr);
    std::vector<bool> ok(n + 1, false);
    ok[0] = true;
    std::vector<std::uint64_t> probe;
    for (std::size_t i = 0; i < n; ++i) {
        if (!ok[i])
            continue;
        for (std::size_t len = 1; len <= longest && i + len <= n; ++len) {
            probe.assign(keys.begin() + static_cast<std::ptrdiff_t>(i),
                         keys.begin() + static_cast<std::ptrdiff_t>(i + len));
            auto it = words.find(probe);
            if (it != words.end() && !ok[i + len]) {
                ok[i + len] = true;
                reach[i + len] = &*it;
            }
        }
    }
    if (!ok[n])
        throw Error(ErrorKind::NotDecomposable, "glyph sequence was not produced by these rules");

    std::vector<const std::u32string*> parts;
    for (std::size_t j = n; j > 0;) {
        const auto* w = reach[j];
        parts.push_back(&w->second);
        j -= w->first.size();
    }
    std::u32string out;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
        out += **it;
    return out;
}

}  // namespace akshar
