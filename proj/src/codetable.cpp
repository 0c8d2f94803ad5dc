#include "akshar/codetable.hpp"

#include <algorithm>
#include <charconv>

#include "akshar/error.hpp"
#include "akshar/text.hpp"

namespace akshar {

CodePoint::CodePoint(int row, int cell)
{
    if (row < 1 || row > kRows || cell < 1 || cell > kCells)
        throw Error(ErrorKind::RowOutOfRange,
                    "row " + std::to_string(row) + " cell " + std::to_string(cell) +
                        " outside 1..94");
    row_ = static_cast<std::uint8_t>(row);
    cell_ = static_cast<std::uint8_t>(cell);
}

CodePoint CodePoint::from_bytes(std::uint8_t lead, std::uint8_t trail)
{
    return CodePoint(lead - kByteBias, trail - kByteBias);
}

std::string to_string(const CodePoint& cp)
{
    return std::to_string(cp.row()) + "." + std::to_string(cp.cell());
}

std::string_view to_string(Script s) noexcept
{
    switch (s) {
    case Script::Common: return "Common";
    case Script::Latin: return "Latin";
    case Script::Devanagari: return "Devanagari";
    case Script::Bengali: return "Bengali";
    case Script::Telugu: return "Telugu";
    case Script::Han: return "Han";
    }
    return "Common";
}

Script parse_script(std::string_view name)
{
    for (auto s : {Script::Common, Script::Latin, Script::Devanagari, Script::Bengali,
                   Script::Telugu, Script::Han})
        if (to_string(s) == name)
            return s;
    throw Error(ErrorKind::ParseError, "unknown script '" + std::string(name) + "'");
}

namespace {

int parse_int(std::string_view s, std::size_t line)
{
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line) + ": bad integer '" +
                        std::string(s) + "'");
    return value;
}

RowRange parse_range(std::string_view s, std::size_t line)
{
    auto parts = split(trim(s), '-');
    if (parts.size() != 2)
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line) + ": bad row range '" +
                        std::string(s) + "'");
    RowRange r{parse_int(parts[0], line), parse_int(parts[1], line)};
    if (r.first < 1 || r.last > kRows || r.first > r.last)
        throw Error(ErrorKind::RowOutOfRange,
                    "line " + std::to_string(line) + ": row range " +
                        std::string(s) + " outside 1..94");
    return r;
}

std::string at_line(std::size_t line)
{
    return line ? "line " + std::to_string(line) + ": " : std::string();
}

}  // namespace

CodeTable CodeTable::build(std::vector<Entry> entries, std::vector<Bank> banks)
{
    CodeTable t;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        if (e.ch.scalar < 0x80)
            throw Error(ErrorKind::ParseError,
                        format_scalar(e.ch.scalar) +
                            " is single-byte ASCII and cannot be assigned a code");
    }

    if (banks.empty()) {
        std::map<Script, RowRange> spans;
        for (const auto& e : entries) {
            auto [it, fresh] = spans.try_emplace(e.ch.script,
                                                 RowRange{e.code.row(), e.code.row()});
            if (!fresh) {
                it->second.first = std::min(it->second.first, e.code.row());
                it->second.last = std::max(it->second.last, e.code.row());
            }
        }
        for (const auto& [script, rows] : spans)
            banks.push_back({script, rows});
    }
    for (std::size_t i = 0; i < banks.size(); ++i) {
        for (std::size_t j = i + 1; j < banks.size(); ++j) {
            if (banks[i].script == banks[j].script)
                throw Error(ErrorKind::BankOverlap,
                            "script " + std::string(to_string(banks[i].script)) +
                                " has two banks");
            if (banks[i].rows.overlaps(banks[j].rows))
                throw Error(ErrorKind::BankOverlap,
                            std::string(to_string(banks[i].script)) + " and " +
                                std::string(to_string(banks[j].script)) +
                                " banks share rows");
        }
    }

    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.code < b.code; });
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        auto bank = std::find_if(banks.begin(), banks.end(),
                                 [&](const Bank& b) { return b.script == e.ch.script; });
        if (bank == banks.end() || !bank->rows.contains(e.code.row()))
            throw Error(ErrorKind::RowOutOfRange,
                        format_scalar(e.ch.scalar) + " at " + to_string(e.code) +
                            " lies outside the " +
                            std::string(to_string(e.ch.script)) + " bank");
        auto& slot = t.by_code_[static_cast<std::size_t>(e.code.linear())];
        if (slot >= 0)
            throw Error(ErrorKind::DuplicateCode,
                        to_string(e.code) + " assigned to both " +
                            format_scalar(entries[static_cast<std::size_t>(slot)].ch.scalar) +
                            " and " + format_scalar(e.ch.scalar));
        if (!t.by_char_.emplace(e.ch.scalar, i).second)
            throw Error(ErrorKind::DuplicateChar,
                        format_scalar(e.ch.scalar) + " assigned twice");
        slot = static_cast<std::int32_t>(i);
    }
    std::sort(banks.begin(), banks.end(),
              [](const Bank& a, const Bank& b) { return a.rows.first < b.rows.first; });
    t.entries_ = std::move(entries);
    t.banks_ = std::move(banks);
    return t;
}

CodeTable CodeTable::parse(std::string_view definition)
{
    std::vector<Entry> entries;
    std::vector<Bank> banks;
    for (const auto& line : content_lines(definition)) {
        auto fields = split(line.text, '\t');
        if (fields[0] == "@levels") {
            if (fields.size() != 3 || parse_range(fields[1], line.number) != RowRange{1, kL1LastRow} ||
                parse_range(fields[2], line.number) != RowRange{kL2FirstRow, kRows})
                throw Error(ErrorKind::RowOutOfRange,
                            at_line(line.number) + "only the 1-55 / 56-94 level split is supported");
            continue;
        }
        if (fields[0] == "@bank") {
            if (fields.size() != 3)
                throw Error(ErrorKind::ParseError,
                            at_line(line.number) + "expected @bank<TAB>script<TAB>first-last");
            banks.push_back({parse_script(trim(fields[1])), parse_range(fields[2], line.number)});
            continue;
        }
        if (fields.size() < 4 || fields.size() > 5)
            throw Error(ErrorKind::ParseError,
                        at_line(line.number) + "expected 5 tab-separated fields");
        int row = parse_int(fields[0], line.number);
        int cell = parse_int(fields[1], line.number);
        if (row < 1 || row > kRows || cell < 1 || cell > kCells)
            throw Error(ErrorKind::RowOutOfRange,
                        at_line(line.number) + "row/cell outside 1..94");
        AbstractChar ch;
        try {
            ch.scalar = parse_hex_scalar(fields[2]);
            ch.script = parse_script(trim(fields[3]));
        } catch (const Error& e) {
            throw Error(e.kind(), at_line(line.number) + e.detail());
        }
        if (fields.size() == 5)
            ch.display_name = std::string(trim(fields[4]));
        entries.push_back({std::move(ch), CodePoint(row, cell)});
    }
    return build(std::move(entries), std::move(banks));
}

CodeTable CodeTable::load(const std::filesystem::path& path)
{
    return parse(read_file(path));
}

std::string CodeTable::serialize() const
{
    std::string out = "@levels\t1-55\t56-94\n";
    for (const auto& b : banks_)
        out += "@bank\t" + std::string(to_string(b.script)) + "\t" +
               std::to_string(b.rows.first) + "-" + std::to_string(b.rows.last) + "\n";
    for (const auto& e : entries_) {
        auto hex = format_scalar(e.ch.scalar).substr(2);
        out += std::to_string(e.code.row()) + "\t" + std::to_string(e.code.cell()) + "\t" +
               hex + "\t" + std::string(to_string(e.ch.script)) + "\t" +
               e.ch.display_name + "\n";
    }
    return out;
}

std::optional<CodePoint> CodeTable::find_char(CharId c) const noexcept
{
    auto it = by_char_.find(c);
    if (it == by_char_.end())
        return std::nullopt;
    return entries_[it->second].code;
}

const AbstractChar* CodeTable::find_code(CodePoint p) const noexcept
{
    auto slot = by_code_[static_cast<std::size_t>(p.linear())];
    return slot < 0 ? nullptr : &entries_[static_cast<std::size_t>(slot)].ch;
}

CodePoint CodeTable::lookup_char(CharId c) const
{
    if (auto p = find_char(c))
        return *p;
    throw Error(ErrorKind::NotAssigned, format_scalar(c) + " has no code");
}

const AbstractChar& CodeTable::lookup_code(CodePoint p) const
{
    if (const auto* ch = find_code(p))
        return *ch;
    throw Error(ErrorKind::UnassignedCode, to_string(p) + " is not assigned");
}

std::optional<Level> CodeTable::level_of(CharId c) const noexcept
{
    if (auto p = find_char(c))
        return p->level();
    return std::nullopt;
}

std::size_t CodeTable::level_size(Level level) const noexcept
{
    return static_cast<std::size_t>(std::count_if(
        entries_.begin(), entries_.end(),
        [level](const Entry& e) { return e.code.level() == level; }));
}

Coverage CodeTable::coverage(std::u32string_view corpus) const
{
    Coverage c;
    for (char32_t ch : corpus) {
        auto level = level_of(ch);
        if (!level)
            ++c.unassigned_count;
        else if (*level == Level::L1)
            ++c.l1_count;
        else
            ++c.l2_count;
    }
    c.total = corpus.size();
    c.empty = c.total == 0;
    if (!c.empty) {
        auto n = static_cast<double>(c.total);
        c.l1_fraction = static_cast<double>(c.l1_count) / n;
        c.l2_fraction = static_cast<double>(c.l2_count) / n;
        c.unassigned_fraction = static_cast<double>(c.unassigned_count) / n;
    }
    return c;
}

}  // namespace akshar
