#pragma once

// Two-level 94x94 double-byte code space.
//
// A CodePoint is a (row, cell) position; the internal two-byte form is
// (0xA0 + row, 0xA0 + cell). Rows 1..55 form level 1 (frequent characters),
// rows 56..94 level 2. A CodeTable is a bijection between characters,
// identified by their universal scalar value, and CodePoints, with every
// character's row falling inside its script's bank.

#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace akshar {

inline constexpr int kRows = 94;
inline constexpr int kCells = 94;
inline constexpr int kL1LastRow = 55;
inline constexpr int kL2FirstRow = 56;
inline constexpr std::uint8_t kByteBias = 0xA0;

enum class Level : std::uint8_t { L1 = 1, L2 = 2 };

constexpr Level level_of_row(int row) noexcept
{
    return row <= kL1LastRow ? Level::L1 : Level::L2;
}

class CodePoint {
public:
    // Throws Error(RowOutOfRange) unless both coordinates are in 1..94.
    CodePoint(int row, int cell);

    static CodePoint from_bytes(std::uint8_t lead, std::uint8_t trail);
    static constexpr bool valid_byte(std::uint8_t b) noexcept
    {
        return b >= 0xA1 && b <= 0xFE;
    }

    int row() const noexcept { return row_; }
    int cell() const noexcept { return cell_; }
    Level level() const noexcept { return level_of_row(row_); }
    std::uint8_t lead() const noexcept { return static_cast<std::uint8_t>(kByteBias + row_); }
    std::uint8_t trail() const noexcept { return static_cast<std::uint8_t>(kByteBias + cell_); }

    // Zero-based position in the full 94x94 plane.
    int linear() const noexcept { return (row_ - 1) * kCells + (cell_ - 1); }

    friend auto operator<=>(const CodePoint&, const CodePoint&) = default;

private:
    std::uint8_t row_;
    std::uint8_t cell_;
};

std::string to_string(const CodePoint& cp);

enum class Script : std::uint8_t { Common, Latin, Devanagari, Bengali, Telugu, Han };

std::string_view to_string(Script s) noexcept;
Script parse_script(std::string_view name);

// Characters are identified by their universal scalar value.
using CharId = char32_t;

struct AbstractChar {
    CharId scalar = 0;
    Script script = Script::Common;
    std::string display_name;

    friend bool operator==(const AbstractChar&, const AbstractChar&) = default;
};

struct RowRange {
    int first = 0;
    int last = 0;
    bool contains(int row) const noexcept { return row >= first && row <= last; }
    bool overlaps(const RowRange& o) const noexcept
    {
        return first <= o.last && o.first <= last;
    }
    friend bool operator==(const RowRange&, const RowRange&) = default;
};

struct Bank {
    Script script;
    RowRange rows;
    friend bool operator==(const Bank&, const Bank&) = default;
};

struct Coverage {
    double l1_fraction = 0.0;
    double l2_fraction = 0.0;
    double unassigned_fraction = 0.0;
    std::size_t l1_count = 0;
    std::size_t l2_count = 0;
    std::size_t unassigned_count = 0;
    std::size_t total = 0;
    bool empty = true;
};

class CodeTable {
public:
    struct Entry {
        AbstractChar ch;
        CodePoint code;
    };

    CodeTable() = default;

    // Builds a table from entries and optional explicit banks. Without banks,
    // one bank per script is inferred from the rows its entries occupy.
    static CodeTable build(std::vector<Entry> entries, std::vector<Bank> banks = {});

    // Parses the tab-separated definition format
    //   row <TAB> cell <TAB> hex_scalar <TAB> script <TAB> display_name
    // with '#' comments and optional '@levels' / '@bank' directives.
    static CodeTable parse(std::string_view definition);
    static CodeTable load(const std::filesystem::path& path);

    std::string serialize() const;

    CodePoint lookup_char(CharId c) const;
    const AbstractChar& lookup_code(CodePoint p) const;

    std::optional<CodePoint> find_char(CharId c) const noexcept;
    const AbstractChar* find_code(CodePoint p) const noexcept;

    // Level of an occurrence of c in a corpus; nullopt when unassigned.
    std::optional<Level> level_of(CharId c) const noexcept;

    Coverage coverage(std::u32string_view corpus) const;

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    const std::vector<Bank>& banks() const noexcept { return banks_; }
    std::size_t size() const noexcept { return entries_.size(); }
    std::size_t level_size(Level level) const noexcept;

private:
    std::vector<Entry> entries_;  // sorted by code
    std::vector<Bank> banks_;
    std::unordered_map<CharId, std::size_t> by_char_;
    std::vector<std::int32_t> by_code_ = std::vector<std::int32_t>(kRows * kCells, -1);
};

}  // namespace akshar
