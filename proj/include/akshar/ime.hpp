#pragma once

// Phonetic input: roman keystrokes are matched against a conversion table
// and the matching outputs offered as ranked candidates.
//
// Table file, tab-separated: key <TAB> output [<TAB> frequency]. The output
// is literal UTF-8 text or space-separated U+XXXX tokens; frequency
// defaults to 0. Keys are case-sensitive ("ka" and "kA" differ).

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "akshar/codec.hpp"
#include "akshar/codetable.hpp"

namespace akshar {

inline constexpr std::size_t kCandidatePageSize = 9;

struct Candidate {
    std::string key;
    std::u32string output;
    std::uint64_t frequency = 0;
    bool exact = false;

    friend bool operator==(const Candidate&, const Candidate&) = default;
};

class ConversionTable {
public:
    struct Entry {
        std::string key;
        std::u32string output;
        std::uint64_t frequency = 0;
        Bytes code_order;  // internal-code bytes of output, the final tie-break
    };

    static ConversionTable parse(std::string_view text, const CodeTable& table);
    static ConversionTable load(const std::filesystem::path& path, const CodeTable& table);
    static ConversionTable from_entries(std::vector<Entry> entries, const CodeTable& table);

    // Ranked: exact key before prefix match, then frequency descending, then
    // internal code order ascending, then key.
    std::vector<Candidate> lookup(std::string_view buffer) const;

    const std::vector<Entry>& entries() const noexcept { return entries_; }

    // Distinct key characters, sorted.
    std::string key_alphabet() const;

private:
    std::vector<Entry> entries_;  // sorted by key
};

bool candidate_before(const Candidate& a, const Candidate& b, const Bytes& a_order,
                      const Bytes& b_order);

class ImeSession {
public:
    explicit ImeSession(std::shared_ptr<const ConversionTable> table);

    // key must be printable ASCII; throws InvalidKey otherwise.
    void feed_key(char key);
    void backspace();
    // index counts from 0 over the full ranked list.
    void select(std::size_t index);
    void commit_raw();

    const std::string& buffer() const noexcept { return buffer_; }
    const std::vector<Candidate>& candidates() const noexcept { return candidates_; }
    const std::u32string& committed() const noexcept { return committed_; }

    std::size_t page_count() const noexcept;
    std::span<const Candidate> page(std::size_t n) const noexcept;

private:
    void refresh();

    std::shared_ptr<const ConversionTable> table_;
    std::string buffer_;
    std::vector<Candidate> candidates_;
    std::u32string committed_;
};

}  // namespace akshar
