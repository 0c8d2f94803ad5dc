#include "akshar/ime.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "akshar/error.hpp"
#include "akshar/text.hpp"

namespace akshar {

namespace {

bool printable(char c)
{
    return c >= 0x20 && c < 0x7F;
}

std::u32string parse_output(std::string_view field)
{
    auto tokens = split_ws(field);
    bool all_scalars = !tokens.empty() && std::all_of(tokens.begin(), tokens.end(), [](auto t) {
        return t.size() > 2 && t.starts_with("U+");
    });
    if (all_scalars) {
        std::u32string out;
        for (auto t : tokens)
            out += parse_hex_scalar(t);
        return out;
    }
    return utf8_to_u32(trim(field));
}

}  // namespace

ConversionTable ConversionTable::from_entries(std::vector<Entry> entries, const CodeTable& table)
{
    std::set<std::pair<std::string, std::u32string>> seen;
    for (auto& e : entries) {
        if (e.key.empty())
            throw Error(ErrorKind::InvalidKey, "empty key");
        for (char c : e.key)
            if (!printable(c) || c == ' ')
                throw Error(ErrorKind::InvalidKey, "key '" + e.key + "' is not printable roman");
        if (e.output.empty())
            throw Error(ErrorKind::ParseError, "key '" + e.key + "' has an empty output");
        if (!seen.emplace(e.key, e.output).second)
            throw Error(ErrorKind::ParseError,
                        "duplicate entry " + e.key + " -> " + u32_to_utf8(e.output));
        e.code_order = encode_internal(e.output, table);
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.key < b.key; });
    ConversionTable t;
    t.entries_ = std::move(entries);
    return t;
}

ConversionTable ConversionTable::parse(std::string_view text, const CodeTable& table)
{
    std::vector<Entry> entries;
    for (const auto& line : content_lines(text)) {
        auto fields = split(line.text, '\t');
        if (fields.size() < 2 || fields.size() > 3)
            throw Error(ErrorKind::ParseError,
                        "line " + std::to_string(line.number) + ": expected key<TAB>output[<TAB>frequency]");
        Entry e;
        e.key = std::string(trim(fields[0]));
        try {
            e.output = parse_output(fields[1]);
        } catch (const Error& err) {
            throw Error(err.kind(), "line " + std::to_string(line.number) + ": " + err.detail());
        }
        if (fields.size() == 3 && !trim(fields[2]).empty()) {
            auto f = trim(fields[2]);
            auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), e.frequency);
            if (ec != std::errc{} || ptr != f.data() + f.size())
                throw Error(ErrorKind::ParseError,
                            "line " + std::to_string(line.number) + ": bad frequency");
        }
        entries.push_back(std::move(e));
    }
    return from_entries(std::move(entries), table);
}

ConversionTable ConversionTable::load(const std::filesystem::path& path, const CodeTable& table)
{
    return parse(read_file(path), table);
}

bool candidate_before(const Candidate& a, const Candidate& b, const Bytes& a_order,
                      const Bytes& b_order)
{
    if (a.exact != b.exact)
        return a.exact;
    if (a.frequency != b.frequency)
        return a.frequency > b.frequency;
    if (a_order != b_order)
        return a_order < b_order;
    return a.key < b.key;
}

std::vector<Candidate> ConversionTable::lookup(std::string_view buffer) const
{
    if (buffer.empty())
        return {};
    auto first = std::lower_bound(entries_.begin(), entries_.end(), buffer,
                                  [](const Entry& e, std::string_view b) { return e.key < b; });
    std::vector<const Entry*> hits;
    for (auto it = first; it != entries_.end() && std::string_view(it->key).starts_with(buffer); ++it)
        hits.push_back(&*it);

    std::sort(hits.begin(), hits.end(), [&](const Entry* a, const Entry* b) {
        Candidate ca{a->key, {}, a->frequency, a->key == buffer};
        Candidate cb{b->key, {}, b->frequency, b->key == buffer};
        return candidate_before(ca, cb, a->code_order, b->code_order);
    });
    std::vector<Candidate> out;
    out.reserve(hits.size());
    for (const auto* e : hits)
        out.push_back({e->key, e->output, e->frequency, e->key == buffer});
    return out;
}

std::string ConversionTable::key_alphabet() const
{
    std::set<char> chars;
    for (const auto& e : entries_)
        chars.insert(e.key.begin(), e.key.end());
    return {chars.begin(), chars.end()};
}

ImeSession::ImeSession(std::shared_ptr<const ConversionTable> table) : table_(std::move(table)) {}

void ImeSession::refresh()
{
    candidates_ = table_->lookup(buffer_);
}

void ImeSession::feed_key(char key)
{
    if (!printable(key))
        throw Error(ErrorKind::InvalidKey, "key must be printable ASCII");
    buffer_ += key;
    refresh();
}

void ImeSession::backspace()
{
    if (buffer_.empty())
        return;
    buffer_.pop_back();
    refresh();
}

void ImeSession::select(std::size_t index)
{
    if (index >= candidates_.size())
        throw Error(ErrorKind::IndexOutOfRange,
                    "candidate " + std::to_string(index) + " of " + std::to_string(candidates_.size()));
    committed_ += candidates_[index].output;
    buffer_.clear();
    candidates_.clear();
}

void ImeSession::commit_raw()
{
    for (char c : buffer_)
        committed_ += static_cast<char32_t>(c);
    buffer_.clear();
    candidates_.clear();
}

std::size_t ImeSession::page_count() const noexcept
{
    return (candidates_.size() + kCandidatePageSize - 1) / kCandidatePageSize;
}

std::span<const Candidate> ImeSession::page(std::size_t n) const noexcept
{
    std::span<const Candidate> all(candidates_);
    auto start = std::min(n * kCandidatePageSize, all.size());
    return all.subspan(start, std::min(kCandidatePageSize, all.size() - start));
}

}  // namespace akshar
