#pragma once

// Word-by-word gloss transfer between related languages.
//
// Every source word yields exactly one gloss token, in source order. A word
// is segmented by stripping paradigm suffixes (longest first, from the right)
// until the residue is a dictionary root; the root is translated through the
// bilingual lexicon and each suffix feature through the vibhakti map. Where
// the resources list several options, all of them are kept as [a|b].
//
// Resource files for a language pair, all tab-separated, each starting with
// "@pair<TAB>source<TAB>target":
//   paradigms.tsv  @features line, then suffix, comma-separated features, note
//   lexicon.tsv    source root, pos (noun|verb|pronoun|other), targets a|b
//   vibhakti.tsv   feature, marker options a|b (empty: no marker)

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace akshar {

enum class Pos { Noun, Verb, Pronoun, Other };

std::string_view to_string(Pos p) noexcept;
Pos parse_pos(std::string_view s);

struct ParadigmEntry {
    std::string suffix;
    std::vector<std::string> features;
    std::string note;  // emitted verbatim inside {}
};

struct LexEntry {
    std::string source_root;
    Pos pos = Pos::Other;
    std::vector<std::string> target_roots;
};

struct MorphAnalysis {
    std::string root;
    std::vector<ParadigmEntry> suffixes;  // in surface order
    Pos pos = Pos::Other;
    bool unknown = false;

    std::vector<std::string> features() const;
    std::string surface() const;
};

struct Marker {
    enum class Kind { Literal, Ambiguity, Note };
    Kind kind = Kind::Literal;
    std::vector<std::string> values;

    std::string render() const;
};

struct GlossToken {
    std::optional<Marker> root;  // absent for free-standing postpositions
    std::vector<Marker> markers;
    bool unknown = false;
    std::string punctuation;

    std::string render() const;
};

struct SourceWord {
    std::string text;
    std::string punctuation;  // trailing ? ! . , detached from the word
};

std::vector<SourceWord> tokenize(std::string_view sentence);

class GlossResources {
public:
    static GlossResources parse(std::string_view paradigms, std::string_view lexicon,
                                std::string_view vibhakti);
    static GlossResources load(const std::filesystem::path& dir);

    const std::string& source() const noexcept { return source_; }
    const std::string& target() const noexcept { return target_; }
    std::string pair() const { return source_ + "-" + target_; }

    const std::vector<std::string>& feature_registry() const noexcept { return registry_; }
    const std::vector<ParadigmEntry>& paradigms() const noexcept { return paradigms_; }
    const std::vector<LexEntry>& lexicon() const noexcept { return lexicon_; }

    const LexEntry* find_root(std::string_view root) const;

    MorphAnalysis analyze(std::string_view word) const;
    GlossToken transfer(const MorphAnalysis& analysis) const;

    // Words in native Indic script are romanized before analysis.
    GlossToken gloss_word(const SourceWord& word) const;
    std::string gloss_sentence(std::string_view sentence) const;

private:
    std::string source_;
    std::string target_;
    std::vector<std::string> registry_;
    std::vector<ParadigmEntry> paradigms_;  // longest suffix first
    std::vector<LexEntry> lexicon_;
    std::map<std::string, std::vector<std::size_t>, std::less<>> roots_;
    std::map<std::string, std::vector<std::string>, std::less<>> vibhakti_;
};

}  // namespace akshar
