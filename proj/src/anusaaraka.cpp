#include "akshar/anusaaraka.hpp"

#include <algorithm>
#include <set>

#include "akshar/codec.hpp"
#include "akshar/error.hpp"
#include "akshar/text.hpp"

namespace akshar {

std::string_view to_string(Pos p) noexcept
{
    switch (p) {
    case Pos::Noun: return "noun";
    case Pos::Verb: return "verb";
    case Pos::Pronoun: return "pronoun";
    case Pos::Other: return "other";
    }
    return "other";
}

Pos parse_pos(std::string_view s)
{
    for (auto p : {Pos::Noun, Pos::Verb, Pos::Pronoun, Pos::Other})
        if (to_string(p) == s)
            return p;
    throw Error(ErrorKind::InvalidResource, "unknown part of speech '" + std::string(s) + "'");
}

std::vector<std::string> MorphAnalysis::features() const
{
    std::vector<std::string> out;
    for (const auto& s : suffixes)
        for (const auto& f : s.features)
            if (std::find(out.begin(), out.end(), f) == out.end())
                out.push_back(f);
    return out;
}

std::string MorphAnalysis::surface() const
{
    std::string s = root;
    for (const auto& suf : suffixes)
        s += suf.suffix;
    return s;
}

std::string Marker::render() const
{
    switch (kind) {
    case Kind::Note:
        return "{" + (values.empty() ? std::string() : values.front()) + "}";
    case Kind::Ambiguity: {
        std::string s = "[";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i)
                s += '|';
            s += values[i];
        }
        return s + "]";
    }
    case Kind::Literal:
        break;
    }
    return values.empty() ? std::string() : values.front();
}

std::string GlossToken::render() const
{
    std::string s = root ? root->render() : std::string();
    for (const auto& m : markers) {
        if (m.kind == Marker::Kind::Note || s.empty())
            s += m.render();
        else
            s += "_" + m.render();
    }
    return s + punctuation;
}

namespace {

bool is_terminal_punct(char c)
{
    return c == '?' || c == '!' || c == '.' || c == ',';
}

bool has_space(std::string_view s)
{
    return std::any_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; });
}

[[noreturn]] void resource_error(std::string_view file, std::size_t line, const std::string& what)
{
    throw Error(ErrorKind::InvalidResource,
                std::string(file) + (line ? ":" + std::to_string(line) : std::string()) + ": " + what);
}

std::vector<std::string> split_list(std::string_view field, char sep)
{
    std::vector<std::string> out;
    field = trim(field);
    if (field.empty())
        return out;
    for (auto part : split(field, sep))
        out.emplace_back(trim(part));
    return out;
}

// Returns (source, target) from the file's @pair header and its remaining lines.
std::pair<std::pair<std::string, std::string>, std::vector<Line>> read_resource(
    std::string_view name, std::string_view text)
{
    auto lines = content_lines(text);
    if (lines.empty())
        resource_error(name, 0, "empty file");
    auto head = split(lines.front().text, '\t');
    if (trim(head[0]) != "@pair" || head.size() != 3)
        resource_error(name, lines.front().number, "first line must be @pair<TAB>source<TAB>target");
    lines.erase(lines.begin());
    return {{std::string(trim(head[1])), std::string(trim(head[2]))}, std::move(lines)};
}

}  // namespace

std::vector<SourceWord> tokenize(std::string_view sentence)
{
    std::vector<SourceWord> words;
    for (auto raw : split_ws(sentence)) {
        std::size_t end = raw.size();
        while (end > 0 && is_terminal_punct(raw[end - 1]))
            --end;
        words.push_back({std::string(raw.substr(0, end)), std::string(raw.substr(end))});
    }
    return words;
}

GlossResources GlossResources::parse(std::string_view paradigms, std::string_view lexicon,
                                     std::string_view vibhakti)
{
    GlossResources r;
    auto [pair_p, plines] = read_resource("paradigms.tsv", paradigms);
    auto [pair_l, llines] = read_resource("lexicon.tsv", lexicon);
    auto [pair_v, vlines] = read_resource("vibhakti.tsv", vibhakti);
    if (pair_p != pair_l || pair_p != pair_v)
        resource_error("resources", 0, "@pair headers disagree");
    r.source_ = pair_p.first;
    r.target_ = pair_p.second;

    if (plines.empty() || trim(split(plines.front().text, '\t')[0]) != "@features")
        resource_error("paradigms.tsv", 0, "second line must be @features<TAB>names");
    {
        auto head = split(plines.front().text, '\t');
        for (std::size_t i = 1; i < head.size(); ++i)
            for (auto name : split_ws(head[i]))
                for (auto part : split(name, ','))
                    if (!trim(part).empty())
                        r.registry_.emplace_back(trim(part));
        plines.erase(plines.begin());
    }
    std::set<std::string, std::less<>> registry(r.registry_.begin(), r.registry_.end());
    auto check_feature = [&](std::string_view file, std::size_t line, const std::string& f) {
        if (!registry.count(f))
            resource_error(file, line, "feature '" + f + "' is not in the registry");
    };

    std::set<std::string> suffixes;
    for (const auto& line : plines) {
        auto fields = split(line.text, '\t');
        if (fields.size() < 2 || fields.size() > 3)
            resource_error("paradigms.tsv", line.number, "expected suffix<TAB>features[<TAB>note]");
        ParadigmEntry e;
        e.suffix = std::string(trim(fields[0]));
        if (e.suffix.empty() || has_space(e.suffix))
            resource_error("paradigms.tsv", line.number, "bad suffix");
        if (!suffixes.insert(e.suffix).second)
            resource_error("paradigms.tsv", line.number, "duplicate suffix '" + e.suffix + "'");
        e.features = split_list(fields[1], ',');
        for (const auto& f : e.features)
            check_feature("paradigms.tsv", line.number, f);
        if (fields.size() == 3)
            e.note = std::string(trim(fields[2]));
        if (has_space(e.note))
            resource_error("paradigms.tsv", line.number, "note must not contain spaces");
        r.paradigms_.push_back(std::move(e));
    }
    std::stable_sort(r.paradigms_.begin(), r.paradigms_.end(),
                     [](const ParadigmEntry& a, const ParadigmEntry& b) {
                         return a.suffix.size() > b.suffix.size();
                     });

    for (const auto& line : llines) {
        auto fields = split(line.text, '\t');
        if (fields.size() != 3)
            resource_error("lexicon.tsv", line.number, "expected root<TAB>pos<TAB>targets");
        LexEntry e;
        e.source_root = std::string(trim(fields[0]));
        try {
            e.pos = parse_pos(trim(fields[1]));
        } catch (const Error& err) {
            resource_error("lexicon.tsv", line.number, err.detail());
        }
        e.target_roots = split_list(fields[2], '|');
        if (e.source_root.empty() || has_space(e.source_root))
            resource_error("lexicon.tsv", line.number, "bad source root");
        if (e.target_roots.empty())
            resource_error("lexicon.tsv", line.number, "no target roots");
        for (const auto& t : e.target_roots)
            if (t.empty() || has_space(t))
                resource_error("lexicon.tsv", line.number, "bad target root '" + t + "'");
        auto& slots = r.roots_[e.source_root];
        for (auto idx : slots)
            if (r.lexicon_[idx].pos == e.pos)
                resource_error("lexicon.tsv", line.number,
                               "duplicate " + std::string(to_string(e.pos)) + " '" + e.source_root + "'");
        slots.push_back(r.lexicon_.size());
        r.lexicon_.push_back(std::move(e));
    }

    for (const auto& line : vlines) {
        auto fields = split(line.text, '\t');
        if (fields.empty() || fields.size() > 2)
            resource_error("vibhakti.tsv", line.number, "expected feature<TAB>options");
        std::string feature(trim(fields[0]));
        check_feature("vibhakti.tsv", line.number, feature);
        auto options = fields.size() == 2 ? split_list(fields[1], '|') : std::vector<std::string>{};
        for (const auto& o : options)
            if (o.empty() || has_space(o))
                resource_error("vibhakti.tsv", line.number, "bad marker '" + o + "'");
        if (!r.vibhakti_.emplace(feature, std::move(options)).second)
            resource_error("vibhakti.tsv", line.number, "feature '" + feature + "' mapped twice");
    }
    for (const auto& f : r.registry_)
        if (!r.vibhakti_.count(f))
            resource_error("vibhakti.tsv", 0, "feature '" + f + "' has no mapping");
    return r;
}

GlossResources GlossResources::load(const std::filesystem::path& dir)
{
    return parse(read_file(dir / "paradigms.tsv"), read_file(dir / "lexicon.tsv"),
                 read_file(dir / "vibhakti.tsv"));
}

const LexEntry* GlossResources::find_root(std::string_view root) const
{
    auto it = roots_.find(root);
    if (it == roots_.end() || it->second.empty())
        return nullptr;
    return &lexicon_[it->second.front()];
}

MorphAnalysis GlossResources::analyze(std::string_view word) const
{
    MorphAnalysis a;
    if (const auto* lex = find_root(word)) {
        a.root = std::string(word);
        a.pos = lex->pos;
        return a;
    }
    std::string_view residue = word;
    std::vector<ParadigmEntry> stripped;
    for (;;) {
        // paradigms_ is sorted longest first, so the first hit is the longest
        auto hit = std::find_if(paradigms_.begin(), paradigms_.end(), [&](const ParadigmEntry& p) {
            return residue.ends_with(p.suffix) &&
                   (p.suffix.size() < residue.size() || stripped.empty());
        });
        if (hit == paradigms_.end())
            break;
        if (hit->suffix.size() == residue.size()) {
            // the whole word is a free-standing postposition
            a.suffixes = {*hit};
            return a;
        }
        residue.remove_suffix(hit->suffix.size());
        stripped.insert(stripped.begin(), *hit);
        if (const auto* lex = find_root(residue)) {
            a.root = std::string(residue);
            a.pos = lex->pos;
            a.suffixes = std::move(stripped);
            return a;
        }
    }
    a.root = std::string(word);
    a.unknown = true;
    return a;
}

GlossToken GlossResources::transfer(const MorphAnalysis& analysis) const
{
    GlossToken t;
    t.unknown = analysis.unknown;
    if (analysis.unknown) {
        t.root = Marker{Marker::Kind::Literal, {"*" + analysis.root}};
        return t;
    }
    if (!analysis.root.empty()) {
        const auto* lex = find_root(analysis.root);
        if (!lex) {
            t.unknown = true;
            t.root = Marker{Marker::Kind::Literal, {"*" + analysis.surface()}};
            return t;
        }
        t.root = Marker{lex->target_roots.size() > 1 ? Marker::Kind::Ambiguity : Marker::Kind::Literal,
                        lex->target_roots};
    }
    for (const auto& suffix : analysis.suffixes) {
        for (const auto& f : suffix.features) {
            const auto& options = vibhakti_.at(f);
            if (options.empty())
                continue;
            t.markers.push_back(
                {options.size() > 1 ? Marker::Kind::Ambiguity : Marker::Kind::Literal, options});
        }
        if (!suffix.note.empty())
            t.markers.push_back({Marker::Kind::Note, {suffix.note}});
    }
    return t;
}

GlossToken GlossResources::gloss_word(const SourceWord& word) const
{
    GlossToken t;
    if (!word.text.empty()) {
        bool ascii = std::all_of(word.text.begin(), word.text.end(),
                                 [](char c) { return static_cast<unsigned char>(c) < 0x80; });
        auto roman = ascii ? word.text : romanize_hk(utf8_to_u32(word.text));
        t = transfer(analyze(roman));
    }
    t.punctuation = word.punctuation;
    return t;
}

std::string GlossResources::gloss_sentence(std::string_view sentence) const
{
    std::string out;
    for (const auto& w : tokenize(sentence)) {
        if (!out.empty())
            out += ' ';
        out += gloss_word(w).render();
    }
    return out;
}

}  // namespace akshar
