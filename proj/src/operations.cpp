#include "akshar/operations.hpp"

#include <algorithm>
#include <optional>

#include "akshar/error.hpp"
#include "akshar/text.hpp"

namespace akshar::ops {

using nlohmann::json;

Bytes encode(const ResourceRegistry& reg, std::string_view utf8, std::string_view table,
             bool interchange)
{
    auto internal = encode_internal(utf8_to_u32(utf8), reg.table(table));
    return interchange ? internal_to_interchange(internal) : internal;
}

std::string decode(const ResourceRegistry& reg, std::span<const std::uint8_t> stream,
                   std::string_view table, bool interchange, bool lossy)
{
    DecodeOptions options;
    options.lossy = lossy;
    if (interchange) {
        auto internal = interchange_to_internal(stream);
        return u32_to_utf8(decode_internal(internal, reg.table(table), options));
    }
    return u32_to_utf8(decode_internal(stream, reg.table(table), options));
}

Bytes convert(std::span<const std::uint8_t> stream, bool to_interchange)
{
    if (to_interchange) {
        validate_internal(stream);
        return internal_to_interchange(stream);
    }
    return interchange_to_internal(stream);
}

std::string translit(const ResourceRegistry& reg, std::string_view utf8, std::string_view from,
                     std::string_view to, Fallback fallback, std::string_view table)
{
    auto text = utf8_to_u32(utf8);
    if (to == "hk")
        return romanize_hk(text);
    const auto& ct = reg.table(table);
    std::optional<Script> source;
    if (!from.empty())
        source = parse_script(from);
    for (std::size_t i = 0; !source && i < text.size(); ++i)
        if (auto code = ct.find_char(text[i]))
            if (auto s = ct.lookup_code(*code).script; is_parallel_script(s))
                source = s;
    if (!source)
        throw Error(ErrorKind::BadRequest, "cannot infer the source script; pass --from");
    return u32_to_utf8(transliterate_parallel(text, *source, parse_script(to), ct, fallback));
}

std::string render(const ResourceRegistry& reg, std::string_view utf8, GlyphSize size,
                   std::string_view rules)
{
    const auto& rs = reg.rules(rules);
    const auto& font = reg.font(reg.rules_table(rules), size);
    auto glyphs = shape(utf8_to_u32(utf8), rs, size);
    return to_pbm(render_line(glyphs, font));
}

std::string gloss(const ResourceRegistry& reg, std::string_view pair, std::string_view sentence)
{
    return reg.gloss(pair).gloss_sentence(sentence);
}

Coverage coverage(const ResourceRegistry& reg, std::string_view utf8, std::string_view table)
{
    auto text = utf8_to_u32(utf8);
    std::erase_if(text, [](char32_t c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; });
    return reg.table(table).coverage(text);
}

json to_json(const Coverage& c)
{
    return {{"l1_fraction", c.l1_fraction},
            {"l2_fraction", c.l2_fraction},
            {"unassigned_fraction", c.unassigned_fraction},
            {"l1_count", c.l1_count},
            {"l2_count", c.l2_count},
            {"unassigned_count", c.unassigned_count},
            {"total", c.total},
            {"empty", c.empty}};
}

json to_json(const Candidate& c)
{
    return {{"key", c.key}, {"output", u32_to_utf8(c.output)}, {"frequency", c.frequency}, {"exact", c.exact}};
}

json to_json(const ImeSession& s)
{
    json candidates = json::array();
    for (const auto& c : s.candidates())
        candidates.push_back(to_json(c));
    return {{"buffer", s.buffer()},
            {"candidates", std::move(candidates)},
            {"committed", u32_to_utf8(s.committed())},
            {"page_size", kCandidatePageSize}};
}

json to_json(const ResourceRegistry& reg)
{
    json out = json::array();
    for (const auto& r : reg.resources()) {
        json tags = json::array();
        for (const auto& t : r.tags)
            tags.push_back({{"language", t.language}, {"group", to_string(t.group)}});
        out.push_back({{"kind", to_string(r.kind)},
                       {"name", r.name},
                       {"path", std::filesystem::relative(r.path, reg.data_dir()).generic_string()},
                       {"languages", std::move(tags)},
                       {"available", r.available}});
    }
    return {{"resources", std::move(out)}};
}

json to_json(const Error& e)
{
    json j = {{"error", to_string(e.kind())}, {"message", e.detail()}};
    if (e.offset())
        j["offset"] = *e.offset();
    return j;
}

}  // namespace akshar::ops
