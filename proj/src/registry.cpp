#include "akshar/registry.hpp"

#include <json.hpp>

#include "akshar/error.hpp"
#include "akshar/text.hpp"

namespace akshar {

using nlohmann::json;

std::string_view to_string(LanguageGroup g) noexcept
{
    switch (g) {
    case LanguageGroup::Northern: return "Northern";
    case LanguageGroup::Western: return "Western";
    case LanguageGroup::SouthIndian: return "SouthIndian";
    case LanguageGroup::Eastern: return "Eastern";
    case LanguageGroup::Other: return "Other";
    }
    return "Other";
}

LanguageGroup language_group(std::string_view language) noexcept
{
    static const std::map<std::string_view, LanguageGroup> groups = {
        {"hi", LanguageGroup::Northern},     {"pa", LanguageGroup::Northern},
        {"ks", LanguageGroup::Northern},     {"ur", LanguageGroup::Northern},
        {"kok", LanguageGroup::Western},     {"mr", LanguageGroup::Western},
        {"gu", LanguageGroup::Western},      {"ta", LanguageGroup::SouthIndian},
        {"te", LanguageGroup::SouthIndian},  {"kn", LanguageGroup::SouthIndian},
        {"ml", LanguageGroup::SouthIndian},  {"bn", LanguageGroup::Eastern},
        {"as", LanguageGroup::Eastern},      {"or", LanguageGroup::Eastern},
    };
    auto it = groups.find(language);
    return it == groups.end() ? LanguageGroup::Other : it->second;
}

std::string_view to_string(ResourceKind k) noexcept
{
    switch (k) {
    case ResourceKind::CodeTable: return "code_table";
    case ResourceKind::Font: return "font";
    case ResourceKind::ShapingRules: return "shaping";
    case ResourceKind::ConversionTable: return "ime";
    case ResourceKind::GlossResources: return "anusaaraka";
    }
    return "unknown";
}

namespace {

std::vector<LanguageTag> tags_for(const std::vector<std::string>& languages)
{
    std::vector<LanguageTag> tags;
    for (const auto& l : languages)
        tags.push_back({l, language_group(l)});
    return tags;
}

template <class T>
T field(const json& j, const char* key, std::string_view where)
{
    if (!j.contains(key))
        throw Error(ErrorKind::InvalidResource,
                    "manifest " + std::string(where) + " entry lacks '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidResource,
                    "manifest " + std::string(where) + "." + key + ": " + e.what());
    }
}

template <class Map>
auto& find_or_throw(const Map& m, std::string_view name, std::string_view what)
{
    auto it = m.find(name);
    if (it == m.end())
        throw Error(ErrorKind::MissingResources, "no " + std::string(what) + " '" + std::string(name) + "'");
    return it->second;
}

}  // namespace

ResourceRegistry ResourceRegistry::load(const std::filesystem::path& data_dir)
{
    ResourceRegistry r;
    r.data_dir_ = data_dir;
    json manifest;
    try {
        manifest = json::parse(read_file(data_dir / "manifest.json"));
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidResource, std::string("manifest.json: ") + e.what());
    }
    auto section = [&](const char* name) {
        return manifest.contains(name) ? manifest.at(name) : json::array();
    };

    for (const auto& e : section("code_tables")) {
        auto name = field<std::string>(e, "name", "code_tables");
        auto path = data_dir / field<std::string>(e, "path", "code_tables");
        r.tables_[name] = std::make_shared<const CodeTable>(CodeTable::load(path));
        r.info_.push_back({ResourceKind::CodeTable, name, path,
                           tags_for(field<std::vector<std::string>>(e, "languages", "code_tables"))});
    }

    for (const auto& e : section("fonts")) {
        auto table = field<std::string>(e, "table", "fonts");
        auto size = parse_glyph_size(field<int>(e, "size", "fonts"));
        auto path = data_dir / field<std::string>(e, "path", "fonts");
        const auto& tags = [&]() -> const std::vector<LanguageTag>& {
            for (const auto& i : r.info_)
                if (i.kind == ResourceKind::CodeTable && i.name == table)
                    return i.tags;
            throw Error(ErrorKind::InvalidResource, "font refers to unknown table '" + table + "'");
        }();
        ResourceInfo info{ResourceKind::Font, table + std::to_string(pixels(size)), path, tags};
        if (std::filesystem::exists(path))
            r.fonts_[{table, pixels(size)}] =
                std::make_shared<const FontLibrary>(FontLibrary::load(path, size));
        else
            info.available = false;
        r.info_.push_back(std::move(info));
    }

    for (const auto& e : section("shaping")) {
        auto name = field<std::string>(e, "name", "shaping");
        auto table = field<std::string>(e, "table", "shaping");
        auto path = data_dir / field<std::string>(e, "path", "shaping");
        const auto& ct = *find_or_throw(r.tables_, table, "code table");
        r.rules_[name] = {table, std::make_shared<const RuleSet>(RuleSet::load(path, ct))};
        r.info_.push_back({ResourceKind::ShapingRules, name, path,
                           tags_for(field<std::vector<std::string>>(e, "languages", "shaping"))});
    }

    for (const auto& e : section("ime")) {
        auto language = field<std::string>(e, "language", "ime");
        auto table = field<std::string>(e, "table", "ime");
        auto path = data_dir / field<std::string>(e, "path", "ime");
        const auto& ct = *find_or_throw(r.tables_, table, "code table");
        r.ime_[language] = {table, std::make_shared<const ConversionTable>(ConversionTable::load(path, ct))};
        r.info_.push_back({ResourceKind::ConversionTable, language, path, tags_for({language})});
    }

    for (const auto& e : section("anusaaraka")) {
        auto pair = field<std::string>(e, "pair", "anusaaraka");
        auto path = data_dir / field<std::string>(e, "path", "anusaaraka");
        auto res = std::make_shared<const GlossResources>(GlossResources::load(path));
        if (res->pair() != pair)
            throw Error(ErrorKind::InvalidResource,
                        "manifest pair '" + pair + "' but files declare '" + res->pair() + "'");
        r.info_.push_back({ResourceKind::GlossResources, pair, path,
                           tags_for({res->source(), res->target()})});
        r.gloss_[pair] = std::move(res);
    }
    return r;
}

const CodeTable& ResourceRegistry::table(std::string_view name) const
{
    return *find_or_throw(tables_, name, "code table");
}

const FontLibrary& ResourceRegistry::font(std::string_view table, GlyphSize size) const
{
    auto it = fonts_.find({std::string(table), pixels(size)});
    if (it == fonts_.end())
        throw Error(ErrorKind::MissingResources,
                    "no " + std::to_string(pixels(size)) + "px font for table '" + std::string(table) + "'");
    return *it->second;
}

const RuleSet& ResourceRegistry::rules(std::string_view name) const
{
    return *find_or_throw(rules_, name, "shaping rule set").value;
}

const std::string& ResourceRegistry::rules_table(std::string_view name) const
{
    return find_or_throw(rules_, name, "shaping rule set").table;
}

std::shared_ptr<const ConversionTable> ResourceRegistry::ime(std::string_view language) const
{
    return find_or_throw(ime_, language, "conversion table for language").value;
}

const std::string& ResourceRegistry::ime_table(std::string_view language) const
{
    return find_or_throw(ime_, language, "conversion table for language").table;
}

const GlossResources& ResourceRegistry::gloss(std::string_view pair) const
{
    return *find_or_throw(gloss_, pair, "anusaaraka resources for pair");
}

std::vector<std::string> ResourceRegistry::table_names() const
{
    std::vector<std::string> out;
    for (const auto& [k, v] : tables_)
        out.push_back(k);
    return out;
}

std::vector<std::string> ResourceRegistry::ime_languages() const
{
    std::vector<std::string> out;
    for (const auto& [k, v] : ime_)
        out.push_back(k);
    return out;
}

std::vector<std::string> ResourceRegistry::gloss_pairs() const
{
    std::vector<std::string> out;
    for (const auto& [k, v] : gloss_)
        out.push_back(k);
    return out;
}

}  // namespace akshar
