#pragma once

// Loads every shipped resource named in <data>/manifest.json and tags each
// with its languages and their regional groups. Immutable after load.
//
// manifest.json:
//   code_tables  [{name, path, languages}]
//   fonts        [{table, size, path}]          missing files are skipped
//   shaping      [{name, table, path, languages}]
//   ime          [{language, table, path}]
//   anusaaraka   [{pair, path}]                  pair is "source-target"

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "akshar/anusaaraka.hpp"
#include "akshar/codetable.hpp"
#include "akshar/fontlib.hpp"
#include "akshar/ime.hpp"
#include "akshar/shaping.hpp"

namespace akshar {

enum class LanguageGroup { Northern, Western, SouthIndian, Eastern, Other };

std::string_view to_string(LanguageGroup g) noexcept;

// ISO 639 code to group; languages outside the four Indic groups are Other.
LanguageGroup language_group(std::string_view language) noexcept;

struct LanguageTag {
    std::string language;
    LanguageGroup group = LanguageGroup::Other;
};

enum class ResourceKind { CodeTable, Font, ShapingRules, ConversionTable, GlossResources };

std::string_view to_string(ResourceKind k) noexcept;

struct ResourceInfo {
    ResourceKind kind;
    std::string name;
    std::filesystem::path path;
    std::vector<LanguageTag> tags;
    bool available = true;
};

class ResourceRegistry {
public:
    static ResourceRegistry load(const std::filesystem::path& data_dir);

    const std::filesystem::path& data_dir() const noexcept { return data_dir_; }
    const std::vector<ResourceInfo>& resources() const noexcept { return info_; }

    const CodeTable& table(std::string_view name) const;
    const FontLibrary& font(std::string_view table, GlyphSize size) const;
    const RuleSet& rules(std::string_view name) const;
    // Name of the code table the rule set was built against.
    const std::string& rules_table(std::string_view name) const;
    std::shared_ptr<const ConversionTable> ime(std::string_view language) const;
    const std::string& ime_table(std::string_view language) const;
    const GlossResources& gloss(std::string_view pair) const;

    std::vector<std::string> table_names() const;
    std::vector<std::string> ime_languages() const;
    std::vector<std::string> gloss_pairs() const;

private:
    template <class T>
    struct Named {
        std::string table;
        std::shared_ptr<const T> value;
    };

    std::filesystem::path data_dir_;
    std::vector<ResourceInfo> info_;
    std::map<std::string, std::shared_ptr<const CodeTable>, std::less<>> tables_;
    std::map<std::pair<std::string, int>, std::shared_ptr<const FontLibrary>> fonts_;
    std::map<std::string, Named<RuleSet>, std::less<>> rules_;
    std::map<std::string, Named<ConversionTable>, std::less<>> ime_;
    std::map<std::string, std::shared_ptr<const GlossResources>, std::less<>> gloss_;
};

}  // namespace akshar
