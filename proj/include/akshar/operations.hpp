#pragma once

// The operations behind both the command line and the HTTP service. Each
// takes UTF-8 or raw bytes and returns exactly what either front end emits,
// so the two cannot drift apart.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "akshar/codec.hpp"
#include "akshar/error.hpp"
#include "akshar/registry.hpp"

namespace akshar::ops {

inline constexpr std::string_view kDefaultTable = "indic";
inline constexpr std::string_view kDefaultRules = "indic";

Bytes encode(const ResourceRegistry& reg, std::string_view utf8, std::string_view table,
             bool interchange);

std::string decode(const ResourceRegistry& reg, std::span<const std::uint8_t> stream,
                   std::string_view table, bool interchange, bool lossy);

// Byte-level conversion only; no table needed.
Bytes convert(std::span<const std::uint8_t> stream, bool to_interchange);

// to is a script name or "hk" for Harvard-Kyoto romanization. An empty from
// takes the script of the first table character in the text.
std::string translit(const ResourceRegistry& reg, std::string_view utf8, std::string_view from,
                     std::string_view to, Fallback fallback, std::string_view table);

// Shapes with the rule set and renders with its table's font; PBM P4 bytes.
std::string render(const ResourceRegistry& reg, std::string_view utf8, GlyphSize size,
                   std::string_view rules);

std::string gloss(const ResourceRegistry& reg, std::string_view pair, std::string_view sentence);

// Whitespace is not counted as corpus text.
Coverage coverage(const ResourceRegistry& reg, std::string_view utf8, std::string_view table);

nlohmann::json to_json(const Coverage& c);
nlohmann::json to_json(const Candidate& c);
nlohmann::json to_json(const ImeSession& s);
nlohmann::json to_json(const ResourceRegistry& reg);
nlohmann::json to_json(const Error& e);

}  // namespace akshar::ops
