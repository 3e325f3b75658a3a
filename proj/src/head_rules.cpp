#include "chunktx/head_rules.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "chunktx/util.hpp"

namespace chunktx {

namespace {

constexpr std::array<std::string_view, 17> kUposTags = {
    "ADJ", "ADP", "ADV",  "AUX",  "CCONJ", "DET",  "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X"};

bool known_upos(std::string_view tag) {
  return std::find(kUposTags.begin(), kUposTags.end(), tag) != kUposTags.end();
}

Direction parse_direction(std::string_view word) {
  std::string up(word);
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (up == "LEFTMOST") return Direction::Leftmost;
  if (up == "RIGHTMOST") return Direction::Rightmost;
  throw ConfigError("unknown direction '" + std::string(word) + "'");
}

}  // namespace

int identify_head(const std::vector<TagAt>& span, ChunkType type, const HeadRuleSet& rules) {
  if (span.empty()) throw DataError("identify_head on empty span");
  auto pick = [&](Direction dir, auto matches) -> int {
    int found = 0;
    for (const TagAt& t : span) {
      if (!matches(t)) continue;
      found = t.pos;
      if (dir == Direction::Leftmost) break;  // keep last match otherwise
    }
    return found;
  };
  auto it = rules.rules.find(type);
  if (it != rules.rules.end()) {
    for (const std::string& tag : it->second.priority) {
      int pos = pick(it->second.direction, [&](const TagAt& t) { return t.upos == tag; });
      if (pos != 0) return pos;
    }
  }
  return pick(rules.fallback, [](const TagAt&) { return true; });
}

HeadRuleSet load_rules(std::string_view config) {
  HeadRuleSet out;
  bool has_fallback = false;
  int line_no = 0;
  for (std::string_view raw : split(config, '\n')) {
    ++line_no;
    std::string_view line = trim(raw);
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;

    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("rules line " + std::to_string(line_no) + ": missing '='");
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));

    if (key == "FALLBACK") {
      out.fallback = parse_direction(value);
      has_fallback = true;
      continue;
    }

    ChunkType type;
    try {
      type = chunk_type_from(key);
    } catch (const DataError&) {
      throw ConfigError("rules line " + std::to_string(line_no) + ": unknown chunk type '" +
                        std::string(key) + "'");
    }
    auto semi = value.find(';');
    if (semi == std::string_view::npos)
      throw ConfigError("rules line " + std::to_string(line_no) +
                        ": expected 'TAG,... ; DIRECTION'");
    HeadRule rule;
    rule.type = type;
    rule.direction = parse_direction(trim(value.substr(semi + 1)));
    for (std::string_view tag : split(value.substr(0, semi), ',')) {
      tag = trim(tag);
      if (tag.empty()) continue;
      if (!known_upos(tag))
        throw ConfigError("rules line " + std::to_string(line_no) + ": unknown upos tag '" +
                          std::string(tag) + "'");
      rule.priority.emplace_back(tag);
    }
    if (rule.priority.empty())
      throw ConfigError("rules line " + std::to_string(line_no) + ": empty priority list");
    out.rules[type] = std::move(rule);
  }
  if (!has_fallback) {
    for (ChunkType t : {ChunkType::NP, ChunkType::VP, ChunkType::JJP, ChunkType::RBP,
                        ChunkType::CCP, ChunkType::BLK})
      if (!out.rules.count(t))
        throw ConfigError("no rule for chunk type " + std::string(to_string(t)) +
                          " and no FALLBACK given");
  }
  return out;
}

HeadRuleSet load_rules_file(const std::filesystem::path& path) {
  try {
    return load_rules(read_file(path));
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

HeadRuleSet default_rules() {
  HeadRuleSet rs;
  rs.fallback = Direction::Rightmost;
  rs.rules[ChunkType::NP] = {ChunkType::NP, {"NOUN", "PROPN", "PRON"}, Direction::Rightmost};
  rs.rules[ChunkType::VP] = {ChunkType::VP, {"VERB", "AUX"}, Direction::Rightmost};
  rs.rules[ChunkType::JJP] = {ChunkType::JJP, {"ADJ"}, Direction::Rightmost};
  rs.rules[ChunkType::RBP] = {ChunkType::RBP, {"ADV"}, Direction::Rightmost};
  rs.rules[ChunkType::CCP] = {ChunkType::CCP, {"CCONJ", "SCONJ"}, Direction::Rightmost};
  return rs;
}

}  // namespace chunktx
