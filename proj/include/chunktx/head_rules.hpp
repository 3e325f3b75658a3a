#ifndef CHUNKTX_HEAD_RULES_HPP
#define CHUNKTX_HEAD_RULES_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "chunktx/chunks.hpp"

namespace chunktx {

enum class Direction { Leftmost, Rightmost };

struct HeadRule {
  ChunkType type = ChunkType::BLK;
  std::vector<std::string> priority;  // upos tags, tried in order
  Direction direction = Direction::Rightmost;
};

struct HeadRuleSet {
  std::map<ChunkType, HeadRule> rules;
  Direction fallback = Direction::Rightmost;
};

struct TagAt {
  int pos = 0;  // token id
  std::string upos;
};

// First priority tag with any match wins; the rule's direction picks among
// its matches. No match at all (or no rule) falls back to the
// fallback-direction end of the span.
int identify_head(const std::vector<TagAt>& span, ChunkType type, const HeadRuleSet& rules);

// Line format:  CHUNKTYPE = TAG,TAG,... ; DIRECTION
//               FALLBACK = DIRECTION
// '#' starts a comment. Every chunk type must be covered by a rule or by
// the fallback.
HeadRuleSet load_rules(std::string_view config);
HeadRuleSet load_rules_file(const std::filesystem::path& path);

// The shipped defaults (rules/default.rules mirrors this).
HeadRuleSet default_rules();

}  // namespace chunktx

#endif
