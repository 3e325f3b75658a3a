#ifndef CHUNKTX_CHUNKS_HPP
#define CHUNKTX_CHUNKS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "chunktx/conllu.hpp"

namespace chunktx {

enum class ChunkType { NP, VP, JJP, RBP, CCP, BLK };

std::string_view to_string(ChunkType t);
ChunkType chunk_type_from(std::string_view name);

enum class RelClass { Intra, Inter };

// Relation partition. Total: unlisted relations are Inter; only amod and
// advmod look at the parent tag.
RelClass classify_relation(std::string_view deprel_base, std::string_view parent_upos);

// Chunk type is a function of the head token's tag alone.
ChunkType chunk_type_of(std::string_view head_upos);

struct ChunkSpan {
  int start = 0;  // token ids, inclusive
  int end = 0;
  int head = 0;
  ChunkType type = ChunkType::BLK;
  int ordinal = 0;  // 1-based, left to right
};

struct DerivedChunks {
  std::vector<ChunkSpan> spans;       // ordered, partition of 1..n
  std::vector<std::string> labels;    // one BI label per token
};

// Gold chunks from a gold dependency tree: chunk heads are the tokens whose
// path to the root consists of inter-chunk relations only; every other token
// is absorbed into the chunk of its nearest head ancestor. Non-contiguous
// member runs are split off as separate chunks headed by their shallowest
// token, so the result is always a partition into contiguous spans.
DerivedChunks derive_chunks(const Sentence& s);

std::string make_bi_label(bool begin, ChunkType t);

struct BIParts {
  bool begin = true;
  ChunkType type = ChunkType::BLK;
};
BIParts parse_bi_label(std::string_view label);

struct LabelSpan {
  int start = 0;
  int end = 0;
  ChunkType type = ChunkType::BLK;
};

// BI semantics over a repaired label sequence.
std::vector<LabelSpan> spans_from_labels(const std::vector<std::string>& labels);

// MISC annotation carried by derived treebanks:
//   Chunk=B-NP|ChunkOrd=1|ChunkHead=Yes  (ChunkHead only on head tokens)
void annotate_chunks(Sentence& s, const DerivedChunks& chunks);
std::vector<std::string> chunk_labels_from_misc(const Sentence& s);

}  // namespace chunktx

#endif
