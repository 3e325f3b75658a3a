#include "chunktx/chunks.hpp"

#include <algorithm>
#include <array>

#include "chunktx/util.hpp"

namespace chunktx {

namespace {

constexpr std::array<std::string_view, 6> kChunkTypeNames = {"NP", "VP", "JJP",
                                                             "RBP", "CCP", "BLK"};

bool any_of(std::string_view needle, std::initializer_list<std::string_view> haystack) {
  for (std::string_view s : haystack)
    if (s == needle) return true;
  return false;
}

}  // namespace

std::string_view to_string(ChunkType t) { return kChunkTypeNames[static_cast<std::size_t>(t)]; }

ChunkType chunk_type_from(std::string_view name) {
  for (std::size_t i = 0; i < kChunkTypeNames.size(); ++i)
    if (kChunkTypeNames[i] == name) return static_cast<ChunkType>(i);
  throw DataError("unknown chunk type '" + std::string(name) + "'");
}

RelClass classify_relation(std::string_view deprel_base, std::string_view parent_upos) {
  if (any_of(deprel_base, {"aux", "appos", "nummod", "det", "case", "fixed", "flat",
                           "compound", "goeswith"}))
    return RelClass::Intra;
  if (deprel_base == "amod" &&
      any_of(parent_upos, {"NOUN", "PROPN", "PRON", "ADJ", "ADV"}))
    return RelClass::Intra;
  if (deprel_base == "advmod" && any_of(parent_upos, {"VERB", "AUX", "ADV", "ADJ"}))
    return RelClass::Intra;
  return RelClass::Inter;
}

ChunkType chunk_type_of(std::string_view upos) {
  if (any_of(upos, {"NOUN", "PROPN", "PRON"})) return ChunkType::NP;
  if (any_of(upos, {"VERB", "AUX"})) return ChunkType::VP;
  if (upos == "ADJ") return ChunkType::JJP;
  if (upos == "ADV") return ChunkType::RBP;
  if (any_of(upos, {"CCONJ", "SCONJ"})) return ChunkType::CCP;
  return ChunkType::BLK;
}

std::string make_bi_label(bool begin, ChunkType t) {
  std::string out = begin ? "B-" : "I-";
  out += to_string(t);
  return out;
}

BIParts parse_bi_label(std::string_view label) {
  if (label.size() < 3 || label[1] != '-' || (label[0] != 'B' && label[0] != 'I'))
    throw DataError("malformed BI label '" + std::string(label) + "'");
  return {label[0] == 'B', chunk_type_from(label.substr(2))};
}

std::vector<LabelSpan> spans_from_labels(const std::vector<std::string>& labels) {
  std::vector<LabelSpan> spans;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    BIParts p = parse_bi_label(labels[i]);
    if (p.begin || spans.empty() || spans.back().type != p.type)
      spans.push_back({static_cast<int>(i) + 1, static_cast<int>(i) + 1, p.type});
    else
      spans.back().end = static_cast<int>(i) + 1;
  }
  return spans;
}

DerivedChunks derive_chunks(const Sentence& s) {
  auto report = validate_tree(s);
  if (!report.empty())
    throw ValidationError("derive_chunks on invalid sentence: " + report.front().message);

  const int n = s.size();
  DerivedChunks out;
  if (n == 0) return out;

  // A token heads a chunk iff its own relation classifies Inter and its
  // parent also heads a chunk; the root always does. Anything else sits in
  // the subtree hanging off an intra-chunk attachment and is absorbed.
  std::vector<bool> is_head(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> depth(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, 0);  // chunk head token id

  // process tokens in topological order (parent before child)
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  {
    std::vector<std::vector<int>> children(static_cast<std::size_t>(n) + 1);
    int root = 0;
    for (const Token& t : s.tokens) {
      if (t.head == 0)
        root = t.id;
      else
        children[static_cast<std::size_t>(t.head)].push_back(t.id);
    }
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int id = stack.back();
      stack.pop_back();
      order.push_back(id);
      for (int c : children[static_cast<std::size_t>(id)]) stack.push_back(c);
    }
  }

  for (int id : order) {
    const Token& t = s.token(id);
    if (t.head == 0) {
      is_head[static_cast<std::size_t>(id)] = true;
      depth[static_cast<std::size_t>(id)] = 0;
      owner[static_cast<std::size_t>(id)] = id;
      continue;
    }
    depth[static_cast<std::size_t>(id)] = depth[static_cast<std::size_t>(t.head)] + 1;
    bool inter = classify_relation(deprel_base(t.deprel), s.token(t.head).upos) ==
                 RelClass::Inter;
    if (inter && is_head[static_cast<std::size_t>(t.head)]) {
      is_head[static_cast<std::size_t>(id)] = true;
      owner[static_cast<std::size_t>(id)] = id;
    } else {
      owner[static_cast<std::size_t>(id)] = owner[static_cast<std::size_t>(t.head)];
    }
  }

  // group members per chunk head, in surface order
  std::vector<std::vector<int>> members(static_cast<std::size_t>(n) + 1);
  for (int id = 1; id <= n; ++id)
    members[static_cast<std::size_t>(owner[static_cast<std::size_t>(id)])].push_back(id);

  std::vector<ChunkSpan> spans;
  for (int h = 1; h <= n; ++h) {
    const auto& mem = members[static_cast<std::size_t>(h)];
    if (mem.empty()) continue;
    // split into maximal contiguous runs; the run holding the head keeps it,
    // every other run becomes its own chunk headed by its shallowest token
    std::size_t i = 0;
    while (i < mem.size()) {
      std::size_t j = i;
      while (j + 1 < mem.size() && mem[j + 1] == mem[j] + 1) ++j;
      ChunkSpan span;
      span.start = mem[i];
      span.end = mem[j];
      if (h >= span.start && h <= span.end) {
        span.head = h;
      } else {
        int best = mem[i];
        for (std::size_t k = i; k <= j; ++k)
          if (depth[static_cast<std::size_t>(mem[k])] < depth[static_cast<std::size_t>(best)])
            best = mem[k];
        span.head = best;
      }
      span.type = chunk_type_of(s.token(span.head).upos);
      spans.push_back(span);
      i = j + 1;
    }
  }

  std::sort(spans.begin(), spans.end(),
            [](const ChunkSpan& a, const ChunkSpan& b) { return a.start < b.start; });
  for (std::size_t i = 0; i < spans.size(); ++i) spans[i].ordinal = static_cast<int>(i) + 1;

  out.labels.resize(static_cast<std::size_t>(n));
  for (const ChunkSpan& span : spans)
    for (int id = span.start; id <= span.end; ++id)
      out.labels[static_cast<std::size_t>(id) - 1] = make_bi_label(id == span.start, span.type);
  out.spans = std::move(spans);
  return out;
}

void annotate_chunks(Sentence& s, const DerivedChunks& chunks) {
  if (chunks.labels.size() != s.tokens.size())
    throw DataError("chunk annotation does not match sentence length");
  std::vector<const ChunkSpan*> span_of(s.tokens.size() + 1, nullptr);
  for (const ChunkSpan& span : chunks.spans)
    for (int id = span.start; id <= span.end; ++id) span_of[static_cast<std::size_t>(id)] = &span;
  for (Token& t : s.tokens) {
    const ChunkSpan* span = span_of[static_cast<std::size_t>(t.id)];
    std::string entry = "Chunk=" + chunks.labels[static_cast<std::size_t>(t.id) - 1] +
                        "|ChunkOrd=" + std::to_string(span->ordinal);
    if (span->head == t.id) entry += "|ChunkHead=Yes";
    if (t.misc.empty() || t.misc == "_")
      t.misc = entry;
    else
      t.misc += "|" + entry;
  }
}

std::vector<std::string> chunk_labels_from_misc(const Sentence& s) {
  std::vector<std::string> labels;
  labels.reserve(s.tokens.size());
  for (const Token& t : s.tokens) {
    std::string label;
    for (std::string_view field : split(t.misc, '|')) {
      if (field.starts_with("Chunk=")) {
        label = std::string(field.substr(6));
        break;
      }
    }
    if (label.empty())
      throw DataError("token " + std::to_string(t.id) +
                      " carries no Chunk= annotation; run derive first");
    labels.push_back(std::move(label));
  }
  return labels;
}

}  // namespace chunktx
