#include "chunktx/model_io.hpp"

#include <algorithm>
#include <map>

#include "chunktx/error.hpp"
#include "chunktx/util.hpp"

namespace chunktx {

constexpr std::string_view kFormatName = "chunktx-model";
constexpr std::string_view kFormatVersion = "1";

std::string serialize_model(const ModelFile& m) {
  std::string out;
  out += "format\t";
  out += kFormatName;
  out += '\t';
  out += kFormatVersion;
  out += '\n';
  out += "kind\t" + m.kind + '\n';
  out += "template\t" + m.feature_template + '\n';
  out += "labels";
  for (const std::string& l : m.labels) out += '\t' + l;
  out += '\n';

  const std::size_t nl = m.labels.size();
  for (std::size_t i = 0; i < m.transitions.size(); ++i)
    for (std::size_t j = 0; j < m.transitions[i].size(); ++j)
      if (m.transitions[i][j] != 0.0)
        out += "t\t" + m.labels[i] + '\t' + m.labels[j] + '\t' +
               fmt_double(m.transitions[i][j]) + '\n';

  std::vector<const std::string*> features;
  features.reserve(m.feature_weights.size());
  for (const auto& [f, w] : m.feature_weights) features.push_back(&f);
  std::sort(features.begin(), features.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });
  for (const std::string* f : features) {
    const auto& w = m.feature_weights.at(*f);
    for (std::size_t j = 0; j < nl && j < w.size(); ++j)
      if (w[j] != 0.0)
        out += "w\t" + *f + '\t' + m.labels[j] + '\t' + fmt_double(w[j]) + '\n';
  }
  return out;
}

ModelFile deserialize_model(std::string_view text, std::string_view expected_kind) {
  ModelFile m;
  std::map<std::string, std::size_t> label_index;
  bool saw_format = false;
  int line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (line.empty()) continue;
    auto cols = split(line, '\t');
    std::string_view tag = cols[0];
    auto bad = [&](const std::string& why) {
      return DataError("model line " + std::to_string(line_no) + ": " + why);
    };
    if (tag == "format") {
      if (cols.size() != 3 || cols[1] != kFormatName) throw bad("not a chunktx model file");
      if (cols[2] != kFormatVersion)
        throw bad("unsupported model format version '" + std::string(cols[2]) + "'");
      saw_format = true;
    } else if (tag == "kind") {
      if (cols.size() != 2) throw bad("malformed kind row");
      m.kind = std::string(cols[1]);
      if (m.kind != expected_kind)
        throw DataError("model kind mismatch: expected " + std::string(expected_kind) +
                        ", file contains " + m.kind);
    } else if (tag == "template") {
      if (cols.size() != 2) throw bad("malformed template row");
      m.feature_template = std::string(cols[1]);
    } else if (tag == "labels") {
      for (std::size_t i = 1; i < cols.size(); ++i) {
        label_index[std::string(cols[i])] = m.labels.size();
        m.labels.emplace_back(cols[i]);
      }
      if (m.labels.empty()) throw bad("empty label set");
    } else if (tag == "t") {
      if (cols.size() != 4) throw bad("malformed transition row");
      auto from = label_index.find(std::string(cols[1]));
      auto to = label_index.find(std::string(cols[2]));
      if (from == label_index.end() || to == label_index.end())
        throw bad("transition row references unknown label");
      if (m.transitions.empty())
        m.transitions.assign(m.labels.size(), std::vector<double>(m.labels.size(), 0.0));
      m.transitions[from->second][to->second] = parse_double(cols[3]);
    } else if (tag == "w") {
      if (cols.size() != 4) throw bad("malformed weight row");
      auto li = label_index.find(std::string(cols[2]));
      if (li == label_index.end()) throw bad("weight row references unknown label");
      auto& w = m.feature_weights[std::string(cols[1])];
      if (w.empty()) w.assign(m.labels.size(), 0.0);
      w[li->second] = parse_double(cols[3]);
    } else {
      throw bad("unknown row tag '" + std::string(tag) + "'");
    }
  }
  if (!saw_format) throw DataError("not a chunktx model file (missing format header)");
  if (m.labels.empty()) throw DataError("model file has no labels row");
  return m;
}

}  // namespace chunktx
