#ifndef CHUNKTX_MODEL_IO_HPP
#define CHUNKTX_MODEL_IO_HPP

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace chunktx {

// Line-oriented model container shared by the chunker and the parser.
// Sorted on write so identical models serialize to identical bytes:
//
//   format <TAB> chunktx-model <TAB> 1
//   kind <TAB> chunker|parser
//   template <TAB> <template version>
//   labels <TAB> l1 <TAB> l2 ...
//   t <TAB> from <TAB> to <TAB> weight      (transition rows, optional)
//   w <TAB> feature <TAB> label <TAB> weight
struct ModelFile {
  std::string kind;
  std::string feature_template;
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::vector<double>> feature_weights;  // per label
  std::vector<std::vector<double>> transitions;                          // may be empty
};

std::string serialize_model(const ModelFile& m);
ModelFile deserialize_model(std::string_view text, std::string_view expected_kind);

}  // namespace chunktx

#endif
