#ifndef CHUNKTX_CONLLU_HPP
#define CHUNKTX_CONLLU_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "chunktx/error.hpp"

namespace chunktx {

// One CoNLL-U token row. Fields are stored verbatim so that writing a
// parsed file reproduces the input byte for byte.
struct Token {
  int id = 0;
  std::string form = "_";
  std::string lemma = "_";
  std::string upos = "_";
  std::string xpos = "_";
  std::string feats = "_";
  int head = 0;  // 0 = attached to the artificial root
  std::string deprel = "_";
  std::string deps = "_";
  std::string misc = "_";
};

struct Sentence {
  std::string sent_id;                 // from "# sent_id = ..." if present
  std::vector<std::string> comments;   // full comment lines, '#' included
  std::vector<Token> tokens;

  int size() const { return static_cast<int>(tokens.size()); }
  const Token& token(int id) const { return tokens[static_cast<std::size_t>(id) - 1]; }
  Token& token(int id) { return tokens[static_cast<std::size_t>(id) - 1]; }
};

// "nsubj:pass" -> "nsubj"
std::string_view deprel_base(std::string_view deprel);

struct Violation {
  std::string message;
  std::vector<int> token_ids;
};

// Empty report iff the sentence satisfies all tree invariants.
std::vector<Violation> validate_tree(const Sentence& s);

struct ParseOptions {
  // strict: any invalid sentence aborts the parse.
  // lenient: invalid sentences are skipped and recorded as warnings.
  bool strict = true;
};

struct ParseWarnings {
  int dropped_lines = 0;      // multiword ranges and empty nodes
  int skipped_sentences = 0;  // lenient mode only
  std::vector<std::string> messages;
};

std::vector<Sentence> parse_conllu(std::string_view text, const ParseOptions& opt = {},
                                   ParseWarnings* warnings = nullptr);

std::string write_conllu(const std::vector<Sentence>& sentences);
void write_sentence(std::string& out, const Sentence& s);

std::vector<Sentence> read_treebank(const std::filesystem::path& path, const ParseOptions& opt = {},
                                    ParseWarnings* warnings = nullptr);
void write_treebank(const std::filesystem::path& path, const std::vector<Sentence>& sentences);

}  // namespace chunktx

#endif
