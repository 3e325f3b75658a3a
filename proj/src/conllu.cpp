#include "chunktx/conllu.hpp"

#include <algorithm>
#include <charconv>

#include "chunktx/util.hpp"

namespace chunktx {

std::string_view deprel_base(std::string_view deprel) {
  auto pos = deprel.find(':');
  return pos == std::string_view::npos ? deprel : deprel.substr(0, pos);
}

namespace {

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

std::string id_list(const std::vector<int>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ids[i]);
  }
  return out;
}

}  // namespace

std::vector<Violation> validate_tree(const Sentence& s) {
  std::vector<Violation> report;
  const int n = s.size();

  std::vector<int> bad_ids;
  for (int i = 0; i < n; ++i)
    if (s.tokens[static_cast<std::size_t>(i)].id != i + 1)
      bad_ids.push_back(s.tokens[static_cast<std::size_t>(i)].id);
  if (!bad_ids.empty()) {
    report.push_back({"token ids are not 1..n in order", bad_ids});
    return report;  // later checks index by id
  }

  std::vector<int> roots;
  for (const Token& t : s.tokens) {
    if (t.head < 0 || t.head > n)
      report.push_back({"head out of range: " + std::to_string(t.head), {t.id}});
    if (t.head == t.id) report.push_back({"token is its own head", {t.id}});
    if (t.deprel.empty() || t.deprel == "_")
      report.push_back({"empty deprel", {t.id}});
    if (t.head == 0) roots.push_back(t.id);
  }
  if (roots.empty()) {
    report.push_back({"no root (no token with head 0)", {}});
  } else if (roots.size() > 1) {
    report.push_back({"multiple roots", roots});
  } else if (deprel_base(s.token(roots[0]).deprel) != "root") {
    report.push_back({"root token deprel is not 'root'", {roots[0]}});
  }

  // cycle detection by walking head chains; any token that cannot reach
  // the root sits on (or hangs from) a cycle
  std::vector<int> state(static_cast<std::size_t>(n) + 1, 0);  // 0 unseen, 1 on path, 2 done
  std::vector<int> cycle_ids;
  for (int start = 1; start <= n; ++start) {
    if (state[static_cast<std::size_t>(start)] != 0) continue;
    std::vector<int> path;
    int cur = start;
    while (cur != 0 && state[static_cast<std::size_t>(cur)] == 0) {
      state[static_cast<std::size_t>(cur)] = 1;
      path.push_back(cur);
      int h = s.token(cur).head;
      if (h < 0 || h > n || h == cur) break;  // already reported above
      cur = h;
    }
    if (cur != 0 && state[static_cast<std::size_t>(cur)] == 1) {
      // found a new cycle: the segment of the path from cur onwards
      auto it = std::find(path.begin(), path.end(), cur);
      for (; it != path.end(); ++it) cycle_ids.push_back(*it);
    }
    for (int id : path) state[static_cast<std::size_t>(id)] = 2;
  }
  if (!cycle_ids.empty()) {
    std::sort(cycle_ids.begin(), cycle_ids.end());
    report.push_back({"cycle among tokens " + id_list(cycle_ids), cycle_ids});
  }
  return report;
}

std::vector<Sentence> parse_conllu(std::string_view text, const ParseOptions& opt,
                                   ParseWarnings* warnings) {
  std::vector<Sentence> sentences;
  Sentence cur;
  bool has_content = false;
  int line_no = 0;

  auto finish = [&]() {
    if (!has_content) return;
    auto report = validate_tree(cur);
    if (report.empty()) {
      sentences.push_back(std::move(cur));
    } else {
      std::string where = cur.sent_id.empty()
                              ? "sentence #" + std::to_string(sentences.size() + 1)
                              : "sentence '" + cur.sent_id + "'";
      std::string msg = where + ": " + report.front().message;
      if (opt.strict) throw ValidationError(msg);
      if (warnings) {
        warnings->skipped_sentences++;
        warnings->messages.push_back("skipped " + msg);
      }
    }
    cur = Sentence{};
    has_content = false;
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    bool at_end = eol >= text.size();
    pos = eol + 1;
    ++line_no;

    if (line.empty()) {
      finish();
      if (at_end) break;
      continue;
    }
    if (line.front() == '#') {
      has_content = true;
      cur.comments.emplace_back(line);
      std::string_view rest = trim(line.substr(1));
      if (rest.starts_with("sent_id")) {
        std::size_t eq = rest.find('=');
        if (eq != std::string_view::npos) cur.sent_id = std::string(trim(rest.substr(eq + 1)));
      }
      if (at_end) break;
      continue;
    }

    auto cols = split(line, '\t');
    if (cols.size() != 10)
      throw ParseError(line_no, "expected 10 tab-separated columns, got " +
                                    std::to_string(cols.size()));

    std::string_view id_field = cols[0];
    if (id_field.find('-') != std::string_view::npos ||
        id_field.find('.') != std::string_view::npos) {
      // multiword token range or empty node: operate on the basic tree only
      has_content = true;
      if (warnings) {
        warnings->dropped_lines++;
        warnings->messages.push_back("line " + std::to_string(line_no) + ": dropped '" +
                                     std::string(id_field) + "' row");
      }
      if (at_end) break;
      continue;
    }

    Token t;
    if (!parse_int(id_field, t.id) || t.id < 1)
      throw ParseError(line_no, "bad token id '" + std::string(id_field) + "'");
    t.form = std::string(cols[1]);
    t.lemma = std::string(cols[2]);
    t.upos = std::string(cols[3]);
    t.xpos = std::string(cols[4]);
    t.feats = std::string(cols[5]);
    if (!parse_int(cols[6], t.head) || t.head < 0)
      throw ParseError(line_no, "non-integer head '" + std::string(cols[6]) + "'");
    t.deprel = std::string(cols[7]);
    t.deps = std::string(cols[8]);
    t.misc = std::string(cols[9]);
    cur.tokens.push_back(std::move(t));
    has_content = true;
    if (at_end) break;
  }
  finish();
  return sentences;
}

void write_sentence(std::string& out, const Sentence& s) {
  for (const std::string& c : s.comments) {
    out += c;
    out += '\n';
  }
  for (const Token& t : s.tokens) {
    out += std::to_string(t.id);
    out += '\t';
    out += t.form;
    out += '\t';
    out += t.lemma;
    out += '\t';
    out += t.upos;
    out += '\t';
    out += t.xpos;
    out += '\t';
    out += t.feats;
    out += '\t';
    out += std::to_string(t.head);
    out += '\t';
    out += t.deprel;
    out += '\t';
    out += t.deps;
    out += '\t';
    out += t.misc;
    out += '\n';
  }
  out += '\n';
}

std::string write_conllu(const std::vector<Sentence>& sentences) {
  for (const Sentence& s : sentences) {
    auto report = validate_tree(s);
    if (!report.empty()) {
      std::string where = s.sent_id.empty() ? "sentence" : "sentence '" + s.sent_id + "'";
      throw ValidationError("refusing to write invalid " + where + ": " + report.front().message);
    }
  }
  std::string out;
  for (const Sentence& s : sentences) write_sentence(out, s);
  return out;
}

std::vector<Sentence> read_treebank(const std::filesystem::path& path, const ParseOptions& opt,
                                    ParseWarnings* warnings) {
  return parse_conllu(read_file(path), opt, warnings);
}

void write_treebank(const std::filesystem::path& path, const std::vector<Sentence>& sentences) {
  write_file(path, write_conllu(sentences));
}

}  // namespace chunktx
