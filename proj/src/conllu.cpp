#include "negraph/conllu.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace negraph {

namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = line.find(sep, pos);
    if (next == std::string::npos) {
      fields.push_back(line.substr(pos));
      break;
    }
    fields.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
  return fields;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c);
  });
}

// One raw token line, kept until the sentence block ends so edges can be
// validated against the full vertex set.
struct RawToken {
  int id = 0;
  std::string form;
  std::string lemma;
  std::string pos;
  int head = 0;
  std::string deprel;
  std::string deps;  // raw DEPS column
  std::size_t line_no = 0;
};

struct RawSentence {
  std::string sent_id;  // may be empty
  std::string text;
  std::vector<RawToken> tokens;
  std::size_t first_line = 0;
};

// Assign spans by scanning the sentence text left to right for each
// surface form. Unfound tokens keep the (0,0) sentinel.
void assign_spans(const std::string& text, std::vector<Vertex>& vertices) {
  if (text.empty()) return;
  std::size_t pos = 0;
  for (Vertex& v : vertices) {
    std::size_t at = text.find(v.word, pos);
    if (at == std::string::npos) continue;
    v.span = Span{at, at + v.word.size()};
    pos = at + v.word.size();
  }
}

SentenceGraph build_sentence(const RawSentence& raw,
                             const std::string& fallback_id) {
  const int n = static_cast<int>(raw.tokens.size());
  std::vector<Vertex> vertices;
  vertices.reserve(n);
  std::vector<Edge> edges;

  for (const RawToken& t : raw.tokens) {
    Vertex v;
    v.index = t.id;
    v.word = t.form;
    v.lemma = t.lemma;
    v.pos = t.pos;
    vertices.push_back(std::move(v));
  }

  for (const RawToken& t : raw.tokens) {
    if (t.head < 0 || t.head > n)
      throw ParseError("HEAD " + std::to_string(t.head) +
                           " references a nonexistent token id",
                       t.line_no);
    if (t.deps != "_" && !t.deps.empty()) {
      // Enhanced graph: `head:rel|head:rel`. Entries headed by an empty
      // node ("3.1:rel") are skipped along with the nodes themselves.
      for (const std::string& part : split(t.deps, '|')) {
        std::size_t colon = part.find(':');
        if (colon == std::string::npos || colon == 0 ||
            colon + 1 >= part.size())
          throw ParseError("malformed DEPS entry '" + part + "'", t.line_no);
        std::string head_str = part.substr(0, colon);
        std::string rel = part.substr(colon + 1);
        if (head_str.find('.') != std::string::npos) continue;
        if (!all_digits(head_str))
          throw ParseError("non-numeric DEPS head '" + head_str + "'",
                           t.line_no);
        int head = std::stoi(head_str);
        if (head > n)
          throw ParseError("DEPS head " + head_str +
                               " references a nonexistent token id",
                           t.line_no);
        if (head == 0) continue;  // root edges are dropped
        edges.push_back(Edge{head, t.id, rel});
      }
    } else if (t.head != 0) {
      edges.push_back(Edge{t.head, t.id, t.deprel});
    }
  }

  assign_spans(raw.text, vertices);
  const std::string id = raw.sent_id.empty() ? fallback_id : raw.sent_id;
  try {
    return SentenceGraph(id, raw.text, std::move(vertices), std::move(edges));
  } catch (const Error& e) {
    throw ParseError(e.what(), raw.first_line);
  }
}

class Reader {
 public:
  Reader(std::istream& in, const std::string& default_doc_id)
      : in_(in), default_doc_id_(default_doc_id) {}

  std::vector<Document> read() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) {
        flush_sentence();
        continue;
      }
      if (line[0] == '#') {
        handle_comment(line);
        continue;
      }
      handle_token_line(line);
    }
    flush_sentence();
    return std::move(docs_);
  }

 private:
  void handle_comment(const std::string& line) {
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) return;
    std::string key = trim(line.substr(1, eq - 1));
    std::string value = trim(line.substr(eq + 1));
    if (key == "doc_id") {
      pending_doc_id_ = value;
    } else if (key == "sent_id") {
      current_.sent_id = value;
    } else if (key == "text") {
      current_.text = value;
    }
  }

  void handle_token_line(const std::string& line) {
    auto fields = split(line, '\t');
    if (fields.size() != 10)
      throw ParseError("expected 10 tab-separated columns, got " +
                           std::to_string(fields.size()),
                       line_no_);
    const std::string& id = fields[0];
    // Multiword-token ranges ("1-2") and empty nodes ("1.1") are skipped.
    if (id.find('-') != std::string::npos ||
        id.find('.') != std::string::npos)
      return;
    if (!all_digits(id))
      throw ParseError("non-numeric token id '" + id + "'", line_no_);

    RawToken t;
    t.id = std::stoi(id);
    t.line_no = line_no_;
    t.form = fields[1];
    const std::string& lemma = fields[2];
    t.lemma = lowercase(lemma == "_" ? fields[1] : lemma);
    t.pos = fields[4] != "_" ? fields[4] : (fields[3] != "_" ? fields[3] : "");
    if (!all_digits(fields[6]))
      throw ParseError("non-numeric HEAD '" + fields[6] + "'", line_no_);
    t.head = std::stoi(fields[6]);
    t.deprel = fields[7];
    t.deps = fields[8];

    if (current_.tokens.empty()) current_.first_line = line_no_;
    if (t.id != static_cast<int>(current_.tokens.size()) + 1)
      throw ParseError("token id " + id + " breaks the 1..n sequence",
                       line_no_);
    current_.tokens.push_back(std::move(t));
  }

  void flush_sentence() {
    if (current_.tokens.empty()) {
      current_ = RawSentence{};
      return;
    }
    Document& doc = document_for(pending_doc_id_.empty() ? default_doc_id_
                                                         : pending_doc_id_);
    const std::string fallback =
        std::to_string(doc.sentences.size() + 1);
    SentenceGraph g = build_sentence(current_, fallback);
    auto& seen = seen_sent_ids_[doc.doc_id];
    if (!seen.insert(g.id()).second)
      throw ParseError("duplicate sent_id '" + g.id() + "' in document '" +
                           doc.doc_id + "'",
                       current_.first_line);
    doc.sentences.push_back(std::move(g));
    current_ = RawSentence{};
  }

  Document& document_for(const std::string& doc_id) {
    if (!docs_.empty() && docs_.back().doc_id == doc_id) return docs_.back();
    if (!seen_doc_ids_.insert(doc_id).second)
      throw ParseError("duplicate doc_id '" + doc_id + "'", line_no_);
    docs_.push_back(Document{doc_id, {}});
    return docs_.back();
  }

  std::istream& in_;
  std::string default_doc_id_;
  std::size_t line_no_ = 0;
  RawSentence current_;
  std::string pending_doc_id_;
  std::vector<Document> docs_;
  std::set<std::string> seen_doc_ids_;
  std::map<std::string, std::set<std::string>> seen_sent_ids_;
};

}  // namespace

std::vector<Document> parse_conllu(std::istream& in,
                                   const std::string& default_doc_id) {
  return Reader(in, default_doc_id).read();
}

std::vector<Document> parse_conllu(const std::string& content,
                                   const std::string& default_doc_id) {
  std::istringstream in(content);
  return parse_conllu(in, default_doc_id);
}

std::vector<Document> parse_conllu_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_conllu(in, std::filesystem::path(path).stem().string());
}

std::string to_conllu(const Document& doc) {
  std::ostringstream out;
  bool first = true;
  for (const SentenceGraph& g : doc.sentences) {
    if (first) {
      out << "# doc_id = " << doc.doc_id << "\n";
      first = false;
    }
    out << "# sent_id = " << g.id() << "\n";
    if (!g.text().empty()) out << "# text = " << g.text() << "\n";
    for (const Vertex& v : g.vertices()) {
      auto governors = g.governors_of(v.index);
      std::string deps;
      if (governors.empty()) {
        deps = "0:root";
      } else {
        for (const auto& [edge, gov] : governors) {
          if (!deps.empty()) deps += "|";
          deps += std::to_string(edge.governor) + ":" + edge.relation;
        }
      }
      int head = governors.empty() ? 0 : governors.front().first.governor;
      std::string deprel =
          governors.empty() ? "root" : governors.front().first.relation;
      out << v.index << '\t' << v.word << '\t' << v.lemma << "\t_\t"
          << (v.pos.empty() ? "_" : v.pos) << "\t_\t" << head << '\t'
          << deprel << '\t' << deps << "\t_\n";
    }
    out << "\n";
  }
  return out.str();
}

std::string to_conllu(const std::vector<Document>& docs) {
  std::string out;
  for (const Document& d : docs) out += to_conllu(d);
  return out;
}

}  // namespace negraph
