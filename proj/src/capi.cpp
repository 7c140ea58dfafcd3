#include "negraph.h"

#include <cstring>
#include <filesystem>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "negraph/conllu.hpp"
#include "negraph/detector.hpp"
#include "negraph/evalkit.hpp"
#include "negraph/lexicon.hpp"
#include "negraph/matcher.hpp"
#include "negraph/pattern.hpp"

using namespace negraph;

struct ng_engine {
  std::vector<Rule> rules;
  std::vector<LexiconEntry> lexicon;
};

struct ng_corpus {
  std::vector<Document> documents;
  std::set<std::string> doc_ids;
};

struct ng_results {
  std::vector<DocumentResult> results;
};

namespace {

thread_local std::string g_last_error;

ng_status fail(ng_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Maps core exceptions onto status codes; pattern errors keep their own
// code so callers can distinguish them (CLI exit code contract).
template <typename Fn>
ng_status guarded(Fn&& fn) {
  try {
    fn();
    return NG_OK;
  } catch (const PatternSyntaxError& e) {
    return fail(NG_ERR_PATTERN, e.what());
  } catch (const Error& e) {
    return fail(NG_ERR_DATA, e.what());
  } catch (const std::exception& e) {
    return fail(NG_ERR_DATA, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ng_status add_documents(ng_corpus* c, std::vector<Document> docs) {
  for (const Document& d : docs)
    if (c->doc_ids.count(d.doc_id))
      return fail(NG_ERR_ARG, "duplicate doc_id '" + d.doc_id +
                                  "' across corpus inputs");
  for (Document& d : docs) {
    c->doc_ids.insert(d.doc_id);
    c->documents.push_back(std::move(d));
  }
  return NG_OK;
}

}  // namespace

extern "C" {

const char* ng_version(void) { return "1.0.0"; }

const char* ng_last_error(void) { return g_last_error.c_str(); }

void ng_free(char* s) { delete[] s; }

ng_status ng_engine_open(const char* rules_path, const char* lexicon_path,
                         ng_engine** out) {
  if (!rules_path || !lexicon_path || !out)
    return fail(NG_ERR_ARG, "null argument to ng_engine_open");
  *out = nullptr;
  if (!std::filesystem::exists(rules_path))
    return fail(NG_ERR_IO, std::string("cannot open '") + rules_path + "'");
  if (!std::filesystem::exists(lexicon_path))
    return fail(NG_ERR_IO, std::string("cannot open '") + lexicon_path + "'");
  auto engine = std::make_unique<ng_engine>();
  ng_status status = guarded([&] {
    engine->rules = load_rules_file(rules_path);
    engine->lexicon = load_lexicon_file(lexicon_path);
  });
  if (status != NG_OK) return status;
  *out = engine.release();
  return NG_OK;
}

void ng_engine_close(ng_engine* e) { delete e; }

size_t ng_engine_rule_count(const ng_engine* e) {
  return e ? e->rules.size() : 0;
}

size_t ng_engine_lexicon_count(const ng_engine* e) {
  return e ? e->lexicon.size() : 0;
}

ng_status ng_corpus_open(ng_corpus** out) {
  if (!out) return fail(NG_ERR_ARG, "null argument to ng_corpus_open");
  *out = new ng_corpus();
  return NG_OK;
}

void ng_corpus_close(ng_corpus* c) { delete c; }

ng_status ng_corpus_add_file(ng_corpus* c, const char* path) {
  if (!c || !path)
    return fail(NG_ERR_ARG, "null argument to ng_corpus_add_file");
  if (!std::filesystem::exists(path))
    return fail(NG_ERR_IO, std::string("cannot open '") + path + "'");
  std::vector<Document> docs;
  ng_status status = guarded([&] { docs = parse_conllu_file(path); });
  if (status != NG_OK) return status;
  return add_documents(c, std::move(docs));
}

ng_status ng_corpus_add_text(ng_corpus* c, const char* conllu,
                             const char* default_doc_id) {
  if (!c || !conllu || !default_doc_id)
    return fail(NG_ERR_ARG, "null argument to ng_corpus_add_text");
  std::vector<Document> docs;
  ng_status status = guarded(
      [&] { docs = parse_conllu(std::string(conllu), default_doc_id); });
  if (status != NG_OK) return status;
  return add_documents(c, std::move(docs));
}

size_t ng_corpus_document_count(const ng_corpus* c) {
  return c ? c->documents.size() : 0;
}

ng_status ng_detect(const ng_engine* e, const ng_corpus* c, int jobs,
                    ng_results** out) {
  if (!e || !c || !out) return fail(NG_ERR_ARG, "null argument to ng_detect");
  *out = nullptr;
  auto results = std::make_unique<ng_results>();
  ng_status status = guarded([&] {
    results->results = detect_corpus(c->documents, e->lexicon, e->rules, jobs);
  });
  if (status != NG_OK) return status;
  *out = results.release();
  return NG_OK;
}

void ng_results_close(ng_results* r) { delete r; }

size_t ng_results_document_count(const ng_results* r) {
  return r ? r->results.size() : 0;
}

ng_status ng_results_to_jsonl(const ng_results* r, char** out) {
  if (!r || !out)
    return fail(NG_ERR_ARG, "null argument to ng_results_to_jsonl");
  *out = copy_string(results_to_jsonl(r->results));
  return NG_OK;
}

ng_status ng_results_open_jsonl(const char* path, ng_results** out) {
  if (!path || !out)
    return fail(NG_ERR_ARG, "null argument to ng_results_open_jsonl");
  *out = nullptr;
  if (!std::filesystem::exists(path))
    return fail(NG_ERR_IO, std::string("cannot open '") + path + "'");
  auto results = std::make_unique<ng_results>();
  ng_status status =
      guarded([&] { results->results = results_from_jsonl_file(path); });
  if (status != NG_OK) return status;
  *out = results.release();
  return NG_OK;
}

ng_status ng_evaluate(const ng_results* r, const char* gold_path, int mode,
                      char** report_out) {
  if (!r || !gold_path || !report_out)
    return fail(NG_ERR_ARG, "null argument to ng_evaluate");
  if (mode != NG_EVAL_POSITIVE && mode != NG_EVAL_NEGATION)
    return fail(NG_ERR_ARG, "mode must be NG_EVAL_POSITIVE or "
                            "NG_EVAL_NEGATION");
  *report_out = nullptr;
  if (!std::filesystem::exists(gold_path))
    return fail(NG_ERR_IO, std::string("cannot open '") + gold_path + "'");
  std::string report;
  ng_status status = guarded([&] {
    auto gold = load_gold_file(gold_path);
    if (mode == NG_EVAL_POSITIVE)
      report = format_positive_report(eval_positive(r->results, gold));
    else
      report = format_negation_report(eval_negation(r->results, gold));
  });
  if (status != NG_OK) return status;
  *report_out = copy_string(report);
  return NG_OK;
}

ng_status ng_explain_pattern(const char* pattern, const ng_corpus* c,
                             const char* anchor, char** out) {
  if (!pattern || !c || !out)
    return fail(NG_ERR_ARG, "null argument to ng_explain_pattern");
  *out = nullptr;
  QueryGraph query;
  ng_status status =
      guarded([&] { query = compile(parse_pattern(pattern)); });
  if (status != NG_OK) return status;

  const std::string anchor_str = anchor ? anchor : "";
  const bool by_index =
      !anchor_str.empty() &&
      anchor_str.find_first_not_of("0123456789") == std::string::npos;
  const int anchor_index = by_index ? std::stoi(anchor_str) : 0;

  std::ostringstream text;
  status = guarded([&] {
    for (const Document& d : c->documents) {
      for (const SentenceGraph& g : d.sentences) {
        for (const Vertex& v : g.vertices()) {
          if (by_index) {
            if (v.index != anchor_index) continue;
          } else if (!anchor_str.empty() && v.lemma != anchor_str) {
            continue;
          }
          auto bindings = match_all(g, query, v.index);
          if (bindings.empty()) continue;
          text << "doc=" << d.doc_id << " sent=" << g.id()
               << " anchor=" << v.index << ":" << v.word << "\n";
          int k = 0;
          for (const MatchBinding& b : bindings) {
            text << "  binding " << ++k << ":";
            for (const auto& [node, vertex] : b.assignment)
              text << " " << node << "->" << vertex << ":"
                   << g.vertex(vertex).word;
            text << "\n  scope:";
            for (int vertex : b.scope)
              text << " " << vertex << ":" << g.vertex(vertex).word;
            text << "\n";
          }
        }
      }
    }
  });
  if (status != NG_OK) return status;
  *out = copy_string(text.str());
  return NG_OK;
}

}  // extern "C"
