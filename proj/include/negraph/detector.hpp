#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "negraph/graph.hpp"
#include "negraph/lexicon.hpp"
#include "negraph/matcher.hpp"
#include "negraph/pattern.hpp"

namespace negraph {

enum class DocumentLabel { positive, negative, uncertain, absent };

std::string_view to_string(DocumentLabel l);

/// Per-document outcome: classified mentions plus one label per finding
/// type. A type is positive iff any of its mentions is positive, else
/// uncertain iff any is uncertain, else negative iff any is negative,
/// else absent.
struct DocumentResult {
  std::string doc_id;
  std::vector<FindingMention> mentions;
  std::map<FindingType, DocumentLabel> labels;  // absent types omitted

  DocumentLabel label(FindingType t) const {
    auto it = labels.find(t);
    return it == labels.end() ? DocumentLabel::absent : it->second;
  }
};

/// Assign an assertion status to one mention: negation rules in rank
/// order anchored at the mention head, first match wins; otherwise
/// uncertainty rules in rank order; otherwise positive.
FindingMention classify_mention(const SentenceGraph& g,
                                const FindingMention& m,
                                const std::vector<Rule>& rules);

/// All rules matching at the mention head with their bindings, negation
/// rules (by rank) before uncertainty rules (by rank). The first entry's
/// category always agrees with classify_mention.
std::vector<std::pair<const Rule*, MatchBinding>> explain(
    const SentenceGraph& g, const FindingMention& m,
    const std::vector<Rule>& rules);

/// The two-pass pipeline for one document: recognize mentions per
/// sentence, classify each at its head word, aggregate to document
/// labels.
DocumentResult detect_document(const Document& d,
                               const std::vector<LexiconEntry>& lex,
                               const std::vector<Rule>& rules);

/// detect_document over a corpus with `jobs` worker threads (<=1 means
/// sequential). Output is sorted by doc_id and independent of jobs.
std::vector<DocumentResult> detect_corpus(const std::vector<Document>& docs,
                                          const std::vector<LexiconEntry>& lex,
                                          const std::vector<Rule>& rules,
                                          int jobs = 1);

// JSON Lines serialization, one object per document:
// {"doc_id":..., "labels":{...}, "mentions":[...]}.
std::string result_to_json(const DocumentResult& r);
std::string results_to_jsonl(const std::vector<DocumentResult>& rs);
std::vector<DocumentResult> results_from_jsonl(std::istream& in);
std::vector<DocumentResult> results_from_jsonl(const std::string& content);
std::vector<DocumentResult> results_from_jsonl_file(const std::string& path);

}  // namespace negraph
