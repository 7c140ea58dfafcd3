#include "negraph/detector.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace negraph {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(DocumentLabel l) {
  switch (l) {
    case DocumentLabel::positive: return "positive";
    case DocumentLabel::negative: return "negative";
    case DocumentLabel::uncertain: return "uncertain";
    case DocumentLabel::absent: return "absent";
  }
  return "?";
}

FindingMention classify_mention(const SentenceGraph& g,
                                const FindingMention& m,
                                const std::vector<Rule>& rules) {
  FindingMention out = m;
  out.status = AssertionStatus::positive;
  out.matched_rule.reset();
  for (RuleCategory category :
       {RuleCategory::negation, RuleCategory::uncertainty}) {
    for (const Rule& rule : rules) {
      if (rule.category != category) continue;
      if (match_any(g, rule.compiled, m.head)) {
        out.status = category == RuleCategory::negation
                         ? AssertionStatus::negative
                         : AssertionStatus::uncertain;
        out.matched_rule = rule.rule_id;
        return out;
      }
    }
  }
  return out;
}

std::vector<std::pair<const Rule*, MatchBinding>> explain(
    const SentenceGraph& g, const FindingMention& m,
    const std::vector<Rule>& rules) {
  std::vector<std::pair<const Rule*, MatchBinding>> out;
  for (RuleCategory category :
       {RuleCategory::negation, RuleCategory::uncertainty}) {
    for (const Rule& rule : rules) {
      if (rule.category != category) continue;
      if (auto binding = match_anchored(g, rule.compiled, m.head))
        out.emplace_back(&rule, std::move(*binding));
    }
  }
  return out;
}

namespace {

DocumentLabel aggregate(DocumentLabel current, AssertionStatus status) {
  // positive > uncertain > negative; absent only when no mentions.
  auto strength = [](DocumentLabel l) {
    switch (l) {
      case DocumentLabel::positive: return 3;
      case DocumentLabel::uncertain: return 2;
      case DocumentLabel::negative: return 1;
      case DocumentLabel::absent: return 0;
    }
    return 0;
  };
  DocumentLabel incoming = DocumentLabel::negative;
  if (status == AssertionStatus::positive) incoming = DocumentLabel::positive;
  if (status == AssertionStatus::uncertain)
    incoming = DocumentLabel::uncertain;
  return strength(incoming) > strength(current) ? incoming : current;
}

}  // namespace

DocumentResult detect_document(const Document& d,
                               const std::vector<LexiconEntry>& lex,
                               const std::vector<Rule>& rules) {
  DocumentResult result;
  result.doc_id = d.doc_id;
  for (const SentenceGraph& g : d.sentences) {
    for (const FindingMention& m : recognize(g, lex)) {
      FindingMention classified = classify_mention(g, m, rules);
      auto [it, inserted] =
          result.labels.try_emplace(classified.finding, DocumentLabel::absent);
      it->second = aggregate(it->second, classified.status);
      result.mentions.push_back(std::move(classified));
    }
  }
  return result;
}

std::vector<DocumentResult> detect_corpus(const std::vector<Document>& docs,
                                          const std::vector<LexiconEntry>& lex,
                                          const std::vector<Rule>& rules,
                                          int jobs) {
  std::vector<DocumentResult> results(docs.size());
  if (jobs <= 1 || docs.size() <= 1) {
    for (std::size_t i = 0; i < docs.size(); ++i)
      results[i] = detect_document(docs[i], lex, rules);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      try {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= docs.size()) return;
          results[i] = detect_document(docs[i], lex, rules);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    const int count = std::min<int>(jobs, static_cast<int>(docs.size()));
    pool.reserve(count);
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  std::sort(results.begin(), results.end(),
            [](const DocumentResult& a, const DocumentResult& b) {
              return a.doc_id < b.doc_id;
            });
  return results;
}

std::string result_to_json(const DocumentResult& r) {
  ordered_json labels = ordered_json::object();
  for (FindingType t : all_finding_types()) {
    auto it = r.labels.find(t);
    if (it == r.labels.end() || it->second == DocumentLabel::absent) continue;
    labels[std::string(to_string(t))] = to_string(it->second);
  }
  ordered_json mentions = ordered_json::array();
  for (const FindingMention& m : r.mentions) {
    ordered_json jm;
    jm["finding"] = to_string(m.finding);
    jm["sentence_id"] = m.sentence_id;
    jm["span"] = {m.span_first, m.span_last};
    jm["head"] = m.head;
    jm["status"] = to_string(m.status);
    jm["rule"] = m.matched_rule ? ordered_json(*m.matched_rule)
                                : ordered_json(nullptr);
    mentions.push_back(std::move(jm));
  }
  ordered_json doc;
  doc["doc_id"] = r.doc_id;
  doc["labels"] = std::move(labels);
  doc["mentions"] = std::move(mentions);
  return doc.dump();
}

std::string results_to_jsonl(const std::vector<DocumentResult>& rs) {
  std::string out;
  for (const DocumentResult& r : rs) {
    out += result_to_json(r);
    out += '\n';
  }
  return out;
}

namespace {

FindingType parse_finding(const std::string& name, std::size_t line_no) {
  auto t = finding_from_string(name);
  if (!t)
    throw ParseError("unknown finding name '" + name + "'", line_no);
  return *t;
}

DocumentResult result_from_json(const std::string& line,
                                std::size_t line_no) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what(), line_no);
  }
  DocumentResult r;
  try {
    r.doc_id = doc.at("doc_id").get<std::string>();
    for (const auto& [name, value] : doc.at("labels").items()) {
      FindingType t = parse_finding(name, line_no);
      auto status = status_from_string(value.get<std::string>());
      if (!status)
        throw ParseError(
            "bad label status '" + value.get<std::string>() + "'", line_no);
      DocumentLabel label = DocumentLabel::absent;
      switch (*status) {
        case AssertionStatus::positive: label = DocumentLabel::positive; break;
        case AssertionStatus::negative: label = DocumentLabel::negative; break;
        case AssertionStatus::uncertain:
          label = DocumentLabel::uncertain;
          break;
      }
      r.labels[t] = label;
    }
    for (const auto& jm : doc.at("mentions")) {
      FindingMention m;
      m.finding = parse_finding(jm.at("finding").get<std::string>(), line_no);
      m.sentence_id = jm.at("sentence_id").get<std::string>();
      m.span_first = jm.at("span").at(0).get<int>();
      m.span_last = jm.at("span").at(1).get<int>();
      m.head = jm.at("head").get<int>();
      auto status = status_from_string(jm.at("status").get<std::string>());
      if (!status)
        throw ParseError("bad mention status", line_no);
      m.status = *status;
      if (jm.contains("rule") && !jm.at("rule").is_null())
        m.matched_rule = jm.at("rule").get<std::string>();
      r.mentions.push_back(std::move(m));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad results object: ") + e.what(), line_no);
  }
  return r;
}

}  // namespace

std::vector<DocumentResult> results_from_jsonl(std::istream& in) {
  std::vector<DocumentResult> results;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    results.push_back(result_from_json(line, line_no));
  }
  return results;
}

std::vector<DocumentResult> results_from_jsonl(const std::string& content) {
  std::istringstream in(content);
  return results_from_jsonl(in);
}

std::vector<DocumentResult> results_from_jsonl_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return results_from_jsonl(in);
}

}  // namespace negraph
