#include "negraph/evalkit.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace negraph {

namespace {

using ordered_json = nlohmann::ordered_json;

GoldDocument gold_from_json(const std::string& line, std::size_t line_no) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what(), line_no);
  }
  GoldDocument g;
  try {
    g.doc_id = doc.at("doc_id").get<std::string>();
    for (const auto& name : doc.at("positive_findings")) {
      auto t = finding_from_string(name.get<std::string>());
      if (!t)
        throw ParseError("unknown finding name '" + name.get<std::string>() +
                             "'",
                         line_no);
      if (!g.positive_findings.insert(*t).second)
        throw ParseError("duplicate positive finding '" +
                             name.get<std::string>() + "'",
                         line_no);
    }
    if (doc.contains("negated_mentions")) {
      std::vector<GoldNegatedMention> negated;
      for (const auto& jm : doc.at("negated_mentions")) {
        GoldNegatedMention m;
        auto t = finding_from_string(jm.at("finding").get<std::string>());
        if (!t)
          throw ParseError("unknown finding name '" +
                               jm.at("finding").get<std::string>() + "'",
                           line_no);
        m.finding = *t;
        m.sentence_id = jm.at("sentence_id").get<std::string>();
        m.head = jm.at("head").get<int>();
        negated.push_back(std::move(m));
      }
      auto sorted = negated;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError("duplicate negated mention", line_no);
      g.negated_mentions = std::move(negated);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad gold object: ") + e.what(), line_no);
  }
  return g;
}

// Both evaluations require the same doc_id sets on both sides.
void check_alignment(const std::vector<DocumentResult>& results,
                     const std::vector<GoldDocument>& gold) {
  std::set<std::string> system_ids, gold_ids;
  for (const auto& r : results)
    if (!system_ids.insert(r.doc_id).second)
      throw Error("duplicate doc_id '" + r.doc_id + "' in results");
  for (const auto& g : gold)
    if (!gold_ids.insert(g.doc_id).second)
      throw Error("duplicate doc_id '" + g.doc_id + "' in gold");

  std::vector<std::string> missing_gold, missing_system;
  for (const auto& id : system_ids)
    if (!gold_ids.count(id)) missing_gold.push_back(id);
  for (const auto& id : gold_ids)
    if (!system_ids.count(id)) missing_system.push_back(id);
  if (missing_gold.empty() && missing_system.empty()) return;

  std::string msg = "doc_id mismatch between results and gold;";
  auto join = [](const std::vector<std::string>& ids) {
    std::string s;
    for (const auto& id : ids) {
      if (!s.empty()) s += ", ";
      s += id;
    }
    return s;
  };
  if (!missing_gold.empty())
    msg += " missing from gold: " + join(missing_gold) + ";";
  if (!missing_system.empty())
    msg += " missing from results: " + join(missing_system) + ";";
  msg.pop_back();
  throw Error(msg);
}

// "95.7" / "0.0", with a '*' when the ratio had a zero denominator.
std::string cell(double ratio, bool flagged) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", ratio * 100.0);
  std::string s(buf);
  if (flagged) s += '*';
  return s;
}

void append_row(std::string& out, const std::string& name, const PRF& prf) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%-22s %6s %6s %6s\n", name.c_str(),
                cell(prf.precision(), prf.tp + prf.fp == 0).c_str(),
                cell(prf.recall(), prf.tp + prf.fn == 0).c_str(),
                cell(prf.f1(), false).c_str());
  out += buf;
}

bool any_flag(const PRF& prf) {
  return prf.tp + prf.fp == 0 || prf.tp + prf.fn == 0;
}

const char kHeader[] = "                            P      R      F\n";
const char kFootnote[] = "* zero denominator (0/0), reported as 0.0\n";

}  // namespace

std::vector<GoldDocument> load_gold(std::istream& in) {
  std::vector<GoldDocument> gold;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    gold.push_back(gold_from_json(line, line_no));
  }
  return gold;
}

std::vector<GoldDocument> load_gold(const std::string& content) {
  std::istringstream in(content);
  return load_gold(in);
}

std::vector<GoldDocument> load_gold_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return load_gold(in);
}

PositiveEval eval_positive(const std::vector<DocumentResult>& results,
                           const std::vector<GoldDocument>& gold) {
  check_alignment(results, gold);
  std::map<std::string, const GoldDocument*> by_id;
  for (const auto& g : gold) by_id[g.doc_id] = &g;

  PositiveEval eval;
  for (const auto& r : results) {
    const GoldDocument& g = *by_id.at(r.doc_id);
    for (FindingType t : all_finding_types()) {
      const bool system_positive = r.label(t) == DocumentLabel::positive;
      const bool gold_positive = g.positive_findings.count(t) > 0;
      PRF& prf = eval.per_type[static_cast<int>(t)];
      if (system_positive && gold_positive) {
        ++prf.tp;
        ++eval.overall.tp;
      } else if (system_positive) {
        ++prf.fp;
        ++eval.overall.fp;
      } else if (gold_positive) {
        ++prf.fn;
        ++eval.overall.fn;
      }
    }
  }
  return eval;
}

PRF eval_negation(const std::vector<DocumentResult>& results,
                  const std::vector<GoldDocument>& gold) {
  check_alignment(results, gold);
  for (const auto& g : gold)
    if (!g.negated_mentions)
      throw Error("gold document '" + g.doc_id +
                  "' has no negated_mentions (required for negation "
                  "evaluation)");

  // Keyed by (doc, finding, sentence, head).
  using Key = std::tuple<std::string, FindingType, std::string, int>;
  std::set<Key> gold_keys;
  for (const auto& g : gold)
    for (const auto& m : *g.negated_mentions)
      gold_keys.insert(Key{g.doc_id, m.finding, m.sentence_id, m.head});

  PRF prf;
  std::set<Key> matched;
  for (const auto& r : results) {
    for (const auto& m : r.mentions) {
      if (m.status != AssertionStatus::negative) continue;
      Key key{r.doc_id, m.finding, m.sentence_id, m.head};
      if (gold_keys.count(key)) {
        ++prf.tp;
        matched.insert(key);
      } else {
        ++prf.fp;
      }
    }
  }
  prf.fn = static_cast<long>(gold_keys.size() - matched.size());
  return prf;
}

std::string format_positive_report(const PositiveEval& eval) {
  std::string out = kHeader;
  append_row(out, "overall", eval.overall);

  // Macro average over the 14 types, same zero conventions; reported for
  // reference, not used by the overall score.
  double p = 0, r = 0, f = 0;
  for (const PRF& prf : eval.per_type) {
    p += prf.precision();
    r += prf.recall();
    f += prf.f1();
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%-22s %6s %6s %6s\n", "macro",
                cell(p / kFindingTypeCount, false).c_str(),
                cell(r / kFindingTypeCount, false).c_str(),
                cell(f / kFindingTypeCount, false).c_str());
  out += buf;

  bool flagged = any_flag(eval.overall);
  for (FindingType t : all_finding_types()) {
    const PRF& prf = eval.per_type[static_cast<int>(t)];
    append_row(out, std::string(to_string(t)), prf);
    flagged = flagged || any_flag(prf);
  }
  if (flagged) out += kFootnote;
  return out;
}

std::string format_negation_report(const PRF& overall) {
  std::string out = kHeader;
  append_row(out, "negation", overall);
  if (any_flag(overall)) out += kFootnote;
  return out;
}

}  // namespace negraph
