#pragma once

#include <array>
#include <iosfwd>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "negraph/detector.hpp"
#include "negraph/lexicon.hpp"

namespace negraph {

struct GoldNegatedMention {
  FindingType finding = FindingType::Atelectasis;
  std::string sentence_id;
  int head = 0;

  friend auto operator<=>(const GoldNegatedMention&,
                          const GoldNegatedMention&) = default;
};

struct GoldDocument {
  std::string doc_id;
  std::set<FindingType> positive_findings;
  std::optional<std::vector<GoldNegatedMention>> negated_mentions;
};

// Gold file: JSON Lines, {"doc_id":..., "positive_findings":[...],
// "negated_mentions":[{"finding","sentence_id","head"},...]?}.
std::vector<GoldDocument> load_gold(std::istream& in);
std::vector<GoldDocument> load_gold(const std::string& content);
std::vector<GoldDocument> load_gold_file(const std::string& path);

/// Counts plus the derived ratios. Precision and recall are defined as 0
/// when their denominator is 0; f1 is 0 when precision + recall is 0.
struct PRF {
  long tp = 0;
  long fp = 0;
  long fn = 0;

  double precision() const { return tp + fp == 0 ? 0.0 : double(tp) / double(tp + fp); }
  double recall() const { return tp + fn == 0 ? 0.0 : double(tp) / double(tp + fn); }
  double f1() const {
    const double p = precision(), r = recall();
    return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
  }

  friend bool operator==(const PRF&, const PRF&) = default;
};

struct PositiveEval {
  PRF overall;  // micro-averaged over (doc, type) pairs
  std::array<PRF, kFindingTypeCount> per_type;
};

/// Document-level positive-finding evaluation: a (doc, type) pair is TP
/// when both system and gold call it positive, FP when only the system
/// does, FN when only gold does. Requires identical doc_id sets; throws
/// Error listing missing ids otherwise.
PositiveEval eval_positive(const std::vector<DocumentResult>& results,
                           const std::vector<GoldDocument>& gold);

/// Mention-level negation evaluation: a system mention with status
/// negative is TP when gold lists a negated mention with the same
/// (doc, finding, sentence_id, head), FP otherwise; unmatched gold
/// entries are FN. Throws Error when any gold document lacks
/// negated_mentions.
PRF eval_negation(const std::vector<DocumentResult>& results,
                  const std::vector<GoldDocument>& gold);

// Table-style reports: percentages with one decimal place, columns
// P R F. Cells with a zero denominator are flagged with '*' and a
// footnote. Byte-stable across runs.
std::string format_positive_report(const PositiveEval& eval);
std::string format_negation_report(const PRF& overall);

}  // namespace negraph
