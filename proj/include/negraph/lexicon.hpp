#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "negraph/graph.hpp"

namespace negraph {

/// The closed set of finding types.
enum class FindingType {
  Atelectasis,
  Cardiomegaly,
  Consolidation,
  Edema,
  Effusion,
  Emphysema,
  Fibrosis,
  Hernia,
  Infiltration,
  Mass,
  Nodule,
  PleuralThickening,
  Pneumonia,
  Pneumothorax,
};

inline constexpr int kFindingTypeCount = 14;

// All 14 types in enum order.
const std::array<FindingType, kFindingTypeCount>& all_finding_types();

// External name, e.g. "Pleural Thickening".
std::string_view to_string(FindingType t);
std::optional<FindingType> finding_from_string(std::string_view name);

struct LexiconEntry {
  FindingType finding = FindingType::Atelectasis;
  std::vector<std::string> phrase;  // lemmas, lowercase, non-empty
  int head_offset = 0;              // index of the head word within phrase
};

enum class AssertionStatus { positive, negative, uncertain };

std::string_view to_string(AssertionStatus s);
std::optional<AssertionStatus> status_from_string(std::string_view s);

/// A lexicon hit in one sentence. span is (first, last) vertex index,
/// inclusive; head lies within it. status starts positive and is set by
/// the detector; matched_rule is present iff status != positive.
struct FindingMention {
  FindingType finding = FindingType::Atelectasis;
  std::string sentence_id;
  int span_first = 0;
  int span_last = 0;
  int head = 0;
  AssertionStatus status = AssertionStatus::positive;
  std::optional<std::string> matched_rule;

  friend bool operator==(const FindingMention&,
                         const FindingMention&) = default;
};

/// Load a lexicon file: `finding_name<TAB>space-separated lemma
/// phrase<TAB>head_offset`, `#` comments. Phrases are lowercased. Errors
/// on unknown finding names and out-of-range head offsets.
std::vector<LexiconEntry> load_lexicon(std::istream& in);
std::vector<LexiconEntry> load_lexicon(const std::string& content);
std::vector<LexiconEntry> load_lexicon_file(const std::string& path);

/// Dictionary recognition over vertex lemmas. Candidate matches are
/// resolved globally: longer phrase wins, then earlier start, then
/// lexicon file order; accepted mentions never overlap and come back
/// sorted by span start. All mentions start positive.
std::vector<FindingMention> recognize(const SentenceGraph& g,
                                      const std::vector<LexiconEntry>& lex);

}  // namespace negraph
