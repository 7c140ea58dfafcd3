#include "negraph/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace negraph {

namespace {

const std::array<FindingType, kFindingTypeCount> kAllTypes = {
    FindingType::Atelectasis,   FindingType::Cardiomegaly,
    FindingType::Consolidation, FindingType::Edema,
    FindingType::Effusion,      FindingType::Emphysema,
    FindingType::Fibrosis,      FindingType::Hernia,
    FindingType::Infiltration,  FindingType::Mass,
    FindingType::Nodule,        FindingType::PleuralThickening,
    FindingType::Pneumonia,     FindingType::Pneumothorax,
};

constexpr std::string_view kTypeNames[kFindingTypeCount] = {
    "Atelectasis", "Cardiomegaly", "Consolidation",      "Edema",
    "Effusion",    "Emphysema",    "Fibrosis",           "Hernia",
    "Infiltration", "Mass",        "Nodule",             "Pleural Thickening",
    "Pneumonia",   "Pneumothorax",
};

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

}  // namespace

const std::array<FindingType, kFindingTypeCount>& all_finding_types() {
  return kAllTypes;
}

std::string_view to_string(FindingType t) {
  return kTypeNames[static_cast<int>(t)];
}

std::optional<FindingType> finding_from_string(std::string_view name) {
  for (int i = 0; i < kFindingTypeCount; ++i)
    if (kTypeNames[i] == name) return kAllTypes[i];
  return std::nullopt;
}

std::string_view to_string(AssertionStatus s) {
  switch (s) {
    case AssertionStatus::positive: return "positive";
    case AssertionStatus::negative: return "negative";
    case AssertionStatus::uncertain: return "uncertain";
  }
  return "?";
}

std::optional<AssertionStatus> status_from_string(std::string_view s) {
  if (s == "positive") return AssertionStatus::positive;
  if (s == "negative") return AssertionStatus::negative;
  if (s == "uncertain") return AssertionStatus::uncertain;
  return std::nullopt;
}

std::vector<LexiconEntry> load_lexicon(std::istream& in) {
  std::vector<LexiconEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab1 = line.find('\t');
    std::size_t tab2 = tab1 == std::string::npos ? std::string::npos
                                                 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos)
      throw ParseError("expected finding<TAB>phrase<TAB>head_offset", line_no);

    LexiconEntry entry;
    std::string name = line.substr(0, tab1);
    auto finding = finding_from_string(name);
    if (!finding)
      throw ParseError("unknown finding name '" + name + "'", line_no);
    entry.finding = *finding;

    std::istringstream phrase(lowercase(line.substr(tab1 + 1, tab2 - tab1 - 1)));
    std::string lemma;
    while (phrase >> lemma) entry.phrase.push_back(lemma);
    if (entry.phrase.empty())
      throw ParseError("empty phrase", line_no);

    const std::string offset_str = line.substr(tab2 + 1);
    const bool numeric =
        !offset_str.empty() &&
        std::all_of(offset_str.begin(), offset_str.end(),
                    [](unsigned char c) { return std::isdigit(c); });
    if (!numeric)
      throw ParseError("bad head_offset '" + offset_str + "'", line_no);
    entry.head_offset = std::stoi(offset_str);
    if (entry.head_offset < 0 ||
        entry.head_offset >= static_cast<int>(entry.phrase.size()))
      throw ParseError("head_offset " + std::to_string(entry.head_offset) +
                           " outside phrase of length " +
                           std::to_string(entry.phrase.size()),
                       line_no);
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<LexiconEntry> load_lexicon(const std::string& content) {
  std::istringstream in(content);
  return load_lexicon(in);
}

std::vector<LexiconEntry> load_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return load_lexicon(in);
}

std::vector<FindingMention> recognize(const SentenceGraph& g,
                                      const std::vector<LexiconEntry>& lex) {
  struct Candidate {
    int start;  // 0-based vertex offset
    int len;
    int entry;
  };
  const auto& vertices = g.vertices();
  const int n = static_cast<int>(vertices.size());

  std::vector<Candidate> candidates;
  for (int e = 0; e < static_cast<int>(lex.size()); ++e) {
    const auto& phrase = lex[e].phrase;
    const int len = static_cast<int>(phrase.size());
    for (int start = 0; start + len <= n; ++start) {
      bool hit = true;
      for (int k = 0; k < len; ++k)
        if (vertices[start + k].lemma != phrase[k]) {
          hit = false;
          break;
        }
      if (hit) candidates.push_back(Candidate{start, len, e});
    }
  }

  // Longest phrase wins, then earlier start, then lexicon file order.
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.len != b.len) return a.len > b.len;
              if (a.start != b.start) return a.start < b.start;
              return a.entry < b.entry;
            });

  std::vector<char> taken(n, 0);
  std::vector<FindingMention> mentions;
  for (const Candidate& c : candidates) {
    bool free = true;
    for (int k = c.start; k < c.start + c.len; ++k)
      if (taken[k]) {
        free = false;
        break;
      }
    if (!free) continue;
    for (int k = c.start; k < c.start + c.len; ++k) taken[k] = 1;
    FindingMention m;
    m.finding = lex[c.entry].finding;
    m.sentence_id = g.id();
    m.span_first = c.start + 1;
    m.span_last = c.start + c.len;
    m.head = c.start + 1 + lex[c.entry].head_offset;
    mentions.push_back(std::move(m));
  }
  std::sort(mentions.begin(), mentions.end(),
            [](const FindingMention& a, const FindingMention& b) {
              return a.span_first < b.span_first;
            });
  return mentions;
}

}  // namespace negraph
