#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "negraph/graph.hpp"
#include "negraph/pattern.hpp"

namespace negraph {

/// A witness that a query graph embeds into a sentence graph with the
/// anchor bound to the requested start vertex. scope is the image of the
/// assignment: the sentence vertices covered by the match.
struct MatchBinding {
  std::map<int, int> assignment;  // query node id -> vertex index
  std::set<int> scope;

  friend bool operator==(const MatchBinding&, const MatchBinding&) = default;
};

struct MatchOptions {
  // Sibling query nodes must always bind distinct vertices; with
  // global_injectivity the whole assignment must be injective.
  bool global_injectivity = false;
  // When set, an arc label also matches subtype labels it prefixes at a
  // ':' boundary (`nmod` matches `nmod:of`). Default is exact.
  bool label_prefix_match = false;
};

/// Anchored subgraph matching: find the first binding of q into g with
/// query node 0 bound to start, under deterministic search order (query
/// nodes in id order, candidate vertices in ascending index). Returns
/// absent when no binding exists; throws Error when start is not a vertex
/// of g.
std::optional<MatchBinding> match_anchored(const SentenceGraph& g,
                                           const QueryGraph& q, int start,
                                           const MatchOptions& opts = {});

/// True iff match_anchored returns a binding.
bool match_any(const SentenceGraph& g, const QueryGraph& q, int start,
               const MatchOptions& opts = {});

// All bindings in search order (debugger support; detection uses
// first-match semantics).
std::vector<MatchBinding> match_all(const SentenceGraph& g,
                                    const QueryGraph& q, int start,
                                    const MatchOptions& opts = {});

}  // namespace negraph
