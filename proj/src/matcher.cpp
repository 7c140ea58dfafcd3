#include "negraph/matcher.hpp"

#include <algorithm>
#include <functional>

namespace negraph {

namespace {

bool label_matches(const std::optional<std::string>& wanted,
                   const std::string& relation, const MatchOptions& opts) {
  if (!wanted) return true;
  if (relation == *wanted) return true;
  if (opts.label_prefix_match && relation.size() > wanted->size() &&
      relation.compare(0, wanted->size(), *wanted) == 0 &&
      relation[wanted->size()] == ':')
    return true;
  return false;
}

// Backtracking search over the query tree in node-id (preorder) order.
// Because ids are preorder, every node's parent is bound before the node
// itself is reached.
class Search {
 public:
  Search(const SentenceGraph& g, const QueryGraph& q, int start,
         const MatchOptions& opts)
      : g_(g), q_(q), start_(start), opts_(opts) {
    // Memoized per-node candidate lists: which vertices pass each node's
    // attribute constraints.
    const int nq = static_cast<int>(q_.nodes.size());
    passes_.assign(nq, std::vector<char>(g_.size() + 1, 0));
    for (int n = 0; n < nq; ++n)
      for (const Vertex& v : g_.vertices())
        passes_[n][v.index] =
            q_.nodes[n].matches(v.word, v.lemma, v.pos) ? 1 : 0;
    parent_arc_.assign(nq, -1);
    for (int a = 0; a < static_cast<int>(q_.arcs.size()); ++a)
      parent_arc_[q_.arcs[a].to] = a;
    binding_.assign(nq, 0);
  }

  // Runs the search; returns every binding when all_bindings, else stops
  // at the first.
  std::vector<MatchBinding> run(bool all_bindings) {
    results_.clear();
    all_ = all_bindings;
    if (passes_[0][start_]) {
      binding_[0] = start_;
      extend(1);
    }
    return std::move(results_);
  }

 private:
  // Try every candidate for query node `n`, given nodes 0..n-1 bound.
  // Returns true when the search should stop (first match found).
  bool extend(int n) {
    if (n == static_cast<int>(q_.nodes.size())) {
      emit();
      return !all_;
    }
    const QueryGraph::Arc& arc = q_.arcs[parent_arc_[n]];
    const int parent_vertex = binding_[arc.from];
    // dependent_of: the parent is the dependent, so candidates are the
    // parent's governors; governor_of flips the direction.
    const bool parent_is_dependent = arc.op.direction == Direction::dependent_of;
    const auto& edge_ids = parent_is_dependent ? g_.in_edge_ids(parent_vertex)
                                               : g_.out_edge_ids(parent_vertex);
    int last_candidate = 0;  // adjacency is ordered; skip repeats
    for (int e : edge_ids) {
      const Edge& edge = g_.edges()[e];
      const int candidate = parent_is_dependent ? edge.governor : edge.dependent;
      if (candidate == last_candidate) continue;
      if (!label_matches(arc.op.label, edge.relation, opts_)) continue;
      last_candidate = candidate;
      if (!passes_[n][candidate]) continue;
      if (!injective_ok(n, arc.from, candidate)) continue;
      binding_[n] = candidate;
      if (extend(n + 1)) return true;
    }
    return false;
  }

  bool injective_ok(int n, int parent, int candidate) const {
    if (opts_.global_injectivity) {
      for (int i = 0; i < n; ++i)
        if (binding_[i] == candidate) return false;
      return true;
    }
    // Sibling-local: nodes sharing `parent` must bind distinct vertices.
    for (int a : q_.child_arcs[parent]) {
      const int sibling = q_.arcs[a].to;
      if (sibling >= n) break;  // later siblings not bound yet
      if (binding_[sibling] == candidate) return false;
    }
    return true;
  }

  void emit() {
    MatchBinding b;
    for (int n = 0; n < static_cast<int>(q_.nodes.size()); ++n) {
      b.assignment[n] = binding_[n];
      b.scope.insert(binding_[n]);
    }
    results_.push_back(std::move(b));
  }

  const SentenceGraph& g_;
  const QueryGraph& q_;
  const int start_;
  const MatchOptions& opts_;
  std::vector<std::vector<char>> passes_;
  std::vector<int> parent_arc_;
  std::vector<int> binding_;
  std::vector<MatchBinding> results_;
  bool all_ = false;
};

}  // namespace

std::optional<MatchBinding> match_anchored(const SentenceGraph& g,
                                           const QueryGraph& q, int start,
                                           const MatchOptions& opts) {
  if (!g.has_vertex(start))
    throw Error("sentence '" + g.id() + "': unknown start vertex " +
                std::to_string(start));
  auto results = Search(g, q, start, opts).run(false);
  if (results.empty()) return std::nullopt;
  return std::move(results.front());
}

bool match_any(const SentenceGraph& g, const QueryGraph& q, int start,
               const MatchOptions& opts) {
  return match_anchored(g, q, start, opts).has_value();
}

std::vector<MatchBinding> match_all(const SentenceGraph& g,
                                    const QueryGraph& q, int start,
                                    const MatchOptions& opts) {
  if (!g.has_vertex(start))
    throw Error("sentence '" + g.id() + "': unknown start vertex " +
                std::to_string(start));
  return Search(g, q, start, opts).run(true);
}

}  // namespace negraph
