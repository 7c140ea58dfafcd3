#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "negraph/error.hpp"

namespace negraph {

// Half-open byte span within the owning sentence text; (0,0) when offsets
// are unknown.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool known() const { return begin != 0 || end != 0; }
  friend bool operator==(const Span&, const Span&) = default;
};

struct Vertex {
  int index = 0;      // 1-based token position
  std::string word;   // surface form, never empty
  std::string lemma;  // always lowercase
  std::string pos;
  Span span;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Typed dependency from governor to dependent. Self-loops are invalid.
struct Edge {
  int governor = 0;
  int dependent = 0;
  std::string relation;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// One sentence as a universal dependency graph: vertices carry
/// word/lemma/pos, edges carry typed relations. A vertex may have several
/// governors (enhanced dependencies form a general directed graph, not a
/// tree). Immutable after construction and safe to share across threads.
class SentenceGraph {
 public:
  // Validates all invariants (contiguous 1..n indices, edge endpoints in
  // range, no self-loops, no duplicate edges, non-empty words/relations)
  // and throws Error on violation. Edges are stored sorted by
  // (governor, dependent, relation).
  SentenceGraph(std::string sentence_id, std::string text,
                std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::string& id() const { return id_; }
  const std::string& text() const { return text_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(vertices_.size()); }

  bool has_vertex(int index) const {
    return index >= 1 && index <= size();
  }
  // Throws Error on an unknown index.
  const Vertex& vertex(int index) const;

  /// Edges with governor == v (optionally restricted to an exact relation
  /// label), with their dependent vertices, ordered by
  /// (dependent index, relation).
  std::vector<std::pair<Edge, Vertex>> dependents_of(
      int v, const std::optional<std::string>& relation = {}) const;

  /// Mirror of dependents_of: edges with dependent == v and their
  /// governor vertices, ordered by (governor index, relation).
  std::vector<std::pair<Edge, Vertex>> governors_of(
      int v, const std::optional<std::string>& relation = {}) const;

  // Index-based adjacency into edges(), for search loops that should not
  // copy. Ordered consistently with dependents_of/governors_of.
  const std::vector<int>& out_edge_ids(int v) const;
  const std::vector<int>& in_edge_ids(int v) const;

 private:
  std::string id_;
  std::string text_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;  // slot 0 unused
  std::vector<std::vector<int>> in_;
};

struct Document {
  std::string doc_id;
  std::vector<SentenceGraph> sentences;
};

}  // namespace negraph
