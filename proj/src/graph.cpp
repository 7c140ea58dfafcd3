#include "negraph/graph.hpp"

#include <algorithm>
#include <set>

namespace negraph {

SentenceGraph::SentenceGraph(std::string sentence_id, std::string text,
                             std::vector<Vertex> vertices,
                             std::vector<Edge> edges)
    : id_(std::move(sentence_id)),
      text_(std::move(text)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)) {
  const int n = static_cast<int>(vertices_.size());
  for (int i = 0; i < n; ++i) {
    const Vertex& v = vertices_[i];
    if (v.index != i + 1)
      throw Error("sentence '" + id_ + "': vertex indices must be contiguous 1..n, got " +
                  std::to_string(v.index) + " at position " + std::to_string(i + 1));
    if (v.word.empty())
      throw Error("sentence '" + id_ + "': vertex " + std::to_string(v.index) +
                  " has an empty word");
    if (v.span.known() && v.span.begin >= v.span.end)
      throw Error("sentence '" + id_ + "': vertex " + std::to_string(v.index) +
                  " has an inverted span");
  }

  std::sort(edges_.begin(), edges_.end());
  out_.assign(n + 1, {});
  in_.assign(n + 1, {});
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const Edge& edge = edges_[e];
    if (edge.governor == edge.dependent)
      throw Error("sentence '" + id_ + "': self-loop on vertex " +
                  std::to_string(edge.governor));
    if (edge.governor < 1 || edge.governor > n || edge.dependent < 1 ||
        edge.dependent > n)
      throw Error("sentence '" + id_ + "': edge endpoint out of range (" +
                  std::to_string(edge.governor) + " -> " +
                  std::to_string(edge.dependent) + ")");
    if (edge.relation.empty())
      throw Error("sentence '" + id_ + "': edge with empty relation");
    if (e > 0 && edges_[e - 1] == edge)
      throw Error("sentence '" + id_ + "': duplicate edge " +
                  std::to_string(edge.governor) + " -" + edge.relation + "-> " +
                  std::to_string(edge.dependent));
    out_[edge.governor].push_back(e);
    in_[edge.dependent].push_back(e);
  }
  // Edges are sorted by (governor, dependent, relation), so out_ lists are
  // already in (dependent, relation) order; in_ lists need their own sort.
  for (auto& ids : in_) {
    std::sort(ids.begin(), ids.end(), [this](int a, int b) {
      const Edge& ea = edges_[a];
      const Edge& eb = edges_[b];
      return std::tie(ea.governor, ea.relation) <
             std::tie(eb.governor, eb.relation);
    });
  }
}

const Vertex& SentenceGraph::vertex(int index) const {
  if (!has_vertex(index))
    throw Error("sentence '" + id_ + "': unknown vertex " +
                std::to_string(index));
  return vertices_[index - 1];
}

const std::vector<int>& SentenceGraph::out_edge_ids(int v) const {
  if (!has_vertex(v))
    throw Error("sentence '" + id_ + "': unknown vertex " + std::to_string(v));
  return out_[v];
}

const std::vector<int>& SentenceGraph::in_edge_ids(int v) const {
  if (!has_vertex(v))
    throw Error("sentence '" + id_ + "': unknown vertex " + std::to_string(v));
  return in_[v];
}

std::vector<std::pair<Edge, Vertex>> SentenceGraph::dependents_of(
    int v, const std::optional<std::string>& relation) const {
  std::vector<std::pair<Edge, Vertex>> result;
  for (int e : out_edge_ids(v)) {
    const Edge& edge = edges_[e];
    if (relation && edge.relation != *relation) continue;
    result.emplace_back(edge, vertices_[edge.dependent - 1]);
  }
  return result;
}

std::vector<std::pair<Edge, Vertex>> SentenceGraph::governors_of(
    int v, const std::optional<std::string>& relation) const {
  std::vector<std::pair<Edge, Vertex>> result;
  for (int e : in_edge_ids(v)) {
    const Edge& edge = edges_[e];
    if (relation && edge.relation != *relation) continue;
    result.emplace_back(edge, vertices_[edge.governor - 1]);
  }
  return result;
}

}  // namespace negraph
