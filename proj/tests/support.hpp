// Shared helpers for the test suites: tiny graph builders, deterministic
// random instances, and independent oracles that never call the code
// paths they check.
#pragma once

#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "negraph/graph.hpp"
#include "negraph/matcher.hpp"
#include "negraph/pattern.hpp"

namespace test_support {

inline negraph::Vertex vtx(int index, const std::string& word,
                           const std::string& lemma,
                           const std::string& pos = "NN") {
  negraph::Vertex v;
  v.index = index;
  v.word = word;
  v.lemma = lemma;
  v.pos = pos;
  return v;
}

// Vertices from "word/lemma" tokens; pos defaults to NN.
inline negraph::SentenceGraph make_graph(
    const std::string& id, const std::vector<std::pair<std::string, std::string>>& tokens,
    const std::vector<negraph::Edge>& edges) {
  std::vector<negraph::Vertex> vertices;
  int index = 1;
  for (const auto& [word, lemma] : tokens)
    vertices.push_back(vtx(index++, word, lemma));
  return negraph::SentenceGraph(id, "", std::move(vertices), edges);
}

// ---- fig. 2 style fixtures, built in memory ----------------------------

// "Lungs are clear of acute infiltrates or pleural effusion ." with the
// propagated conjunct edge clear->effusion.
inline negraph::SentenceGraph fig2a_graph() {
  return make_graph(
      "fig2a_s1",
      {{"Lungs", "lung"},
       {"are", "be"},
       {"clear", "clear"},
       {"of", "of"},
       {"acute", "acute"},
       {"infiltrates", "infiltrate"},
       {"or", "or"},
       {"pleural", "pleural"},
       {"effusion", "effusion"},
       {".", "."}},
      {{3, 1, "nsubj"},
       {3, 2, "cop"},
       {6, 4, "case"},
       {6, 5, "amod"},
       {3, 6, "nmod:of"},
       {6, 7, "cc"},
       {9, 8, "amod"},
       {6, 9, "conj:or"},
       {3, 9, "nmod:of"},
       {3, 10, "punct"}});
}

// "There is no evidence of tuberculous disease ."
inline negraph::SentenceGraph fig2b_graph() {
  return make_graph("fig2b_s1",
                    {{"There", "there"},
                     {"is", "be"},
                     {"no", "no"},
                     {"evidence", "evidence"},
                     {"of", "of"},
                     {"tuberculous", "tuberculous"},
                     {"disease", "disease"},
                     {".", "."}},
                    {{2, 1, "expl"},
                     {4, 3, "neg"},
                     {2, 4, "nsubj"},
                     {7, 5, "case"},
                     {7, 6, "amod"},
                     {4, 7, "nmod:of"},
                     {2, 8, "punct"}});
}

// "Definite infiltrate is not excluded ."
inline negraph::SentenceGraph fig2c_graph() {
  return make_graph("fig2c_s1",
                    {{"Definite", "definite"},
                     {"infiltrate", "infiltrate"},
                     {"is", "be"},
                     {"not", "not"},
                     {"excluded", "exclude"},
                     {".", "."}},
                    {{2, 1, "amod"},
                     {5, 2, "nsubjpass"},
                     {5, 3, "auxpass"},
                     {5, 4, "neg"},
                     {5, 6, "punct"}});
}

// The three rule strings exactly as printed; 2b additionally in the
// corrected direction that matches the printed graph.
inline const char* kRule2a = "{} <nmod:of {lemma:/clear/}";
inline const char* kRule2bPrinted =
    "{} <nmod:of ({lemma:/evidence/} <neg {word:/no/})";
inline const char* kRule2bCorrected =
    "{} <nmod:of ({lemma:/evidence/} >neg {word:/no/})";
inline const char* kRule2c = "{} < ({lemma:/exclude/} >neg {word:/not/})";

// ---- random instances ---------------------------------------------------

struct RandomInstance {
  negraph::SentenceGraph graph;
  negraph::QueryGraph query;
  int start;
};

// Graphs with <= max_vertices vertices over a 4-token alphabet and <= 3
// relation labels; query trees with <= max_nodes nodes mixing wildcards
// and literal one-attribute constraints.
inline RandomInstance random_instance(std::mt19937& rng, int max_vertices = 8,
                                      int max_nodes = 4) {
  using namespace negraph;
  const std::vector<std::string> words = {"t0", "t1", "t2", "t3"};
  const std::vector<std::string> labels = {"a", "b", "c"};

  std::uniform_int_distribution<int> vertex_count(1, max_vertices);
  const int n = vertex_count(rng);
  std::vector<Vertex> vertices;
  std::uniform_int_distribution<int> word_pick(0, int(words.size()) - 1);
  for (int i = 1; i <= n; ++i) {
    Vertex v;
    v.index = i;
    v.word = words[word_pick(rng)];
    v.lemma = words[word_pick(rng)];
    v.pos = words[word_pick(rng)];
    vertices.push_back(std::move(v));
  }

  std::set<std::tuple<int, int, std::string>> seen;
  std::vector<Edge> edges;
  std::uniform_int_distribution<int> edge_count(0, 2 * n);
  std::uniform_int_distribution<int> vertex_pick(1, n);
  std::uniform_int_distribution<int> label_pick(0, int(labels.size()) - 1);
  const int m = n > 1 ? edge_count(rng) : 0;
  for (int e = 0; e < m; ++e) {
    int gov = vertex_pick(rng), dep = vertex_pick(rng);
    if (gov == dep) continue;
    std::string rel = labels[label_pick(rng)];
    if (!seen.insert({gov, dep, rel}).second) continue;
    edges.push_back(Edge{gov, dep, rel});
  }

  SentenceGraph graph("rand", "", std::move(vertices), std::move(edges));

  // Random query tree in preorder: each node after the first attaches to
  // a uniformly chosen earlier node.
  std::uniform_int_distribution<int> node_count(1, max_nodes);
  const int q_nodes = node_count(rng);
  QueryGraph q;
  std::uniform_int_distribution<int> attr_pick(0, 3);  // 3 = wildcard
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> label_opt(0, int(labels.size()));
  for (int i = 0; i < q_nodes; ++i) {
    NodeConstraint node;
    int which = attr_pick(rng);
    if (which < 3) {
      NodeConstraint::AttrTest test;
      test.attr = which == 0 ? Attr::word : which == 1 ? Attr::lemma : Attr::pos;
      test.pattern = words[word_pick(rng)];
      test.re = std::regex(test.pattern);
      node.tests.push_back(std::move(test));
    }
    q.nodes.push_back(std::move(node));
    q.child_arcs.emplace_back();
    if (i > 0) {
      std::uniform_int_distribution<int> parent_pick(0, i - 1);
      int parent = parent_pick(rng);
      RelationOp op;
      op.direction =
          coin(rng) ? Direction::dependent_of : Direction::governor_of;
      int lbl = label_opt(rng);
      if (lbl < int(labels.size())) op.label = labels[lbl];
      q.arcs.push_back(QueryGraph::Arc{parent, i, op});
      q.child_arcs[parent].push_back(int(q.arcs.size()) - 1);
    }
  }

  std::uniform_int_distribution<int> start_pick(1, n);
  return RandomInstance{std::move(graph), std::move(q), start_pick(rng)};
}

// ---- independent oracles -------------------------------------------------

// Exhaustive enumeration of all |V|^|Q| assignments, mirroring the match
// contract directly: anchor pinned, constraints, arc witnesses, sibling
// injectivity. Shares nothing with the search implementation.
inline bool brute_force_match(const negraph::SentenceGraph& g,
                              const negraph::QueryGraph& q, int start) {
  using namespace negraph;
  const int nq = static_cast<int>(q.nodes.size());
  const int nv = g.size();
  std::vector<int> assign(nq, 1);

  auto valid = [&]() {
    if (assign[0] != start) return false;
    for (int i = 0; i < nq; ++i) {
      const Vertex& v = g.vertex(assign[i]);
      if (!q.nodes[i].matches(v.word, v.lemma, v.pos)) return false;
    }
    for (const auto& arc : q.arcs) {
      const int parent_vertex = assign[arc.from];
      const int child_vertex = assign[arc.to];
      const int gov = arc.op.direction == Direction::dependent_of
                          ? child_vertex
                          : parent_vertex;
      const int dep = arc.op.direction == Direction::dependent_of
                          ? parent_vertex
                          : child_vertex;
      bool witnessed = false;
      for (const Edge& e : g.edges()) {
        if (e.governor != gov || e.dependent != dep) continue;
        if (arc.op.label && e.relation != *arc.op.label) continue;
        witnessed = true;
        break;
      }
      if (!witnessed) return false;
    }
    // Sibling-local injectivity.
    for (std::size_t a = 0; a < q.arcs.size(); ++a)
      for (std::size_t b = a + 1; b < q.arcs.size(); ++b)
        if (q.arcs[a].from == q.arcs[b].from &&
            assign[q.arcs[a].to] == assign[q.arcs[b].to])
          return false;
    return true;
  };

  while (true) {
    if (valid()) return true;
    int i = nq - 1;
    while (i >= 0 && assign[i] == nv) assign[i--] = 1;
    if (i < 0) return false;
    ++assign[i];
  }
}

// Re-checks a returned binding against the same contract; used for
// soundness assertions on found matches.
inline bool binding_is_sound(const negraph::SentenceGraph& g,
                             const negraph::QueryGraph& q, int start,
                             const negraph::MatchBinding& b) {
  using namespace negraph;
  if (b.assignment.size() != q.nodes.size()) return false;
  if (b.assignment.count(0) == 0 || b.assignment.at(0) != start) return false;
  std::set<int> image;
  for (const auto& [node, vertex] : b.assignment) {
    if (node < 0 || node >= int(q.nodes.size())) return false;
    if (!g.has_vertex(vertex)) return false;
    const Vertex& v = g.vertex(vertex);
    if (!q.nodes[node].matches(v.word, v.lemma, v.pos)) return false;
    image.insert(vertex);
  }
  if (image != b.scope) return false;
  for (const auto& arc : q.arcs) {
    const int parent_vertex = b.assignment.at(arc.from);
    const int child_vertex = b.assignment.at(arc.to);
    const int gov = arc.op.direction == Direction::dependent_of
                        ? child_vertex
                        : parent_vertex;
    const int dep = arc.op.direction == Direction::dependent_of
                        ? parent_vertex
                        : child_vertex;
    bool witnessed = false;
    for (const Edge& e : g.edges()) {
      if (e.governor == gov && e.dependent == dep &&
          (!arc.op.label || e.relation == *arc.op.label)) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  for (std::size_t a = 0; a < q.arcs.size(); ++a)
    for (std::size_t b2 = a + 1; b2 < q.arcs.size(); ++b2)
      if (q.arcs[a].from == q.arcs[b2].from &&
          b.assignment.at(q.arcs[a].to) == b.assignment.at(q.arcs[b2].to))
        return false;
  return true;
}

inline std::string data_path(const std::string& rel) {
  return std::string(NEGRAPH_DATA_DIR) + "/" + rel;
}

}  // namespace test_support
