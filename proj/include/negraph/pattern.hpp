#pragma once

#include <iosfwd>
#include <optional>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "negraph/error.hpp"

namespace negraph {

enum class Attr { word, lemma, pos };

std::string to_string(Attr a);

/// Attribute tests on one query node. An empty test list is the wildcard
/// `{}`. Regexes are anchored whole-token matches: /no/ matches "no",
/// not "normal".
struct NodeConstraint {
  struct AttrTest {
    Attr attr;
    std::string pattern;  // regex source, verbatim from the rule
    std::regex re;        // compiled, ECMAScript dialect
  };
  std::vector<AttrTest> tests;

  bool is_wildcard() const { return tests.empty(); }
  bool matches(const std::string& word, const std::string& lemma,
               const std::string& pos) const;
};

enum class Direction {
  dependent_of,  // '<': the constrained node is the dependent
  governor_of,   // '>': the constrained node is the governor
};

struct RelationOp {
  Direction direction = Direction::dependent_of;
  std::optional<std::string> label;  // absent = any relation
};

/// Parsed pattern: the root node is the anchor, children are relational
/// constraints on it. Tree-shaped by construction.
struct PatternAst {
  NodeConstraint node;
  std::vector<std::pair<RelationOp, PatternAst>> children;
};

// Structural equality (attribute tests by source string, child order
// preserved). Compiled regex objects are not compared.
bool ast_equal(const PatternAst& a, const PatternAst& b);

/// Compiled form of a PatternAst: nodes in preorder (anchor = id 0), one
/// arc per AST child edge. Always a connected tree: |arcs| = |nodes| - 1.
struct QueryGraph {
  struct Arc {
    int from = 0;  // parent node id
    int to = 0;    // child node id
    RelationOp op;
  };
  std::vector<NodeConstraint> nodes;
  std::vector<Arc> arcs;

  // arcs to the children of each node, in preorder.
  std::vector<std::vector<int>> child_arcs;
};

enum class RuleCategory { negation, uncertainty };

std::string to_string(RuleCategory c);

struct Rule {
  std::string rule_id;
  RuleCategory category = RuleCategory::negation;
  std::string pattern_source;
  QueryGraph compiled;
  int rank = 0;  // file order
};

/// Parse pattern source:
///   pattern  := node relchain* ;
///   relchain := rel target ;
///   rel      := ('<' | '>') label? ;
///   target   := node relchain* | '(' pattern ')' ;
///   node     := '{' '}' | '{' attr ':' '/' regex '/' (',' ...)* '}' ;
///   attr     := 'word' | 'lemma' | 'pos' ;
/// Whitespace is insignificant between tokens; regex bodies end at the
/// first unescaped '/'. In an unparenthesized chain `A <r B <s C`, C
/// constrains B; parentheses make the enclosed pattern a single target.
/// Throws PatternSyntaxError with a byte offset on bad input.
PatternAst parse_pattern(const std::string& source);

/// Canonical source string; parse_pattern(render_pattern(a)) is
/// structurally equal to a. Child targets are parenthesized exactly when
/// they have children of their own.
std::string render_pattern(const PatternAst& ast);

QueryGraph compile(const PatternAst& ast);

/// Load a rule file: one rule per non-comment line,
/// `rule_id<TAB>category<TAB>pattern`, category in {negation,
/// uncertainty}. Patterns are parsed and compiled eagerly; errors name
/// the rule and line.
std::vector<Rule> load_rules(std::istream& in);
std::vector<Rule> load_rules(const std::string& content);
std::vector<Rule> load_rules_file(const std::string& path);

}  // namespace negraph
