#include "negraph/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace negraph {

std::string to_string(Attr a) {
  switch (a) {
    case Attr::word: return "word";
    case Attr::lemma: return "lemma";
    case Attr::pos: return "pos";
  }
  return "?";
}

std::string to_string(RuleCategory c) {
  return c == RuleCategory::negation ? "negation" : "uncertainty";
}

bool NodeConstraint::matches(const std::string& word, const std::string& lemma,
                             const std::string& pos) const {
  for (const AttrTest& t : tests) {
    const std::string* value = nullptr;
    switch (t.attr) {
      case Attr::word: value = &word; break;
      case Attr::lemma: value = &lemma; break;
      case Attr::pos: value = &pos; break;
    }
    // regex_match anchors the whole token: /no/ does not match "normal".
    if (!std::regex_match(*value, t.re)) return false;
  }
  return true;
}

namespace {

bool op_equal(const RelationOp& a, const RelationOp& b) {
  return a.direction == b.direction && a.label == b.label;
}

bool constraint_equal(const NodeConstraint& a, const NodeConstraint& b) {
  if (a.tests.size() != b.tests.size()) return false;
  for (std::size_t i = 0; i < a.tests.size(); ++i)
    if (a.tests[i].attr != b.tests[i].attr ||
        a.tests[i].pattern != b.tests[i].pattern)
      return false;
  return true;
}

// Recursive-descent parser over the pattern grammar. Tracks a byte cursor
// for error positions.
class PatternParser {
 public:
  explicit PatternParser(const std::string& src) : src_(src) {}

  PatternAst parse() {
    skip_ws();
    if (at_end()) throw err("empty pattern");
    PatternAst ast = parse_pattern();
    skip_ws();
    if (!at_end()) throw err("unexpected trailing input");
    return ast;
  }

 private:
  // pattern := node relchain*
  PatternAst parse_pattern() {
    PatternAst ast;
    ast.node = parse_node();
    parse_relchains(ast);
    return ast;
  }

  void parse_relchains(PatternAst& owner) {
    while (true) {
      skip_ws();
      if (at_end() || (peek() != '<' && peek() != '>')) return;
      RelationOp op;
      op.direction =
          next() == '<' ? Direction::dependent_of : Direction::governor_of;
      skip_ws();
      if (!at_end() && (std::islower(static_cast<unsigned char>(peek())) ||
                        peek() == '_'))
        op.label = parse_label();
      skip_ws();
      if (at_end()) throw err("expected a target after relation");
      PatternAst child;
      if (peek() == '(') {
        next();
        child = parse_pattern();
        skip_ws();
        if (at_end() || peek() != ')') throw err("unbalanced parenthesis");
        next();
      } else if (peek() == '{') {
        // Unparenthesized chains associate rightward: the chain that
        // follows constrains the node just parsed.
        child.node = parse_node();
        parse_relchains(child);
      } else {
        throw err("expected '{' or '(' after relation");
      }
      owner.children.emplace_back(op, std::move(child));
    }
  }

  std::string parse_label() {
    std::size_t start = pos_;
    while (!at_end() && (std::islower(static_cast<unsigned char>(peek())) ||
                         peek() == '_' || peek() == ':'))
      next();
    std::string label = src_.substr(start, pos_ - start);
    if (!valid_label(label))
      throw PatternSyntaxError("invalid relation label '" + label + "'",
                               start);
    return label;
  }

  static bool valid_label(const std::string& label) {
    // [a-z_]+(:[a-z_]+)?
    std::size_t colon = label.find(':');
    auto chunk_ok = [](std::string_view s) {
      return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || c == '_';
      });
    };
    if (colon == std::string::npos) return chunk_ok(label);
    if (label.find(':', colon + 1) != std::string::npos) return false;
    return chunk_ok(label.substr(0, colon)) &&
           chunk_ok(label.substr(colon + 1));
  }

  NodeConstraint parse_node() {
    skip_ws();
    if (at_end() || peek() != '{') throw err("expected '{'");
    next();
    NodeConstraint node;
    skip_ws();
    if (at_end()) throw err("unbalanced brace: missing '}'");
    if (peek() == '}') {
      next();
      return node;  // wildcard
    }
    std::set<Attr> seen;
    while (true) {
      Attr attr = parse_attr();
      if (!seen.insert(attr).second)
        throw err("duplicate attribute '" + to_string(attr) + "' in node");
      skip_ws();
      if (at_end() || peek() != ':') throw err("expected ':' after attribute");
      next();
      skip_ws();
      std::size_t regex_start = pos_;
      std::string body = parse_regex_body();
      NodeConstraint::AttrTest test;
      test.attr = attr;
      test.pattern = body;
      try {
        test.re = std::regex(body, std::regex::ECMAScript);
      } catch (const std::regex_error& e) {
        throw PatternSyntaxError(
            "invalid regex /" + body + "/: " + e.what(), regex_start);
      }
      node.tests.push_back(std::move(test));
      skip_ws();
      if (!at_end() && peek() == ',') {
        next();
        skip_ws();
        continue;
      }
      if (!at_end() && peek() == '}') {
        next();
        return node;
      }
      throw err("expected ',' or '}' in node");
    }
  }

  Attr parse_attr() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek())))
      next();
    std::string name = src_.substr(start, pos_ - start);
    if (name == "word") return Attr::word;
    if (name == "lemma") return Attr::lemma;
    if (name == "pos") return Attr::pos;
    throw PatternSyntaxError("unknown attribute '" + name + "'", start);
  }

  // Body between '/' delimiters; an escaped \/ does not terminate.
  std::string parse_regex_body() {
    if (at_end() || peek() != '/') throw err("expected '/' to open a regex");
    next();
    std::string body;
    while (!at_end()) {
      char c = next();
      if (c == '\\' && !at_end()) {
        body += c;
        body += next();
        continue;
      }
      if (c == '/') return body;
      body += c;
    }
    throw err("unterminated regex");
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  char next() { return src_[pos_++]; }
  PatternSyntaxError err(const std::string& msg) const {
    return PatternSyntaxError(msg, pos_);
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

void render_node(const NodeConstraint& node, std::string& out) {
  out += '{';
  bool first = true;
  for (const auto& t : node.tests) {
    if (!first) out += ',';
    first = false;
    out += to_string(t.attr);
    out += ":/";
    out += t.pattern;
    out += '/';
  }
  out += '}';
}

void render_into(const PatternAst& ast, std::string& out) {
  render_node(ast.node, out);
  for (const auto& [op, child] : ast.children) {
    out += ' ';
    out += op.direction == Direction::dependent_of ? '<' : '>';
    if (op.label) out += *op.label;
    out += ' ';
    if (child.children.empty()) {
      render_node(child.node, out);
    } else {
      out += '(';
      render_into(child, out);
      out += ')';
    }
  }
}

void compile_into(const PatternAst& ast, QueryGraph& q, int parent) {
  int id = static_cast<int>(q.nodes.size());
  q.nodes.push_back(ast.node);
  q.child_arcs.emplace_back();
  if (parent >= 0) {
    q.arcs.push_back(QueryGraph::Arc{parent, id, {}});
    q.child_arcs[parent].push_back(static_cast<int>(q.arcs.size()) - 1);
  }
  for (const auto& [op, child] : ast.children) {
    // The arc for `child` is created when it is visited; stash the op on
    // a placeholder first so preorder ids line up with arc order.
    int arc_index = static_cast<int>(q.arcs.size());
    compile_into(child, q, id);
    q.arcs[arc_index].op = op;
  }
}

}  // namespace

bool ast_equal(const PatternAst& a, const PatternAst& b) {
  if (!constraint_equal(a.node, b.node)) return false;
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!op_equal(a.children[i].first, b.children[i].first)) return false;
    if (!ast_equal(a.children[i].second, b.children[i].second)) return false;
  }
  return true;
}

PatternAst parse_pattern(const std::string& source) {
  return PatternParser(source).parse();
}

std::string render_pattern(const PatternAst& ast) {
  std::string out;
  render_into(ast, out);
  return out;
}

QueryGraph compile(const PatternAst& ast) {
  QueryGraph q;
  compile_into(ast, q, -1);
  return q;
}

std::vector<Rule> load_rules(std::istream& in) {
  std::vector<Rule> rules;
  std::set<std::string> seen_ids;
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
      throw ParseError("expected rule_id<TAB>category<TAB>pattern", line_no);
    Rule rule;
    rule.rule_id = line.substr(0, tab1);
    std::string category = line.substr(tab1 + 1, tab2 - tab1 - 1);
    rule.pattern_source = line.substr(tab2 + 1);
    if (rule.rule_id.empty())
      throw ParseError("empty rule_id", line_no);
    if (!seen_ids.insert(rule.rule_id).second)
      throw ParseError("duplicate rule_id '" + rule.rule_id + "'", line_no);
    if (category == "negation") {
      rule.category = RuleCategory::negation;
    } else if (category == "uncertainty") {
      rule.category = RuleCategory::uncertainty;
    } else {
      throw ParseError("unknown category '" + category + "' (expected "
                       "negation or uncertainty)",
                       line_no);
    }
    try {
      rule.compiled = compile(parse_pattern(rule.pattern_source));
    } catch (const PatternSyntaxError& e) {
      throw ParseError(
          "rule '" + rule.rule_id + "': " + std::string(e.what()), line_no);
    }
    rule.rank = static_cast<int>(rules.size());
    rules.push_back(std::move(rule));
  }
  return rules;
}

std::vector<Rule> load_rules(const std::string& content) {
  std::istringstream in(content);
  return load_rules(in);
}

std::vector<Rule> load_rules_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return load_rules(in);
}

}  // namespace negraph
