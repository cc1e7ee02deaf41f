#include "coordparse/tree.h"

#include <algorithm>
#include <sstream>

#include "coordparse/errors.h"
#include "coordparse/util.h"

namespace coordparse {

bool Tree::has_ftag(const std::string& tag) const {
  return std::find(ftags.begin(), ftags.end(), tag) != ftags.end();
}

std::string Tree::tagged_label() const {
  std::string out = label;
  for (const auto& t : ftags) {
    out += '-';
    out += t;
  }
  return out;
}

namespace {

struct Scanner {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  explicit Scanner(const std::string& t) : text(t) {}

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\n' ||
                       peek() == '\r'))
      advance();
  }

  std::string atom() {
    std::string out;
    while (!done() && peek() != '(' && peek() != ')' && peek() != ' ' &&
           peek() != '\t' && peek() != '\n' && peek() != '\r') {
      out += peek();
      advance();
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, col);
  }
};

void split_label(const std::string& raw, Tree* node, const Scanner& sc) {
  if (raw.empty()) throw ParseError("empty constituent label", sc.line, sc.col);
  if (raw[0] == '-') {  // -LRB-, -RRB-, -NONE-
    node->label = raw;
    return;
  }
  std::size_t start = 0;
  bool first = true;
  while (start <= raw.size()) {
    std::size_t dash = raw.find('-', start);
    std::string piece = raw.substr(start, dash == std::string::npos
                                              ? std::string::npos
                                              : dash - start);
    if (first) {
      node->label = piece;
      first = false;
    } else if (!piece.empty() && !node->has_ftag(piece)) {
      node->ftags.push_back(piece);
    }
    if (dash == std::string::npos) break;
    start = dash + 1;
  }
  if (node->label.empty())
    throw ParseError("empty constituent label", sc.line, sc.col);
}

Tree parse_node(Scanner& sc) {
  sc.skip_ws();
  if (sc.done() || sc.peek() != '(') sc.fail("expected '('");
  sc.advance();
  sc.skip_ws();
  if (sc.done()) sc.fail("unbalanced parentheses: unexpected end of input");

  Tree node;
  split_label(sc.atom(), &node, sc);

  while (true) {
    sc.skip_ws();
    if (sc.done()) sc.fail("unbalanced parentheses: unexpected end of input");
    char c = sc.peek();
    if (c == ')') {
      sc.advance();
      break;
    }
    if (c == '(') {
      if (!node.word.empty())
        sc.fail("constituent mixes a word and subtrees");
      node.children.push_back(parse_node(sc));
    } else {
      if (!node.children.empty())
        sc.fail("constituent mixes a word and subtrees");
      if (!node.word.empty()) sc.fail("preterminal with more than one word");
      node.word = sc.atom();
    }
  }
  if (node.children.empty() && node.word.empty())
    sc.fail("empty constituent");
  return node;
}

int assign_spans(Tree* node, int offset) {
  node->begin = offset;
  if (node->preterminal()) {
    node->end = offset + 1;
    return node->end;
  }
  int cur = offset;
  for (Tree& child : node->children) cur = assign_spans(&child, cur);
  node->end = cur;
  return cur;
}

void write_node(const Tree& t, std::string* out) {
  out->push_back('(');
  out->append(t.tagged_label());
  if (t.preterminal()) {
    out->push_back(' ');
    out->append(t.word);
  } else {
    for (const Tree& c : t.children) {
      out->push_back(' ');
      write_node(c, out);
    }
  }
  out->push_back(')');
}

void collect_tokens(const Tree& t, std::vector<Token>* out) {
  if (t.preterminal()) {
    out->push_back({t.begin, t.word, t.label});
    return;
  }
  for (const Tree& c : t.children) collect_tokens(c, out);
}

}  // namespace

std::vector<Tree> parse_bracketed(const std::string& text) {
  Scanner sc(text);
  std::vector<Tree> trees;
  while (true) {
    sc.skip_ws();
    if (sc.done()) break;
    Tree t = parse_node(sc);
    assign_spans(&t, 0);
    trees.push_back(std::move(t));
  }
  return trees;
}

std::string write_tree(const Tree& tree) {
  std::string out;
  write_node(tree, &out);
  return out;
}

std::string write_trees(const std::vector<Tree>& trees) {
  std::string out;
  for (const Tree& t : trees) {
    out += write_tree(t);
    out += '\n';
  }
  return out;
}

std::vector<Tree> load_treebank(const std::string& path) {
  return parse_bracketed(read_file(path));
}

std::vector<Token> tree_tokens(const Tree& tree) {
  std::vector<Token> out;
  collect_tokens(tree, &out);
  return out;
}

std::vector<std::string> pos_sequence(const Tree& tree, int begin, int end) {
  if (begin < tree.begin || end > tree.end || begin > end)
    throw ContractError("pos_sequence: span [" + std::to_string(begin) + "," +
                        std::to_string(end) + ") out of range");
  std::vector<Token> toks = tree_tokens(tree);
  std::vector<std::string> out;
  for (const Token& tok : toks)
    if (tok.index >= begin && tok.index < end) out.push_back(tok.pos);
  return out;
}

}  // namespace coordparse
