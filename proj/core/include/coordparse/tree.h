#ifndef COORDPARSE_TREE_H_
#define COORDPARSE_TREE_H_

#include <string>
#include <vector>

namespace coordparse {

struct Token {
  int index = 0;  // 0-based sentence position
  std::string word;
  std::string pos;
};

// Constituency node. Spans are half-open token intervals [begin, end).
// A preterminal has an empty child list and carries its surface word; its
// label is the POS tag. Function tags are kept in input order, separate
// from the base label.
struct Tree {
  std::string label;
  std::vector<std::string> ftags;
  std::string word;  // non-empty iff preterminal
  std::vector<Tree> children;
  int begin = 0;
  int end = 0;

  bool preterminal() const { return children.empty(); }
  int size() const { return end - begin; }
  bool has_ftag(const std::string& tag) const;
  std::string tagged_label() const;  // base label with ftags re-attached
};

// Reads a sequence of Penn-style bracketed trees. Labels of the form
// BASE-FTAG1-FTAG2 are split; labels starting with '-' (-LRB-, -RRB-,
// -NONE-) are kept whole. Spans are filled in. Throws ParseError with
// line/column on unbalanced parentheses or empty constituents.
std::vector<Tree> parse_bracketed(const std::string& text);

// Companion writer: one tree per line, single spaces. parse(write(t))
// reproduces t exactly.
std::string write_tree(const Tree& tree);
std::string write_trees(const std::vector<Tree>& trees);

std::vector<Tree> load_treebank(const std::string& path);

std::vector<Token> tree_tokens(const Tree& tree);

// POS tags of the tokens in half-open span [begin, end), in order.
// Throws ContractError when the span is out of range or inverted.
std::vector<std::string> pos_sequence(const Tree& tree, int begin, int end);

}  // namespace coordparse

#endif  // COORDPARSE_TREE_H_
