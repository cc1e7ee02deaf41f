#include "coordparse/coordination.h"

namespace coordparse {

namespace {

constexpr const char* kConjunctTag = "COORD";

bool is_coordinator_leaf(const Tree& node) {
  return node.preterminal() && node.label == "CC" &&
         is_coordination_word(node.word);
}

// Gold conjuncts are the COORD-tagged siblings nearest the coordinator:
// closest span ending at or before the CC on the left, closest starting
// after it on the right. Punctuation between a conjunct edge and the CC is
// legal and simply left uncovered.
std::optional<SpanPair> nearest_conjuncts(const Tree& parent, int cc_begin) {
  const Tree* left = nullptr;
  const Tree* right = nullptr;
  for (const Tree& child : parent.children) {
    if (!child.has_ftag(kConjunctTag)) continue;
    if (child.end <= cc_begin) {
      if (left == nullptr || child.end > left->end) left = &child;
    } else if (child.begin > cc_begin) {
      if (right == nullptr || child.begin < right->begin) right = &child;
    }
  }
  if (left == nullptr || right == nullptr) return std::nullopt;
  return SpanPair{Span::from_halfopen(left->begin, left->end),
                  Span::from_halfopen(right->begin, right->end)};
}

void walk(const Tree& node, const std::vector<Token>& sentence,
          std::vector<CoordinationInstance>* out, Diagnostics* diag) {
  for (const Tree& child : node.children) {
    if (child.preterminal() && child.label == "CC") {
      if (!is_coordination_word(child.word)) {
        if (diag) diag->bump("extract.non_coordination_cc");
        continue;
      }
      CoordinationInstance inst;
      inst.sentence = sentence;
      inst.coord_index = child.begin + 1;
      inst.gold = nearest_conjuncts(node, child.begin);
      inst.coord_type = node.label;
      if (!inst.gold && diag) diag->bump("extract.no_gold");
      out->push_back(std::move(inst));
    } else {
      walk(child, sentence, out, diag);
    }
  }
}

}  // namespace

std::vector<CoordinationInstance> extract_coordinations(const Tree& tree,
                                                        Diagnostics* diag) {
  std::vector<CoordinationInstance> out;
  if (is_coordinator_leaf(tree)) {  // degenerate single-token tree
    CoordinationInstance inst;
    inst.sentence = tree_tokens(tree);
    inst.coord_index = 1;
    if (diag) diag->bump("extract.no_gold");
    out.push_back(std::move(inst));
    return out;
  }
  walk(tree, tree_tokens(tree), &out, diag);
  return out;
}

std::optional<GoldPhrase> gold_phrase(const Tree& tree, int coord_index) {
  const int cc_begin = coord_index - 1;
  std::optional<GoldPhrase> found;
  std::function<void(const Tree&)> visit = [&](const Tree& node) {
    for (const Tree& child : node.children) {
      if (child.preterminal()) {
        if (child.begin == cc_begin && child.label == "CC" &&
            nearest_conjuncts(node, cc_begin)) {
          found = GoldPhrase{node.label,
                             Span::from_halfopen(node.begin, node.end)};
        }
      } else if (child.begin <= cc_begin && cc_begin < child.end) {
        visit(child);
      }
    }
  };
  visit(tree);
  return found;
}

}  // namespace coordparse
