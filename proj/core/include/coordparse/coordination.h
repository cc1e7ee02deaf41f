#ifndef COORDPARSE_COORDINATION_H_
#define COORDPARSE_COORDINATION_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coordparse/tree.h"
#include "coordparse/util.h"

namespace coordparse {

// Conjunct spans and coordinator positions are 1-based inclusive token
// numbers, the convention used in all reports and prediction output.
// Tree spans stay half-open 0-based; convert at this boundary only.
struct Span {
  int first = 0;
  int last = 0;

  static Span from_halfopen(int begin, int end) { return {begin + 1, end}; }
  int begin() const { return first - 1; }  // half-open begin
  int end() const { return last; }         // half-open end
  int length() const { return last - first + 1; }

  bool operator==(const Span&) const = default;
  bool operator<(const Span& o) const {
    return first != o.first ? first < o.first : last < o.last;
  }
};

using SpanPair = std::pair<Span, Span>;

struct CoordinationInstance {
  std::vector<Token> sentence;
  int coord_index = 0;  // 1-based position of the coordinating word
  std::optional<SpanPair> gold;
  std::string coord_type;  // base label of the phrase dominating the CC

  const Token& coordinator() const { return sentence[coord_index - 1]; }
};

// One instance per CC-tagged coordination word (and/or/but/nor). Gold is
// the pair of COORD-tagged siblings nearest the coordinator, or nullopt
// when a side has none. Annotation oddities never throw; they are counted
// in `diag` (keys "extract.no_gold", "extract.non_coordination_cc").
std::vector<CoordinationInstance> extract_coordinations(
    const Tree& tree, Diagnostics* diag = nullptr);

// Span of the coordination phrase (the node dominating the CC) plus its
// base label, for phrase-recall evaluation. Empty when gold is absent.
struct GoldPhrase {
  std::string label;
  Span span;
};
std::optional<GoldPhrase> gold_phrase(const Tree& tree, int coord_index);

}  // namespace coordparse

#endif  // COORDPARSE_COORDINATION_H_
