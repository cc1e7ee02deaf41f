#ifndef COORDPARSE_UTIL_H_
#define COORDPARSE_UTIL_H_

#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace coordparse {

constexpr double kLogZero = -std::numeric_limits<double>::infinity();

inline double log_add(double a, double b) {
  if (a == kLogZero) return b;
  if (b == kLogZero) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

// POS tags treated as punctuation when checking adjacency to a coordinator
// and when skipping punctuation-only siblings in the baseline conversion.
inline bool is_punctuation_pos(const std::string& pos) {
  return pos == "," || pos == "." || pos == ":" || pos == "``" ||
         pos == "''" || pos == "-LRB-" || pos == "-RRB-" || pos == "HYPH";
}

// Lowercase ASCII copy; treebank tokens are ASCII at this scale.
inline std::string lowercase(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

inline bool is_coordination_word(const std::string& word) {
  const std::string w = lowercase(word);
  return w == "and" || w == "or" || w == "but" || w == "nor";
}

// Counters for conditions that are tolerated but worth surfacing (malformed
// annotation, empty candidate sets, flat-tree fallbacks).
class Diagnostics {
 public:
  void bump(const std::string& key, long n = 1) { counts_[key] += n; }
  long count(const std::string& key) const {
    auto it = counts_.find(key);
    return it == counts_.end() ? 0 : it->second;
  }
  const std::map<std::string, long>& counts() const { return counts_; }

 private:
  std::map<std::string, long> counts_;
};

std::vector<std::string> split_ws(const std::string& s);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace coordparse

#endif  // COORDPARSE_UTIL_H_
