#pragma once

// Independent equality oracle for POSITIVE braid words, used to cross-check
// the normal-form engine.  Two positive words are equal in the braid group
// iff one rewrites to the other using only the defining relations; since
// both move types preserve length, the full equivalence class of a word is
// finite and BFS enumerates it.  Nothing here touches the library's normal
// form code.

#include <cstdlib>
#include <queue>
#include <set>
#include <vector>

namespace braidrep::testing {

// All words reachable from `word` by swapping distant letters (|i-j| >= 2)
// or flipping a braid triple (i, j, i) -> (j, i, j) with |i-j| == 1.
inline std::set<std::vector<int>> rewrite_class(const std::vector<int>& word) {
  std::set<std::vector<int>> seen{word};
  std::queue<std::vector<int>> work;
  work.push(word);
  while (!work.empty()) {
    const std::vector<int> w = std::move(work.front());
    work.pop();
    auto push = [&](std::vector<int> nw) {
      if (seen.insert(nw).second) work.push(std::move(nw));
    };
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (std::abs(w[p] - w[p + 1]) >= 2) {
        std::vector<int> nw = w;
        std::swap(nw[p], nw[p + 1]);
        push(std::move(nw));
      }
      if (p + 2 < w.size() && std::abs(w[p] - w[p + 1]) == 1 && w[p] == w[p + 2]) {
        std::vector<int> nw = w;
        nw[p] = w[p + 1];
        nw[p + 1] = w[p];
        nw[p + 2] = w[p + 1];
        push(std::move(nw));
      }
    }
  }
  return seen;
}

inline bool words_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;  // positive-word equality preserves length
  return rewrite_class(a).count(b) > 0;
}

}  // namespace braidrep::testing
