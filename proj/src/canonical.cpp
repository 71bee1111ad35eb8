#include "canonical.hpp"

#include <algorithm>
#include <vector>

#include "errors.hpp"
#include "version.hpp"

namespace rainbowlab {

namespace {

// Entries are laid out column by column: placing the vertex at position k
// appends the k pairs (0,k), (1,k), ..., (k-1,k). That way a partial
// permutation determines a contiguous prefix and greater-than prefixes can be
// pruned early. Entry byte: 0 = non-edge, otherwise 1 + first-occurrence color
// id (at most C(12,2) = 66 colors, so bytes suffice).
struct CanonSearch {
  const ColoredGraph& g;
  int n;
  std::vector<uint8_t> cur;
  std::vector<uint8_t> best;
  bool have_best = false;
  std::vector<int> perm;        // perm[pos] = original vertex
  std::vector<char> used;       // original vertex already placed
  std::vector<int> relabel_of;  // original color -> 1 + small id, 0 = unassigned
  std::vector<int> assigned;    // assignment order, for undo
  std::vector<int> color_index; // original color -> dense index into relabel_of

  explicit CanonSearch(const ColoredGraph& graph) : g(graph), n(graph.n()) {
    int m = n * (n - 1) / 2;
    cur.assign(m, 0);
    best.assign(m, 0);
    perm.assign(n, -1);
    used.assign(n, 0);
  }

  int dense(int color) const { return color_index[color]; }

  // strictly_better = the current prefix is already lexicographically smaller
  // than best's prefix, so deeper comparisons are moot until best changes.
  // Returns true when best was replaced somewhere below; the caller's prefix
  // is then a prefix of the new best, so its comparison state resets to equal.
  bool dfs(int k, bool strictly_better) {
    if (k == n) {
      if (!have_best || strictly_better) {
        best = cur;
        have_best = true;
        return true;
      }
      return false;
    }
    bool replaced = false;
    int offset = k * (k - 1) / 2;
    for (int x = 0; x < n; ++x) {
      if (used[x]) continue;
      // Fill segment for placing x at position k.
      size_t assigned_mark = assigned.size();
      bool prune = false;
      bool better = strictly_better;
      for (int i = 0; i < k; ++i) {
        int c = g.color_at(perm[i], x);
        uint8_t entry = 0;
        if (c != kNoEdge) {
          int di = dense(c);
          if (relabel_of[di] == 0) {
            relabel_of[di] = static_cast<int>(assigned.size()) + 1;
            assigned.push_back(di);
          }
          entry = static_cast<uint8_t>(relabel_of[di]);
        }
        cur[offset + i] = entry;
        if (have_best && !better) {
          uint8_t b = best[offset + i];
          if (entry > b) {
            prune = true;
            break;
          }
          if (entry < b) better = true;
        }
      }
      if (!prune) {
        used[x] = 1;
        perm[k] = x;
        if (dfs(k + 1, better)) {
          replaced = true;
          strictly_better = false;
        }
        perm[k] = -1;
        used[x] = 0;
      }
      while (assigned.size() > assigned_mark) {
        relabel_of[assigned.back()] = 0;
        assigned.pop_back();
      }
    }
    return replaced;
  }
};

}  // namespace

std::string canonical_key(const ColoredGraph& g) {
  if (g.n() > guards::kCanonicalKeyMaxN) {
    throw GuardError("canonical_key supports n <= " + std::to_string(guards::kCanonicalKeyMaxN) +
                     ", got n = " + std::to_string(g.n()));
  }
  CanonSearch search(g);
  std::vector<int> colors = g.color_set();
  int max_color = colors.empty() ? 0 : colors.back();
  search.color_index.assign(max_color + 1, -1);
  for (size_t i = 0; i < colors.size(); ++i) search.color_index[colors[i]] = static_cast<int>(i);
  search.relabel_of.assign(colors.size(), 0);
  search.dfs(0, false);
  std::string key;
  key.reserve(1 + search.best.size());
  key.push_back(static_cast<char>(g.n()));
  for (uint8_t b : search.best) key.push_back(static_cast<char>(b));
  return key;
}

}  // namespace rainbowlab
