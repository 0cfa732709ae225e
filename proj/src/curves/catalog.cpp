#include <algorithm>
#include <functional>

#include "atlas.hpp"

namespace curves {

namespace {

// all cyclic double-occurrence words over k chords, labels by first appearance
void all_words(int k, std::vector<std::vector<int>>& out) {
  int m = 2 * k;
  std::vector<int> cur;
  std::vector<int> count(k, 0);
  std::function<void(int)> rec = [&](int nxt) {
    if (static_cast<int>(cur.size()) == m) {
      if (nxt == k) out.push_back(cur);
      return;
    }
    for (int c = 0; c <= std::min(nxt, k - 1); ++c) {
      if (count[c] >= 2) continue;
      ++count[c];
      cur.push_back(c);
      rec(c == nxt && count[c] == 1 ? nxt + 1 : nxt);
      cur.pop_back();
      --count[c];
    }
  };
  rec(0);
}

}  // namespace

std::map<int, std::vector<GonConfig>> derive_catalog(int max_k) {
  std::map<int, std::vector<GonConfig>> out;
  for (int k = 2; k <= max_k; ++k) {
    int m = 2 * k;
    std::vector<std::vector<int>> words;
    all_words(k, words);
    std::map<Part, std::vector<int>> found;
    for (auto& w : words) {
      std::vector<std::vector<int>> pos(k);
      for (int i = 0; i < m; ++i) pos[w[i]].push_back(i);
      // choose k thick gaps
      std::vector<int> sel(k);
      std::function<void(int, int)> pick = [&](int idx, int from) {
        if (idx < k) {
          for (int g = from; g < m; ++g) {
            sel[idx] = g;
            pick(idx + 1, g + 1);
          }
          return;
        }
        std::vector<char> thick(m, 0);
        for (int g : sel) thick[g] = 1;
        // incidences: thick gap g flanks chord w[g] at position g (left) and
        // chord w[g+1] at position g+1 (right)
        std::vector<std::vector<std::pair<int, int>>> inc(k);  // (gap, side)
        for (int g : sel) {
          inc[w[g]].push_back({g, 0});
          inc[w[(g + 1) % m]].push_back({g, 1});
        }
        for (int c = 0; c < k; ++c)
          if (inc[c].size() != 2) return;
        // alternation: the two incidences of a chord sit at its two passages
        for (int c = 0; c < k; ++c) {
          std::set<int> ps;
          for (auto& [g, s] : inc[c]) ps.insert(s == 0 ? g : (g + 1) % m);
          if (ps != std::set<int>(pos[c].begin(), pos[c].end())) return;
        }
        // walk the face: single cycle through all k edges; bits forced
        int g0 = sel[0];
        std::vector<int> bits, visited;
        int cur = g0, arrive = 1, bit = 0;
        for (int step = 0; step < k; ++step) {
          bits.push_back(bit);
          visited.push_back(cur);
          int c = arrive == 1 ? w[(cur + 1) % m] : w[cur];
          std::pair<int, int> nxt{-1, -1};
          int opts = 0;
          for (auto& e : inc[c])
            if (e != std::make_pair(cur, arrive)) {
              nxt = e;
              ++opts;
            }
          if (opts != 1) return;
          if (nxt.second == 0) {
            cur = nxt.first;
            arrive = 1;
            bit = 0;
          } else {
            cur = nxt.first;
            arrive = 0;
            bit = 1;
          }
        }
        if (cur != g0 || arrive != 1) return;
        std::sort(visited.begin(), visited.end());
        if (std::unique(visited.begin(), visited.end()) - visited.begin() != k) return;
        Part p{w, thick};
        found.try_emplace(canon_config(p), orient_class(bits));
      };
      pick(0, 0);
    }
    for (auto& [cfg, oc] : found) out[k].push_back({cfg, oc});
  }
  return out;
}

}  // namespace curves
