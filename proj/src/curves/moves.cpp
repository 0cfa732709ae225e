#include "moves.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>

namespace curves {

std::pair<Word, std::map<int, int>> splice_keep_labels(const PlaneCurve& c, int label) {
  auto pos = positions_of(c.word);
  auto [i, j] = pos[label];
  Word mid(c.word.begin() + i + 1, c.word.begin() + j);
  Word out(c.word.begin(), c.word.begin() + i);
  out.insert(out.end(), mid.rbegin(), mid.rend());
  out.insert(out.end(), c.word.begin() + j + 1, c.word.end());
  std::set<int> inner(mid.begin(), mid.end());
  std::map<int, int> signs;
  for (int d = 0; d < c.n(); ++d) {
    if (d == label) continue;
    signs[d] = inner.count(d) ? -c.signs[d] : c.signs[d];
  }
  return {out, signs};
}

PlaneCurve half_twisted_splice(const PlaneCurve& c, int label) {
  auto [w, signs] = splice_keep_labels(c, label);
  if (w.empty()) return PlaneCurve{};
  return normalize_labels(w, signs);
}

// ---- slot-map surgery for the inverse move ----
// slot end encoding: 4*crossing + slot, slots 0..3 in CCW rotation order.

namespace {

struct SlotMap {
  int m = 0;
  std::vector<std::pair<int, int>> arcs;  // arc k corresponds to edge e_k at build time
};

SlotMap from_code(const Word& word, const Signs& signs) {
  int L = static_cast<int>(word.size());
  auto pos = positions_of(word);
  std::vector<int> slot_of_dart(2 * L, -1);
  for (int c = 0; c < L / 2; ++c) {
    auto [i, j] = pos[c];
    int in_i = 2 * ((i - 1 + L) % L) + 1, out_i = 2 * i;
    int in_j = 2 * ((j - 1 + L) % L) + 1, out_j = 2 * j;
    std::array<int, 4> cyc = signs[c] > 0
                                 ? std::array<int, 4>{in_i, in_j, out_i, out_j}
                                 : std::array<int, 4>{in_i, out_j, out_i, in_j};
    for (int s = 0; s < 4; ++s) slot_of_dart[cyc[s]] = 4 * c + s;
  }
  SlotMap sm;
  sm.m = L / 2;
  for (int p = 0; p < L; ++p)
    sm.arcs.push_back({slot_of_dart[2 * p], slot_of_dart[2 * p + 1]});
  return sm;
}

std::vector<int> partner_table(int m, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<int> partner(4 * m, -1);
  for (auto& [a, b] : arcs) {
    partner[a] = b;
    partner[b] = a;
  }
  return partner;
}

int component_count(int m, const std::vector<std::pair<int, int>>& arcs) {
  auto partner = partner_table(m, arcs);
  std::vector<char> seen(4 * m, 0);
  int comps = 0;
  for (int st = 0; st < 4 * m; ++st) {
    if (seen[st] || partner[st] < 0) continue;
    ++comps;
    int cur = st;
    while (true) {
      seen[cur] = 1;
      int q = partner[cur];
      seen[q] = 1;
      int nxt = (q / 4) * 4 + (q % 4 + 2) % 4;
      if (nxt == st) break;
      cur = nxt;
    }
  }
  return comps;
}

bool genus0_map(int m, const std::vector<std::pair<int, int>>& arcs) {
  if (m == 0) return true;
  auto partner = partner_table(m, arcs);
  std::vector<char> seen(4 * m, 0);
  int F = 0;
  for (int d0 = 0; d0 < 4 * m; ++d0) {
    if (seen[d0] || partner[d0] < 0) continue;
    ++F;
    int d = d0;
    while (!seen[d]) {
      seen[d] = 1;
      int q = partner[d];
      d = (q / 4) * 4 + (q % 4 + 1) % 4;
    }
  }
  return F == m + 2;
}

// trace a single closed curve; crossing ids = slot-end crossings.
// returns false if not a single closed curve covering everything.
bool trace(int m, const std::vector<std::pair<int, int>>& arcs, Word& word,
           std::map<int, int>& signs) {
  auto partner = partner_table(m, arcs);
  word.clear();
  signs.clear();
  std::map<int, std::vector<int>> inslots;
  int start = arcs[0].first;
  int cur = start;
  int visited = 0;
  while (true) {
    int nxt = partner[cur];
    ++visited;
    int c = nxt / 4, s = nxt % 4;
    word.push_back(c);
    inslots[c].push_back(s);
    cur = c * 4 + (s + 2) % 4;
    if (cur == start) break;
    if (visited > 2 * m) return false;
  }
  if (visited != 2 * m) return false;
  for (auto& [c, ss] : inslots) {
    if (ss.size() != 2) return false;
    signs[c] = (ss[0] + 1) % 4 == ss[1] ? +1 : -1;
  }
  return true;
}

}  // namespace

std::vector<std::pair<IMove, PlaneCurve>> enumerate_imoves(const PlaneCurve& c) {
  std::vector<std::pair<IMove, PlaneCurve>> out;
  int L = c.L();
  auto sm = from_code(c.word, c.signs);
  auto orig = canonicalize(c);
  int x = sm.m;  // new crossing id

  auto try_arcs = [&](int ea, int eb, int variant_counter,
                      std::vector<std::pair<int, int>>& na) -> bool {
    if (component_count(sm.m + 1, na) != 1) return false;
    if (!genus0_map(sm.m + 1, na)) return false;
    Word w2;
    std::map<int, int> s2;
    bool ok = trace(sm.m + 1, na, w2, s2);
    assert(ok);
    (void)ok;
    // round trip: splicing x must restore the original curve
    Signs sv(sm.m + 1);
    for (auto& [lab, sg] : s2) sv[lab] = sg;
    PlaneCurve cand{w2, sv};
    auto back = half_twisted_splice(cand, x);
    if (back.word.empty() || canonicalize(back) != orig) return false;
    // labels are already 0..m with the new crossing last
    out.push_back({IMove{ea, eb, variant_counter}, cand});
    return true;
  };

  for (int ea = 0; ea < L; ++ea) {
    // both cuts on edge ea: the new crossing carries a loop arc
    {
      auto [P1, P2] = sm.arcs[ea];
      int variant = 0;
      for (int sa = 0; sa < 4; ++sa) {
        for (int sb = 0; sb < 4; ++sb) {
          if (sa == sb) continue;
          int rest[2], ri = 0;
          for (int s = 0; s < 4; ++s)
            if (s != sa && s != sb) rest[ri++] = s;
          std::vector<std::pair<int, int>> na;
          for (int k = 0; k < L; ++k)
            if (k != ea) na.push_back(sm.arcs[k]);
          na.push_back({P1, 4 * x + sa});
          na.push_back({P2, 4 * x + sb});
          na.push_back({4 * x + rest[0], 4 * x + rest[1]});
          if (try_arcs(ea, ea, variant, na)) {}
          ++variant;
        }
      }
    }
    for (int eb = ea + 1; eb < L; ++eb) {
      auto [A1, A2] = sm.arcs[ea];
      auto [B1, B2] = sm.arcs[eb];
      int ends[4] = {A1, A2, B1, B2};
      int perm[4] = {0, 1, 2, 3};
      std::sort(perm, perm + 4);
      int variant = 0;
      do {
        std::vector<std::pair<int, int>> na;
        for (int k = 0; k < L; ++k)
          if (k != ea && k != eb) na.push_back(sm.arcs[k]);
        for (int k = 0; k < 4; ++k) na.push_back({ends[k], 4 * x + perm[k]});
        if (try_arcs(ea, eb, variant, na)) {}
        ++variant;
      } while (std::next_permutation(perm, perm + 4));
    }
  }
  return out;
}

std::optional<PlaneCurve> apply_imove(const PlaneCurve& c, const IMove& m) {
  for (auto& [mv, res] : enumerate_imoves(c))
    if (mv == m) return res;
  return std::nullopt;
}

ReductivityCertificate reductivity(const PlaneCurve& c, int max_depth) {
  ReductivityCertificate cert;
  if (!reducible_crossings(c.word).empty()) {
    cert.r = 0;
    cert.depth_counts = {1};
    return cert;
  }
  std::map<CanonicalCode, PlaneCurve> frontier;
  frontier[canonicalize(c)] = c;
  cert.depth_counts = {1};
  int found = -1;
  for (int depth = 1; depth <= max_depth && found < 0; ++depth) {
    std::map<CanonicalCode, PlaneCurve> nxt;
    for (auto& [key, cur] : frontier) {
      for (int lab = 0; lab < cur.n(); ++lab) {
        auto c2 = half_twisted_splice(cur, lab);
        if (c2.word.empty()) continue;
        assert(genus0(c2.word, c2.signs));
        if (!reducible_crossings(c2.word).empty()) {
          found = depth;
          break;
        }
        nxt[canonicalize(c2)] = c2;
      }
      if (found >= 0) break;
    }
    if (found >= 0) break;
    cert.depth_counts.push_back(static_cast<long long>(nxt.size()));
    frontier = std::move(nxt);
  }
  if (found < 0) return cert;  // r = -1, not reached
  cert.r = found;
  // lexicographically least witness of length r, labels relative to each
  // step's canonical form
  PlaneCurve cur = curve_from_code(canonicalize(c));
  std::vector<int> witness;
  std::function<bool(const PlaneCurve&, int)> dfs = [&](const PlaneCurve& p, int depth) {
    if (depth == 0) return !reducible_crossings(p.word).empty();
    if (!reducible_crossings(p.word).empty()) return false;  // would mean r smaller
    for (int lab = 0; lab < p.n(); ++lab) {
      auto c2 = half_twisted_splice(p, lab);
      if (c2.word.empty()) continue;
      witness.push_back(lab + 1);
      auto canon_next = curve_from_code(canonicalize(c2));
      if (dfs(canon_next, depth - 1)) return true;
      witness.pop_back();
    }
    return false;
  };
  bool ok = dfs(cur, cert.r);
  assert(ok);
  (void)ok;
  cert.witness = witness;
  return cert;
}

}  // namespace curves
