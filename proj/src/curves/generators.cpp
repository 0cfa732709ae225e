#include "generators.hpp"

#include <numeric>
#include <stdexcept>

#include "moves.hpp"

namespace curves {

namespace {
// slot end encoding 4*c + s, slots CCW; strand goes straight: s -> s+2.
// trace a slot map into a curve; returns false unless a single closed curve.
bool trace_slots(int m, const std::vector<std::pair<int, int>>& arcs, PlaneCurve& out) {
  std::vector<int> partner(4 * m, -1);
  for (auto& [a, b] : arcs) {
    if (partner[a] >= 0 || partner[b] >= 0) return false;
    partner[a] = b;
    partner[b] = a;
  }
  Word word;
  std::map<int, std::vector<int>> inslots;
  int start = arcs[0].first, cur = start, visited = 0;
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
  std::map<int, int> signs;
  for (auto& [c, ss] : inslots) {
    if (ss.size() != 2) return false;
    signs[c] = (ss[0] + 1) % 4 == ss[1] ? +1 : -1;
  }
  out = normalize_labels(word, signs);
  return true;
}
}  // namespace

PlaneCurve torus_projection(int p, int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1)
    throw std::runtime_error("torus projection needs p,q >= 2 coprime");
  int n = q * (p - 1);
  // braid drawn downward; crossing slot CCW order: 0=NE, 1=NW, 2=SW, 3=SE
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> dangle(p, -1), top(p, -1);
  int k = 0;
  for (int r = 0; r < q; ++r) {
    for (int i = 0; i < p - 1; ++i) {
      int c = k++;
      const std::pair<int, int> upper[2] = {{i, 1}, {i + 1, 0}};
      for (auto& [posn, slot] : upper) {
        if (dangle[posn] < 0)
          top[posn] = 4 * c + slot;
        else
          arcs.push_back({dangle[posn], 4 * c + slot});
      }
      dangle[i] = 4 * c + 2;
      dangle[i + 1] = 4 * c + 3;
    }
  }
  for (int i = 0; i < p; ++i) arcs.push_back({dangle[i], top[i]});
  PlaneCurve out;
  if (!trace_slots(n, arcs, out) || !genus0(out.word, out.signs))
    throw std::runtime_error("torus projection construction failed");
  return out;
}

std::vector<PlaneCurve> insertion_children(const PlaneCurve& c) {
  std::set<CanonicalCode> seen;
  std::vector<PlaneCurve> out;
  for (auto& [mv, child] : enumerate_imoves(c)) {
    auto code = canonicalize(child);
    if (seen.insert(code).second) out.push_back(curve_from_code(code));
  }
  return out;
}

std::map<int, std::vector<PlaneCurve>> enumerate_curves(int max_n) {
  std::map<int, std::vector<PlaneCurve>> levels;
  if (max_n < 1) return levels;
  levels[1].push_back(curve_from_code(canonicalize({0, 0}, {+1})));
  for (int n = 2; n <= max_n; ++n) {
    std::set<CanonicalCode> seen;
    for (auto& parent : levels[n - 1])
      for (auto& [mv, child] : enumerate_imoves(parent))
        seen.insert(canonicalize(child));
    auto& lvl = levels[n];
    for (auto& code : seen) lvl.push_back(curve_from_code(code));
  }
  return levels;
}

}  // namespace curves
