#include "core.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace curves {

GaussWord parse_gauss(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<int> raw_labels;
  std::vector<int> raw_signs;  // 0 = unsigned
  while (in >> tok) {
    int sign = 0;
    if (tok.back() == '+' || tok.back() == '-') {
      sign = tok.back() == '+' ? +1 : -1;
      tok.pop_back();
    }
    if (tok.empty()) throw std::runtime_error("empty token");
    for (char ch : tok)
      if (!isdigit(static_cast<unsigned char>(ch)))
        throw std::runtime_error("bad token in Gauss code: '" + tok + "'");
    raw_labels.push_back(std::stoi(tok));
    raw_signs.push_back(sign);
  }
  if (raw_labels.empty()) throw std::runtime_error("empty Gauss code");
  bool any_signed = false, any_unsigned = false;
  for (int s : raw_signs) (s ? any_signed : any_unsigned) = true;
  if (any_signed && any_unsigned)
    throw std::runtime_error("mixed signed/unsigned tokens");

  GaussWord gw;
  std::map<int, int> relabel;
  std::map<int, int> sign_of;
  std::map<int, int> count;
  for (size_t i = 0; i < raw_labels.size(); ++i) {
    int lab = raw_labels[i];
    auto [it, fresh] = relabel.try_emplace(lab, static_cast<int>(relabel.size()));
    gw.word.push_back(it->second);
    ++count[lab];
    if (any_signed) {
      auto [sit, sfresh] = sign_of.try_emplace(lab, raw_signs[i]);
      if (!sfresh && sit->second != raw_signs[i])
        throw std::runtime_error("sign mismatch for label " + std::to_string(lab));
    }
  }
  for (auto& [lab, c] : count)
    if (c != 2)
      throw std::runtime_error("label " + std::to_string(lab) + " occurs " +
                               std::to_string(c) + " times (want 2)");
  if (any_signed) {
    gw.signs.resize(relabel.size());
    for (auto& [lab, idx] : relabel) gw.signs[idx] = sign_of[lab];
  }
  return gw;
}

std::string format_code(const Word& word, const Signs& signs) {
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word[i] + 1);
    if (!signs.empty()) out += signs[word[i]] > 0 ? '+' : '-';
  }
  return out;
}

std::string format_code(const CanonicalCode& code) {
  std::string out;
  for (size_t i = 0; i < code.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(code[i].first);
    out += code[i].second > 0 ? '+' : '-';
  }
  return out;
}

std::vector<std::pair<int, int>> positions_of(const Word& word) {
  int n = static_cast<int>(word.size()) / 2;
  std::vector<std::pair<int, int>> pos(n, {-1, -1});
  for (int i = 0; i < static_cast<int>(word.size()); ++i) {
    if (pos[word[i]].first < 0)
      pos[word[i]].first = i;
    else
      pos[word[i]].second = i;
  }
  return pos;
}

std::vector<int> build_map(const Word& word, const Signs& signs) {
  int L = static_cast<int>(word.size());
  std::vector<int> sigma(2 * L, -1);
  auto pos = positions_of(word);
  for (int c = 0; c < L / 2; ++c) {
    auto [i, j] = pos[c];
    int in_i = 2 * ((i - 1 + L) % L) + 1, out_i = 2 * i;
    int in_j = 2 * ((j - 1 + L) % L) + 1, out_j = 2 * j;
    std::array<int, 4> cyc = signs[c] > 0
                                 ? std::array<int, 4>{in_i, in_j, out_i, out_j}
                                 : std::array<int, 4>{in_i, out_j, out_i, in_j};
    for (int a = 0; a < 4; ++a) sigma[cyc[a]] = cyc[(a + 1) % 4];
  }
  return sigma;
}

std::vector<Face> faces(const Word& word, const Signs& signs) {
  int L = static_cast<int>(word.size());
  auto sigma = build_map(word, signs);
  std::vector<char> seen(2 * L, 0);
  std::vector<Face> out;
  for (int d0 = 0; d0 < 2 * L; ++d0) {
    if (seen[d0]) continue;
    Face f;
    int d = d0;
    while (!seen[d]) {
      seen[d] = 1;
      f.darts.push_back(d);
      d = sigma[d ^ 1];
    }
    out.push_back(std::move(f));
  }
  return out;
}

FaceCensus face_census(const std::vector<Face>& fs) {
  FaceCensus c;
  for (auto& f : fs) ++c[f.size()];
  return c;
}

bool genus0(const Word& word, const Signs& signs) {
  int n = static_cast<int>(word.size()) / 2;
  if (n == 0) return true;
  return static_cast<int>(faces(word, signs).size()) == n + 2;
}

bool check_gon_formula(const FaceCensus& census) {
  int total = 0;
  for (auto& [k, c] : census) total += (4 - k) * c;
  return total == 8;
}

CanonicalCode canonicalize(const Word& word, const Signs& signs) {
  int L = static_cast<int>(word.size());
  CanonicalCode best;
  if (L == 0) return best;
  auto sigma = build_map(word, signs);
  auto pos = positions_of(word);
  CanonicalCode cand(L);
  std::vector<int> relabel(L / 2), firstpos(L / 2), sgn(L / 2);
  for (int start = 0; start < L; ++start) {
    for (int direction : {1, -1}) {
      for (int reflect : {0, 1}) {
        std::fill(relabel.begin(), relabel.end(), -1);
        auto in_dart = [&](int p) {
          return direction == 1 ? 2 * ((p - 1 + L) % L) + 1 : 2 * p;
        };
        int next_label = 1;
        for (int t = 0; t < L; ++t) {
          int p = ((start + direction * t) % L + L) % L;
          int c = word[p];
          if (relabel[c] < 0) {
            relabel[c] = next_label++;
            firstpos[c] = p;
          } else {
            int i = firstpos[c], j = p;
            int s;
            if (!reflect)
              s = sigma[in_dart(i)] == in_dart(j) ? +1 : -1;
            else
              s = sigma[in_dart(j)] == in_dart(i) ? +1 : -1;
            sgn[c] = s;
          }
        }
        for (int t = 0; t < L; ++t) {
          int p = ((start + direction * t) % L + L) % L;
          cand[t] = {relabel[word[p]], sgn[word[p]]};
        }
        if (best.empty() || cand < best) best = cand;
      }
    }
  }
  return best;
}

PlaneCurve curve_from_code(const CanonicalCode& code) {
  PlaneCurve c;
  c.signs.resize(code.size() / 2);
  for (auto& [lab, s] : code) {
    c.word.push_back(lab - 1);
    c.signs[lab - 1] = s;
  }
  return c;
}

int interlace_count(const Word& word, int label) {
  auto pos = positions_of(word);
  auto [i, j] = pos[label];
  int cnt = 0;
  for (int d = 0; d < static_cast<int>(word.size()) / 2; ++d) {
    if (d == label) continue;
    auto [a, b] = pos[d];
    if ((i < a && a < j) != (i < b && b < j)) ++cnt;
  }
  return cnt;
}

bool parity_ok(const Word& word) {
  for (int c = 0; c < static_cast<int>(word.size()) / 2; ++c)
    if (interlace_count(word, c) % 2 != 0) return false;
  return true;
}

std::vector<PlaneCurve> realize(const Word& word) {
  int n = static_cast<int>(word.size()) / 2;
  std::vector<PlaneCurve> out;
  if (n == 0) return out;
  if (!parity_ok(word)) return out;
  std::set<CanonicalCode> seen;
  // first label fixed +1: the all-flipped assignment is the reflection
  for (uint32_t bits = 0; bits < (1u << (n - 1)); ++bits) {
    Signs signs(n);
    signs[0] = +1;
    for (int k = 1; k < n; ++k) signs[k] = (bits >> (k - 1)) & 1 ? -1 : +1;
    if (!genus0(word, signs)) continue;
    auto code = canonicalize(word, signs);
    if (seen.insert(code).second) out.push_back(curve_from_code(code));
  }
  return out;
}

std::optional<PlaneCurve> realize_signed(const GaussWord& gw) {
  if (!gw.is_signed()) return std::nullopt;
  if (!genus0(gw.word, gw.signs)) return std::nullopt;
  return PlaneCurve{gw.word, gw.signs};
}

std::set<int> reducible_crossings(const Word& word) {
  std::set<int> out;
  for (int c = 0; c < static_cast<int>(word.size()) / 2; ++c)
    if (interlace_count(word, c) == 0) out.insert(c);
  return out;
}

bool is_prime(const Word& word) {
  // prime iff no cyclic interval (proper, nonempty) is label-closed
  int L = static_cast<int>(word.size());
  if (L == 0) return false;
  auto pos = positions_of(word);
  for (int start = 0; start < L; ++start) {
    for (int len = 2; len < L; ++len) {
      // interval [start, start+len)
      bool closed = true;
      for (int t = 0; t < len && closed; ++t) {
        int p = (start + t) % L;
        auto [a, b] = pos[word[p]];
        int other = (a == p) ? b : a;
        int rel = ((other - start) % L + L) % L;
        if (rel >= len) closed = false;
      }
      if (closed) return false;
    }
  }
  return true;
}

PlaneCurve normalize_labels(const Word& word, const std::map<int, int>& signs_by_label) {
  PlaneCurve out;
  std::map<int, int> relabel;
  for (int c : word) {
    auto [it, fresh] = relabel.try_emplace(c, static_cast<int>(relabel.size()));
    out.word.push_back(it->second);
  }
  out.signs.resize(relabel.size());
  for (auto& [old, nw] : relabel) out.signs[nw] = signs_by_label.at(old);
  return out;
}

PlaneCurve connected_sum(const PlaneCurve& p, const PlaneCurve& q, int edge_p, int edge_q) {
  // cut p's edge e_{edge_p} and q's edge e_{edge_q}; splice q's circle into p's.
  int Lp = p.L(), Lq = q.L();
  Word w;
  std::map<int, int> signs;
  for (int t = 0; t <= edge_p; ++t) w.push_back(p.word[t]);
  for (int t = 1; t <= Lq; ++t) {
    int pos = (edge_q + t) % Lq;
    w.push_back(q.word[pos] + p.n());
  }
  for (int t = edge_p + 1; t < Lp; ++t) w.push_back(p.word[t]);
  for (int c = 0; c < p.n(); ++c) signs[c] = p.signs[c];
  for (int c = 0; c < q.n(); ++c) signs[c + p.n()] = q.signs[c];
  auto out = normalize_labels(w, signs);
  if (!genus0(out.word, out.signs)) {
    // tangle orientation mismatch: flip the inserted part's handedness
    for (int c = 0; c < q.n(); ++c) signs[c + p.n()] = -q.signs[c];
    out = normalize_labels(w, signs);
  }
  return out;
}

}  // namespace curves
