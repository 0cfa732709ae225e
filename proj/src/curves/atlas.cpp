#include "atlas.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace curves {

Part canon_config(const Part& p) {
  int m = p.m();
  Part best;
  if (m == 0) return best;
  for (int refl = 0; refl < 2; ++refl) {
    std::vector<int> seq(m);
    std::vector<char> th(m);
    if (!refl) {
      seq = p.word;
      th = p.thick;
    } else {
      for (int i = 0; i < m; ++i) seq[i] = p.word[m - 1 - i];
      for (int i = 0; i < m; ++i) th[i] = p.thick[((m - 2 - i) % m + m) % m];
    }
    for (int r = 0; r < m; ++r) {
      Part cand;
      cand.word.reserve(m);
      cand.thick.reserve(m);
      std::map<int, int> relabel;
      for (int t = 0; t < m; ++t) {
        int c = seq[(r + t) % m];
        auto [it, fresh] = relabel.try_emplace(c, static_cast<int>(relabel.size()));
        cand.word.push_back(it->second);
        cand.thick.push_back(th[(r + t) % m]);
      }
      if (best.word.empty() || cand < best) best = cand;
    }
  }
  return best;
}

std::string config_str(const Part& p) {
  std::string out;
  for (int i = 0; i < p.m(); ++i) {
    out += std::to_string(p.word[i] + 1);
    out += p.thick[i] ? '-' : '.';
  }
  return out;
}

Part config_parse(const std::string& s) {
  Part p;
  size_t i = 0;
  while (i < s.size()) {
    size_t j = i;
    while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i || j == s.size() || (s[j] != '-' && s[j] != '.'))
      throw std::runtime_error("bad config string: '" + s + "'");
    p.word.push_back(std::stoi(s.substr(i, j - i)) - 1);
    p.thick.push_back(s[j] == '-');
    i = j + 1;
  }
  return p;
}

std::vector<int> orient_class(const std::vector<int>& bits) {
  int k = static_cast<int>(bits.size());
  std::vector<int> best;
  for (int flip = 0; flip < 2; ++flip) {
    for (int refl = 0; refl < 2; ++refl) {
      std::vector<int> b(k);
      for (int i = 0; i < k; ++i) b[i] = bits[refl ? k - 1 - i : i] ^ flip;
      for (int r = 0; r < k; ++r) {
        std::vector<int> cand(k);
        for (int t = 0; t < k; ++t) cand[t] = b[(r + t) % k];
        if (best.empty() || cand < best) best = cand;
      }
    }
  }
  return best;
}

std::vector<Face> gon_faces(const Word& word, const Signs& signs, int k) {
  int L = static_cast<int>(word.size());
  std::vector<Face> out;
  for (auto& f : faces(word, signs)) {
    if (f.size() != k) continue;
    std::set<int> cs;
    for (int d : f.darts) cs.insert(word[dart_pos(d, L)]);
    if (static_cast<int>(cs.size()) == k) out.push_back(f);
  }
  return out;
}

GonConfig config_of(const Word& word, const Signs& signs, const Face& face) {
  int L = static_cast<int>(word.size());
  std::set<int> corners;
  for (int d : face.darts) corners.insert(word[dart_pos(d, L)]);
  auto pos = positions_of(word);
  std::vector<int> rpos;
  for (int c : corners) {
    rpos.push_back(pos[c].first);
    rpos.push_back(pos[c].second);
  }
  std::sort(rpos.begin(), rpos.end());
  int m = static_cast<int>(rpos.size());
  std::map<int, int> idx;
  for (int i = 0; i < m; ++i) idx[rpos[i]] = i;
  Part p;
  for (int q : rpos) p.word.push_back(word[q]);
  p.thick.assign(m, 0);
  std::set<int> edges;
  for (int d : face.darts) edges.insert(dart_edge(d));
  for (int e : edges) {
    int a = idx.at(e), b = idx.at((e + 1) % L);
    if ((a + 1) % m != b) throw std::runtime_error("face edge not adjacent in restriction");
    p.thick[a] = 1;
  }
  std::vector<int> bits;
  for (int d : face.darts) bits.push_back(d % 2);
  return GonConfig{canon_config(p), orient_class(bits)};
}

std::vector<GonConfig> curve_configs(const Word& word, const Signs& signs, int k) {
  std::vector<GonConfig> out;
  for (auto& f : gon_faces(word, signs, k)) out.push_back(config_of(word, signs, f));
  return out;
}

std::vector<AtlasEntry> load_atlas(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open atlas file: " + path);
  std::vector<AtlasEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    AtlasEntry e;
    std::string cfg;
    if (!(ls >> e.k >> e.name >> cfg)) continue;
    e.config = canon_config(config_parse(cfg));
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<FaceReport> classify_faces(const Word& word, const Signs& signs,
                                       const std::vector<AtlasEntry>& atlas) {
  int L = static_cast<int>(word.size());
  std::vector<FaceReport> out;
  for (auto& f : faces(word, signs)) {
    FaceReport r;
    r.size = f.size();
    std::set<int> cs;
    for (int d : f.darts) cs.insert(word[dart_pos(d, L)]);
    if (static_cast<int>(cs.size()) == r.size) {
      auto gc = config_of(word, signs, f);
      r.config = gc.config;
      r.orient = gc.orient;
      for (auto& e : atlas)
        if (e.k == r.size && e.config == r.config) {
          r.label = e.name;
          break;
        }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<int> reductivity_upper_bound(const Word& word, const Signs& signs,
                                           const std::vector<AtlasEntry>& atlas) {
  static const std::map<std::string, int> rules = {
      {"incoherent", 1}, {"coherent", 2}, {"A", 2}, {"B", 3}, {"C", 3},
      {"2a", 3},         {"2b", 3},       {"3a", 3}, {"4a", 3}};
  std::optional<int> best;
  for (auto& r : classify_faces(word, signs, atlas)) {
    if (r.label.empty()) continue;
    auto it = rules.find(r.label);
    if (it == rules.end()) continue;
    if (!best || it->second < *best) best = it->second;
  }
  return best;
}

}  // namespace curves
