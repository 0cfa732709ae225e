#include "unavoidable.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace curves {

Part restrict_part(const Part& p, const std::set<int>& chords) {
  int m = p.m();
  std::vector<int> keep;
  for (int i = 0; i < m; ++i)
    if (chords.count(p.word[i])) keep.push_back(i);
  Part out;
  int mk = static_cast<int>(keep.size());
  for (int a = 0; a < mk; ++a) {
    int i = keep[a], j = keep[(a + 1) % mk];
    out.word.push_back(p.word[i]);
    out.thick.push_back((i + 1) % m == j && p.thick[i]);
  }
  return out;
}

namespace {

// thick gaps whose flanking chords are distinct, as ordered chord pairs
std::vector<std::pair<int, int>> thick_pairs(const Part& p) {
  std::vector<std::pair<int, int>> out;
  int m = p.m();
  for (int i = 0; i < m; ++i)
    if (p.thick[i] && p.word[i] != p.word[(i + 1) % m])
      out.push_back({p.word[i], p.word[(i + 1) % m]});
  return out;
}

std::vector<int> chord_ids(const Part& p) {
  std::set<int> s(p.word.begin(), p.word.end());
  return {s.begin(), s.end()};
}

// all monotone assignments of npx items to ngaps slots
void monotone_cuts(int npx, int ngaps, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(npx, 0);
  if (npx == 0) {
    out.push_back(cur);
    return;
  }
  while (true) {
    out.push_back(cur);
    int i = npx - 1;
    while (i >= 0 && cur[i] == ngaps - 1) --i;
    if (i < 0) break;
    int v = cur[i] + 1;
    for (int j = i; j < npx; ++j) cur[j] = v;
  }
}

}  // namespace

std::set<Part> completions(const Part& tri, const Part& gon, Share share) {
  std::set<Part> out;
  for (auto& s : completion_subcases(tri, gon, share)) out.insert(s.begin(), s.end());
  return out;
}

std::vector<std::set<Part>> completion_subcases(const Part& tri, const Part& gon,
                                                Share share) {
  std::vector<std::set<Part>> cases;
  int m_t = tri.m(), m_g = gon.m();
  auto tri_ids = chord_ids(tri);
  auto gon_ids = chord_ids(gon);
  int kt = static_cast<int>(tri_ids.size());

  // share choices: gon chord(s) -> tri chord(s)
  std::vector<std::pair<std::vector<int>, std::vector<int>>> shared;  // (tri, gon)
  if (share == Share::Crossing) {
    for (int ct : tri_ids)
      for (int cg : gon_ids) shared.push_back({{ct}, {cg}});
  } else {
    for (auto& [a, b] : thick_pairs(tri))
      for (auto& [c, d] : thick_pairs(gon)) {
        shared.push_back({{a, b}, {c, d}});
        shared.push_back({{a, b}, {d, c}});
      }
  }

  for (auto& [tshared, gshared] : shared) {
    std::set<Part> out;
    std::map<int, int> gmap;  // gon chord -> part chord
    for (size_t i = 0; i < gshared.size(); ++i) gmap[gshared[i]] = tshared[i];
    std::vector<int> new_chords;
    for (int c : gon_ids)
      if (!gmap.count(c)) new_chords.push_back(c);
    for (size_t i = 0; i < new_chords.size(); ++i)
      gmap[new_chords[i]] = kt + static_cast<int>(i);
    Part gon_rel;  // gon relabeled into part chord ids
    gon_rel.thick = gon.thick;
    for (int c : gon.word) gon_rel.word.push_back(gmap.at(c));
    Part target_g = canon_config(gon_rel);
    std::vector<int> new_pass;  // non-shared gon passages, in gon cyclic order
    for (int c : gon_rel.word)
      if (c >= kt) new_pass.push_back(c);
    std::vector<int> plain;
    for (int i = 0; i < m_t; ++i)
      if (!tri.thick[i]) plain.push_back(i);
    int npx = static_cast<int>(new_pass.size());

    std::sort(new_pass.begin(), new_pass.end());
    std::vector<std::vector<int>> cuts;
    monotone_cuts(npx, static_cast<int>(plain.size()), cuts);
    std::set<int> gon_chords;
    for (auto& [c, pc] : gmap) gon_chords.insert(pc);
    std::set<int> tri_set(tri_ids.begin(), tri_ids.end());
    Part tri_canon = canon_config(tri);

    do {
      for (auto& cut : cuts) {
        // build the part word: scaffold with new passages inserted into gaps
        Part part;
        for (int gi = 0; gi < m_t; ++gi) {
          part.word.push_back(tri.word[gi]);
          part.thick.push_back(tri.thick[gi]);
          if (!tri.thick[gi]) {
            int pg = static_cast<int>(std::find(plain.begin(), plain.end(), gi) -
                                      plain.begin());
            for (int k = 0; k < npx; ++k)
              if (cut[k] == pg) {
                part.word.push_back(new_pass[k]);
                part.thick.push_back(0);
              }
          }
        }
        int mp = part.m();
        std::vector<int> keep;
        for (int i = 0; i < mp; ++i)
          if (gon_chords.count(part.word[i])) keep.push_back(i);
        if (static_cast<int>(keep.size()) != m_g) continue;
        std::vector<int> partw_g;
        for (int i : keep) partw_g.push_back(part.word[i]);
        // align the gon's cycle onto its passages in the part, then impose
        // its thick gaps (each must be a real adjacency)
        for (int refl = 0; refl < 2; ++refl) {
          std::vector<int> gwr(m_g);
          std::vector<char> gtr(m_g);
          for (int i = 0; i < m_g; ++i) {
            gwr[i] = gon_rel.word[refl ? m_g - 1 - i : i];
            gtr[i] = refl ? gon_rel.thick[((m_g - 2 - i) % m_g + m_g) % m_g]
                          : gon_rel.thick[i];
          }
          for (int rot = 0; rot < m_g; ++rot) {
            bool eq = true;
            for (int t = 0; t < m_g && eq; ++t)
              eq = gwr[(rot + t) % m_g] == partw_g[t];
            if (!eq) continue;
            Part cand = part;
            bool good = true;
            for (int a = 0; a < m_g && good; ++a) {
              if (!gtr[(rot + a) % m_g]) continue;
              int i = keep[a], j = keep[(a + 1) % m_g];
              if ((i + 1) % mp != j)
                good = false;
              else
                cand.thick[i] = 1;
            }
            if (!good) continue;
            if (canon_config(restrict_part(cand, tri_set)) != tri_canon) continue;
            if (canon_config(restrict_part(cand, gon_chords)) != target_g) continue;
            out.insert(canon_config(cand));
          }
        }
      }
    } while (std::next_permutation(new_pass.begin(), new_pass.end()));
    cases.push_back(std::move(out));
  }
  return cases;
}

std::vector<Seed> load_seeds(const std::string& path,
                             const std::vector<AtlasEntry>& atlas) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open seed file: " + path);
  std::set<std::string> known;
  for (auto& e : atlas) known.insert(std::to_string(e.k) + ":" + e.name);
  std::vector<Seed> out;
  std::string line;
  auto parse_face = [&](const std::string& tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw std::runtime_error("bad seed face: " + tok);
    std::string k = tok.substr(0, colon);
    std::vector<std::string> types;
    std::istringstream ts(tok.substr(colon + 1));
    std::string t;
    while (std::getline(ts, t, ',')) {
      if (!known.count(k + ":" + t))
        throw std::runtime_error("seed references unknown atlas label " + k + ":" + t);
      types.push_back(t);
    }
    return std::pair<int, std::vector<std::string>>{std::stoi(k), types};
  };
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    Seed s;
    std::string sh, f1, f2;
    if (!(ls >> s.name >> sh >> f1 >> f2)) continue;
    if (sh == "crossing")
      s.share = Share::Crossing;
    else if (sh == "edge")
      s.share = Share::Edge;
    else
      throw std::runtime_error("bad share relation: " + sh);
    s.face1_types = parse_face(f1).second;
    s.face2_types = parse_face(f2).second;
    out.push_back(std::move(s));
  }
  return out;
}

DerivedParts derive_r4_parts(const std::vector<AtlasEntry>& atlas,
                             const std::vector<Seed>& seeds) {
  auto lookup = [&](const std::string& name) -> const Part& {
    for (auto& e : atlas)
      if (e.name == name) return e.config;
    throw std::runtime_error("atlas label not found: " + name);
  };
  DerivedParts out;
  std::set<Part> all;
  for (auto& seed : seeds) {
    std::set<Part> mine;
    for (auto& t1 : seed.face1_types)
      for (auto& t2 : seed.face2_types) {
        auto c = completions(lookup(t1), lookup(t2), seed.share);
        mine.insert(c.begin(), c.end());
      }
    out.by_seed.push_back({seed.name, {mine.begin(), mine.end()}});
    all.insert(mine.begin(), mine.end());
  }
  out.all.assign(all.begin(), all.end());
  return out;
}

namespace {

// does part (pw,pt) align with host restriction (rw, host-adjacency per gap)
// under rotation/reflection/relabel?
bool aligns(const Part& p, const std::vector<int>& rw, const std::vector<char>& adj) {
  int m = p.m();
  if (static_cast<int>(rw.size()) != m) return false;
  for (int refl = 0; refl < 2; ++refl) {
    std::vector<int> w2(m);
    std::vector<char> a2(m);
    for (int i = 0; i < m; ++i) {
      w2[i] = rw[refl ? m - 1 - i : i];
      a2[i] = refl ? adj[((m - 2 - i) % m + m) % m] : adj[i];
    }
    for (int r = 0; r < m; ++r) {
      std::map<int, int> fmap;
      bool ok = true;
      for (int t = 0; t < m && ok; ++t) {
        int x = p.word[t], y = w2[(r + t) % m];
        auto [it, fresh] = fmap.try_emplace(x, y);
        if (it->second != y) ok = false;
        if (ok && p.thick[t] && !a2[(r + t) % m]) ok = false;
      }
      if (ok) return true;
    }
  }
  return false;
}

void host_restriction(const Word& word, const std::set<int>& chords,
                      std::vector<int>& rw, std::vector<char>& adj) {
  int L = static_cast<int>(word.size());
  std::vector<int> keep;
  for (int i = 0; i < L; ++i)
    if (chords.count(word[i])) keep.push_back(i);
  rw.clear();
  adj.clear();
  int mk = static_cast<int>(keep.size());
  for (int a = 0; a < mk; ++a) {
    rw.push_back(word[keep[a]]);
    adj.push_back((keep[a] + 1) % L == keep[(a + 1) % mk]);
  }
}

}  // namespace

bool match_pattern(const Word& word, const Part& part) {
  int k = part.k();
  std::set<int> labels(word.begin(), word.end());
  std::vector<int> chords(labels.begin(), labels.end());
  int n = static_cast<int>(chords.size());
  if (n < k) return false;
  std::vector<int> sel(k);
  std::function<bool(int, int)> rec = [&](int idx, int from) {
    if (idx == k) {
      std::set<int> sub(sel.begin(), sel.end());
      std::vector<int> rw;
      std::vector<char> adj;
      host_restriction(word, sub, rw, adj);
      return aligns(part, rw, adj);
    }
    for (int i = from; i < n; ++i) {
      sel[idx] = chords[i];
      if (rec(idx + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

bool match_pattern_oracle(const Word& word, const Part& part) {
  // backtracking over injective assignments part chord -> host chord, then
  // direct verification of the cyclic order and thick adjacencies
  int k = part.k();
  std::set<int> labels(word.begin(), word.end());
  std::vector<int> chords(labels.begin(), labels.end());
  if (static_cast<int>(chords.size()) < k) return false;
  std::vector<int> perm(chords.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  // try every injective map: permutations of k-subsets
  std::vector<int> assign(k, -1);
  std::vector<char> used(chords.size(), 0);
  std::function<bool(int)> rec = [&](int idx) {
    if (idx == k) {
      // relabel the part with the assignment and compare against the host
      std::set<int> image;
      for (int a : assign) image.insert(a);
      std::vector<int> rw;
      std::vector<char> adj;
      host_restriction(word, image, rw, adj);
      int m = part.m();
      if (static_cast<int>(rw.size()) != m) return false;
      // part chords are labeled 0..k-1 by first appearance after canon; map them
      std::vector<int> pw(m);
      for (int i = 0; i < m; ++i) pw[i] = assign[part.word[i]];
      for (int refl = 0; refl < 2; ++refl) {
        std::vector<int> w2(m);
        std::vector<char> t2(m);
        for (int i = 0; i < m; ++i) {
          w2[i] = pw[refl ? m - 1 - i : i];
          t2[i] = refl ? part.thick[((m - 2 - i) % m + m) % m] : part.thick[i];
        }
        for (int r = 0; r < m; ++r) {
          bool ok = true;
          for (int t = 0; t < m && ok; ++t) {
            if (w2[(r + t) % m] != rw[t]) ok = false;
            if (ok && t2[(r + t) % m] && !adj[t]) ok = false;
          }
          if (ok) return true;
        }
      }
      return false;
    }
    for (size_t i = 0; i < chords.size(); ++i) {
      if (used[i]) continue;
      used[i] = 1;
      assign[idx] = chords[i];
      if (rec(idx + 1)) return true;
      used[i] = 0;
    }
    return false;
  };
  return rec(0);
}

std::set<int> u_membership(const Word& word, const Signs& signs) {
  std::set<int> out;
  struct Fc {
    std::set<int> corners, edges;
  };
  auto collect = [&](int k) {
    std::vector<Fc> v;
    int L = static_cast<int>(word.size());
    for (auto& f : gon_faces(word, signs, k)) {
      Fc fc;
      for (int d : f.darts) {
        fc.corners.insert(word[dart_pos(d, L)]);
        fc.edges.insert(dart_edge(d));
      }
      v.push_back(std::move(fc));
    }
    return v;
  };
  auto inter = [](const std::set<int>& a, const std::set<int>& b) {
    for (int x : a)
      if (b.count(x)) return true;
    return false;
  };
  auto b = collect(2);
  auto t = collect(3);
  auto q = collect(4);
  if (!b.empty()) out.insert(1);
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = i + 1; j < t.size(); ++j) {
      if (inter(t[i].edges, t[j].edges))
        out.insert(2);
      else if (inter(t[i].corners, t[j].corners))
        out.insert(3);
    }
  for (auto& f1 : t)
    for (auto& f2 : q) {
      if (inter(f1.edges, f2.edges))
        out.insert(4);
      else if (inter(f1.corners, f2.corners))
        out.insert(5);
    }
  return out;
}

}  // namespace curves
