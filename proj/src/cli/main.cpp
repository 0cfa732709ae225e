#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "curves/atlas.hpp"
#include "curves/core.hpp"
#include "curves/generators.hpp"
#include "curves/moves.hpp"
#include "curves/unavoidable.hpp"

using json = nlohmann::json;
using namespace curves;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceLimit = 3;
constexpr const char* kEngineVersion = "1";

std::string data_dir() {
  if (const char* d = std::getenv("CURVES_DATA_DIR")) return d;
  return "data";
}

struct Output {
  bool json_lines = false;
  void emit(const json& j, const std::string& human) {
    if (json_lines)
      std::cout << j.dump() << "\n";
    else
      std::cout << human << "\n";
  }
};

// literal gauss code, "torus:p,q", or "@file" (first non-comment line)
std::vector<PlaneCurve> parse_curve_input(const std::string& in) {
  if (in.rfind("torus:", 0) == 0) {
    int p, q;
    char comma;
    std::istringstream s(in.substr(6));
    if (!(s >> p >> comma >> q) || comma != ',')
      throw std::runtime_error("bad torus input:" + in);
    return {torus_projection(p, q)};
  }
  std::string text = in;
  if (!in.empty() && in[0] == '@') {
    std::ifstream f(in.substr(1));
    if (!f) throw std::runtime_error("cannot open " + in.substr(1));
    std::string line;
    text.clear();
    while (std::getline(f, line))
      if (!line.empty() && line[0] != '#') {
        text = line;
        break;
      }
  }
  auto gw = parse_gauss(text);
  if (gw.is_signed()) {
    auto c = realize_signed(gw);
    if (!c) throw std::runtime_error("signed code is not spherical (genus != 0)");
    return {*c};
  }
  auto rs = realize(gw.word);
  if (rs.empty()) throw std::runtime_error("word has no spherical realization");
  return rs;
}

std::string census_str(const FaceCensus& fc) {
  std::string s = "{";
  for (auto& [k, c] : fc) s += std::to_string(k) + ":" + std::to_string(c) + ",";
  if (s.size() > 1) s.pop_back();
  return s + "}";
}

json census_json(const FaceCensus& fc) {
  json j = json::object();
  for (auto& [k, c] : fc) j[std::to_string(k)] = c;
  return j;
}

struct RCache {
  std::filesystem::path path;
  std::map<std::string, int> entries;
  bool loaded = false;
  void load() {
    if (loaded) return;
    loaded = true;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
      auto t1 = line.find('\t');
      auto t2 = line.find('\t', t1 + 1);
      if (t1 == std::string::npos || t2 == std::string::npos) {
        std::cerr << "warning: corrupt cache line skipped\n";
        continue;
      }
      if (line.substr(t2 + 1) != kEngineVersion) continue;
      try {
        entries[line.substr(0, t1)] = std::stoi(line.substr(t1 + 1, t2 - t1 - 1));
      } catch (...) {
        std::cerr << "warning: corrupt cache line skipped\n";
      }
    }
  }
  void store(const std::string& code, int r) {
    load();
    if (entries.count(code)) return;
    entries[code] = r;
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::app);
    out << code << "\t" << r << "\t" << kEngineVersion << "\n";
  }
};

RCache open_cache(const std::string& dir) {
  std::string d = dir;
  if (d.empty()) {
    if (const char* e = std::getenv("CURVES_CACHE_DIR")) d = e;
  }
  if (d.empty()) d = ".curves-cache";
  return RCache{std::filesystem::path(d) / "reductivity.tsv"};
}

int cached_r(RCache& cache, const PlaneCurve& c, int max_depth) {
  auto code = format_code(canonicalize(c));
  cache.load();
  auto it = cache.entries.find(code);
  if (it != cache.entries.end()) return it->second;
  auto cert = reductivity(c, max_depth);
  if (cert.r >= 0) cache.store(code, cert.r);
  return cert.r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical curve toolkit: Gauss codes, faces, splices, reductivity"};
  app.require_subcommand(1);
  Output out;
  std::string atlas_path = data_dir() + "/atlas.txt";
  std::string seeds_path = data_dir() + "/seeds.txt";
  std::string cache_dir;
  app.add_flag("--json", out.json_lines, "json-lines output");
  app.add_option("--atlas", atlas_path, "type atlas file");
  app.add_option("--seeds", seeds_path, "derivation seed file");
  app.add_option("--cache-dir", cache_dir, "reductivity cache directory");

  std::string curve_in, file_in, part_in, set_name = "S", out_path;
  int max_depth = 4, max_n = 6;
  bool reduced_only = false, prime_only = false;

  auto* analyze = app.add_subcommand("analyze", "structural report for a curve");
  analyze->add_option("curve", curve_in)->required();

  auto* facescmd = app.add_subcommand("faces", "face list with atlas classification");
  facescmd->add_option("curve", curve_in)->required();

  auto* red = app.add_subcommand("reductivity", "reductivity certificate");
  red->add_option("curve", curve_in)->required();
  red->add_option("--max-depth", max_depth);

  auto* enumc = app.add_subcommand("enumerate", "all spherical curves up to n crossings");
  enumc->add_option("--max-crossings", max_n)->required();
  enumc->add_flag("--reduced-only", reduced_only);
  enumc->add_flag("--prime-only", prime_only);

  auto* ingest = app.add_subcommand("ingest", "parse and canonicalize a curve table");
  ingest->add_option("file", file_in)->required();

  auto* derive = app.add_subcommand("derive-parts", "re-derive the 21-part set");
  derive->add_option("--out", out_path);

  auto* match = app.add_subcommand("match", "match a part against a curve");
  match->add_option("curve", curve_in)->required();
  match->add_option("part", part_in, "config string like 1.1-2.2-3.3-")->required();

  auto* verify = app.add_subcommand("verify-set", "unavoidability check over an enumeration");
  verify->add_option("--set", set_name, "S | T | U | R4");
  verify->add_option("--max-crossings", max_n);

  auto* search = app.add_subcommand("search-r4", "search for a reductivity-4 curve");
  search->add_option("--max-crossings", max_n);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      auto cs = parse_curve_input(curve_in);
      for (auto& c : cs) {
        auto fc = face_census(faces(c.word, c.signs));
        auto rc = reducible_crossings(c.word);
        json j{{"canonical", format_code(canonicalize(c))},
               {"n", c.n()},
               {"census", census_json(fc)},
               {"reduced", rc.empty()},
               {"reducible_crossings", json::array()},
               {"formula_ok", check_gon_formula(fc)},
               {"prime", is_prime(c.word)}};
        for (int x : rc) j["reducible_crossings"].push_back(x + 1);
        std::string rcs;
        for (int x : rc) rcs += std::to_string(x + 1) + " ";
        out.emit(j, "canonical: " + format_code(canonicalize(c)) +
                        "\n  n=" + std::to_string(c.n()) + " census=" + census_str(fc) +
                        " reduced=" + (rc.empty() ? "true" : "false") +
                        (rc.empty() ? "" : " reducible={" + rcs + "}") +
                        " formula_ok=" + (check_gon_formula(fc) ? "true" : "false") +
                        " prime=" + (is_prime(c.word) ? "true" : "false"));
      }
      if (cs.size() > 1 && !out.json_lines)
        std::cout << "(" << cs.size() << " distinct embeddings)\n";
    } else if (*facescmd) {
      auto atlas = load_atlas(atlas_path);
      auto cs = parse_curve_input(curve_in);
      for (auto& r : classify_faces(cs[0].word, cs[0].signs, atlas)) {
        json j{{"size", r.size},
               {"label", r.label},
               {"config", r.config.word.empty() ? "" : config_str(r.config)}};
        out.emit(j, std::to_string(r.size) + "-gon  " +
                        (r.config.word.empty() ? "(repeated corner)" : config_str(r.config)) +
                        (r.label.empty() ? "" : "  type " + r.label));
      }
    } else if (*red) {
      auto c = parse_curve_input(curve_in)[0];
      auto cache = open_cache(cache_dir);
      auto cert = reductivity(c, max_depth);
      if (cert.r < 0) {
        out.emit(json{{"r", nullptr}, {"max_depth", max_depth}},
                 "r > " + std::to_string(max_depth) + " (not reached)");
        return kExitResourceLimit;
      }
      cache.store(format_code(canonicalize(c)), cert.r);
      json j{{"canonical", format_code(canonicalize(c))},
             {"r", cert.r},
             {"witness", cert.witness},
             {"depth_counts", cert.depth_counts}};
      std::string w;
      for (int x : cert.witness) w += std::to_string(x) + " ";
      std::string d;
      for (auto x : cert.depth_counts) d += std::to_string(x) + " ";
      out.emit(j, "r = " + std::to_string(cert.r) + "  witness: [ " + w +
                      "]  classes/depth: [ " + d + "]");
    } else if (*enumc) {
      auto levels = enumerate_curves(max_n);
      for (auto& [n, cs] : levels)
        for (auto& c : cs) {
          if (reduced_only && !is_reduced(c.word)) continue;
          if (prime_only && !is_prime(c.word)) continue;
          auto code = format_code(canonicalize(c));
          out.emit(json{{"n", n}, {"canonical", code}}, code);
        }
    } else if (*ingest) {
      std::ifstream in(file_in);
      if (!in) throw std::runtime_error("cannot open " + file_in);
      std::string line;
      int lineno = 0;
      std::map<std::string, int> first;
      bool had_error = false;
      while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        try {
          auto cs = parse_curve_input(line);
          auto code = format_code(canonicalize(cs[0]));
          auto [it, fresh] = first.try_emplace(code, lineno);
          if (fresh)
            out.emit(json{{"line", lineno}, {"canonical", code}}, code);
          else
            out.emit(json{{"line", lineno}, {"duplicate_of_line", it->second}},
                     "line " + std::to_string(lineno) + ": duplicate of line " +
                         std::to_string(it->second));
        } catch (const std::exception& e) {
          had_error = true;
          out.emit(json{{"line", lineno}, {"error", e.what()}},
                   "line " + std::to_string(lineno) + ": error: " + e.what());
        }
      }
      if (had_error) return kExitInputError;
    } else if (*derive) {
      auto atlas = load_atlas(atlas_path);
      auto seeds = load_seeds(seeds_path, atlas);
      auto parts = derive_r4_parts(atlas, seeds);
      std::ostringstream golden;
      for (auto& [name, ps] : parts.by_seed)
        for (auto& p : ps) golden << name << " " << config_str(p) << "\n";
      if (parts.all.size() != 21) {
        std::cerr << "derivation mismatch: " << parts.all.size() << " parts (want 21)\n";
        return kExitCounterexample;
      }
      if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << golden.str();
      }
      std::string bk;
      for (auto& [name, ps] : parts.by_seed)
        bk += name + ":" + std::to_string(ps.size()) + " ";
      out.emit(json{{"parts", parts.all.size()}, {"breakdown", bk}},
               std::to_string(parts.all.size()) + " parts (" + bk + ")");
      if (out_path.empty() && !out.json_lines) std::cout << golden.str();
    } else if (*match) {
      auto c = parse_curve_input(curve_in)[0];
      auto part = canon_config(config_parse(part_in));
      bool m = match_pattern(c.word, part);
      out.emit(json{{"match", m}}, m ? "match" : "no match");
    } else if (*verify) {
      auto atlas = load_atlas(atlas_path);
      auto levels = enumerate_curves(max_n);
      auto cache = open_cache(cache_dir);
      std::vector<std::string> counterexamples;
      std::optional<DerivedParts> r4;
      if (set_name == "R4")
        r4 = derive_r4_parts(atlas, load_seeds(seeds_path, atlas));
      for (auto& [n, cs] : levels)
        for (auto& c : cs) {
          if (set_name == "S") {
            if (!is_reduced(c.word)) continue;
            auto fc = face_census(faces(c.word, c.signs));
            if (!fc.count(2) && !fc.count(3))
              counterexamples.push_back(format_code(canonicalize(c)));
          } else if (set_name == "T") {
            int r = cached_r(cache, c, 4);
            if (r < 3) continue;
            auto fc = face_census(faces(c.word, c.signs));
            if (fc.count(3) == 0 || fc.at(3) < 8)
              counterexamples.push_back(format_code(canonicalize(c)));
          } else if (set_name == "U") {
            if (!is_reduced(c.word)) continue;
            if (u_membership(c.word, c.signs).empty())
              counterexamples.push_back(format_code(canonicalize(c)));
          } else if (set_name == "R4") {
            int r = cached_r(cache, c, 4);
            if (r != 4) continue;
            bool any = false;
            for (auto& p : r4->all)
              if (match_pattern(c.word, p)) {
                any = true;
                break;
              }
            if (!any) counterexamples.push_back(format_code(canonicalize(c)));
          } else {
            throw std::runtime_error("unknown set " + set_name);
          }
        }
      json j{{"set", set_name},
             {"max_crossings", max_n},
             {"counterexamples", counterexamples}};
      out.emit(j, set_name + " <= " + std::to_string(max_n) + ": " +
                      std::to_string(counterexamples.size()) + " counterexamples");
      if (!counterexamples.empty()) return kExitCounterexample;
    } else if (*search) {
      auto atlas = load_atlas(atlas_path);
      auto parts = derive_r4_parts(atlas, load_seeds(seeds_path, atlas));
      auto cache = open_cache(cache_dir);
      auto levels = enumerate_curves(max_n);
      int survivors = 0, found = 0;
      for (auto& [n, cs] : levels)
        for (auto& c : cs) {
          if (!is_reduced(c.word) || !is_prime(c.word)) continue;
          auto bound = reductivity_upper_bound(c.word, c.signs, atlas);
          if (bound && *bound <= 3) continue;  // cannot be r = 4
          ++survivors;
          int r = cached_r(cache, c, 4);
          std::vector<std::string> contains;
          for (size_t i = 0; i < parts.all.size(); ++i)
            if (match_pattern(c.word, parts.all[i]))
              contains.push_back(std::to_string(i + 1));
          json j{{"canonical", format_code(canonicalize(c))},
                 {"r", r},
                 {"parts", contains}};
          std::string ps;
          for (auto& s : contains) ps += s + " ";
          out.emit(j, format_code(canonicalize(c)) + "  r=" + std::to_string(r) +
                          "  parts: [ " + ps + "]");
          if (r >= 4) ++found;
        }
      out.emit(json{{"survivors", survivors}, {"r4_found", found}},
               "survivors past fast filter: " + std::to_string(survivors) +
                   "; r=4 curves: " + std::to_string(found));
      if (found) return kExitCounterexample;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
