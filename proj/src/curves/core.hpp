#pragma once
// Spherical curves as signed Gauss codes compiled to combinatorial maps.
//
// Conventions (fixed here, used everywhere):
//  - word: length 2n, labels 0..n-1, each exactly twice; positions live on a
//    circle, edge e_p runs from position p to p+1 (mod 2n).
//  - darts: 2p = tail of e_p (at position p), 2p+1 = head (at position p+1).
//    At passage position p: in-dart = 2*((p-1) mod L)+1, out-dart = 2p.
//  - a crossing with passages i<j and sign s has CCW rotation cycle
//      s=+1: (in_i, in_j, out_i, out_j)    s=-1: (in_i, out_j, out_i, in_j)
//    i.e. s = +1 iff sigma(in_i) = in_j (determinant of the tangent frame).
//  - faces are orbits of phi(d) = sigma(alpha(d)), alpha(d) = d^1; the curve is
//    spherical (genus 0) iff #faces = n+2.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace curves {

using Word = std::vector<int>;
using Signs = std::vector<int>;  // indexed by label, values +1/-1

struct GaussWord {
  Word word;          // labels normalized 0..n-1 by first appearance
  Signs signs;        // empty if unsigned
  bool is_signed() const { return !signs.empty(); }
  int n() const { return static_cast<int>(word.size()) / 2; }
};

// A canonical code is a signed word in canonical form; we store it flat:
// for each position the pair (label, sign) with labels 1-based in the text form.
using CanonicalCode = std::vector<std::pair<int, int>>;

struct PlaneCurve {
  Word word;
  Signs signs;
  int n() const { return static_cast<int>(word.size()) / 2; }
  int L() const { return static_cast<int>(word.size()); }
  bool operator==(const PlaneCurve&) const = default;
};

struct Face {
  std::vector<int> darts;  // phi orbit, in order
  int size() const { return static_cast<int>(darts.size()); }
};

using FaceCensus = std::map<int, int>;  // face size -> count

// ---- parsing / formatting ----

// "1+ 2+ 1+ 2+" or "1 2 1 2"; throws std::runtime_error on malformed input.
GaussWord parse_gauss(const std::string& text);
std::string format_code(const Word& word, const Signs& signs);  // "1- 2+ ..."
std::string format_code(const CanonicalCode& code);

// ---- map structure ----

// per label: (first position, second position)
std::vector<std::pair<int, int>> positions_of(const Word& word);

// rotation permutation sigma over darts 0..2L-1
std::vector<int> build_map(const Word& word, const Signs& signs);
std::vector<Face> faces(const Word& word, const Signs& signs);
FaceCensus face_census(const std::vector<Face>& fs);
bool genus0(const Word& word, const Signs& signs);
bool check_gon_formula(const FaceCensus& census);

// position on the circle at which dart d is incident
inline int dart_pos(int d, int L) { return d % 2 == 0 ? d / 2 : (d / 2 + 1) % L; }
inline int dart_edge(int d) { return d / 2; }

// ---- canonical form ----

CanonicalCode canonicalize(const Word& word, const Signs& signs);
inline CanonicalCode canonicalize(const PlaneCurve& c) { return canonicalize(c.word, c.signs); }
PlaneCurve curve_from_code(const CanonicalCode& code);

// ---- realizability ----

int interlace_count(const Word& word, int label);
bool parity_ok(const Word& word);
// all genus-0 embeddings of the (unsigned) word, deduplicated canonically
std::vector<PlaneCurve> realize(const Word& word);
// signed variant: the unique embedding if genus-0
std::optional<PlaneCurve> realize_signed(const GaussWord& gw);

// ---- structural predicates ----

std::set<int> reducible_crossings(const Word& word);
inline bool is_reduced(const Word& word) { return reducible_crossings(word).empty(); }
bool is_prime(const Word& word);

// connected sum: insert q into p's edge site_p, cutting q's edge site_q.
PlaneCurve connected_sum(const PlaneCurve& p, const PlaneCurve& q, int edge_p, int edge_q);

// relabel by first appearance
PlaneCurve normalize_labels(const Word& word, const std::map<int, int>& signs_by_label);

}  // namespace curves
