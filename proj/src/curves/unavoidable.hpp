#pragma once
// The case-analysis engine: complete two-face seed configurations into full
// "parts" (chord words with thick gaps), re-derive the 21-part set for
// reductivity-4 curves, and match parts against whole curves.

#include <string>
#include <vector>

#include "atlas.hpp"

namespace curves {

enum class Share { Crossing, Edge };

// restriction of a part to a chord subset (not canonical).  A restricted gap
// is thick iff the two passages are adjacent in the full part and that gap is
// thick.
Part restrict_part(const Part& p, const std::set<int>& chords);

// All canonical parts built by gluing `gon` onto scaffold `tri` so they share
// one crossing or one edge, connecting everything else outside:
// non-shared gon passages are distributed over the scaffold's plain gaps in
// all orders, then filtered so both faces' restrictions still carry their
// configs.
std::set<Part> completions(const Part& tri, const Part& gon, Share share);
// same, but one result set per share choice (which crossing / which edge pair
// is identified) — used to check the proof's "no suitable connection" sub-cases
std::vector<std::set<Part>> completion_subcases(const Part& tri, const Part& gon,
                                                Share share);

struct Seed {
  std::string name;
  Share share = Share::Crossing;
  // type constraints: atlas labels allowed for each of the two faces
  std::vector<std::string> face1_types, face2_types;
};

// seed file: lines "name crossing|edge <k1>:<lab>[,<lab>...] <k2>:<lab>[,...]"
std::vector<Seed> load_seeds(const std::string& path,
                             const std::vector<AtlasEntry>& atlas);

struct DerivedParts {
  std::vector<std::pair<std::string, std::vector<Part>>> by_seed;  // seed order
  std::vector<Part> all;  // union, sorted canonically
};

// derive the full high-reductivity part set from the seeds; throws on a count
// mismatch (diagnoses a bad atlas binding or seed transcription)
DerivedParts derive_r4_parts(const std::vector<AtlasEntry>& atlas,
                             const std::vector<Seed>& seeds);

// does the host contain the part?  True iff some chord subset of the host
// restricts to the part's cyclic word (up to rotation/reflection/relabel) with
// every thick gap of the part landing on host-adjacent passages (a real edge).
bool match_pattern(const Word& word, const Part& part);
// independent oracle: backtracking over injective chord assignments
bool match_pattern_oracle(const Word& word, const Part& part);

// face-level membership in the five-part unavoidable set U:
// 1 bigon; 2 two trigons sharing an edge; 3 two trigons sharing a crossing;
// 4 trigon+4-gon sharing an edge; 5 trigon+4-gon sharing a crossing.
// Faces are counted only when their corner crossings are pairwise distinct.
std::set<int> u_membership(const Word& word, const Signs& signs);

}  // namespace curves
