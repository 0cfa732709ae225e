#pragma once
// Gon configurations: the restriction of a curve to the corner crossings of a
// face, recorded as a cyclic chord word with "thick" gaps at the face's
// boundary edges, canonical up to rotation x reflection x relabel.  The same
// (word, thick) shape doubles as the generic "part" used by the unavoidable-set
// engine.

#include <string>
#include <vector>

#include "core.hpp"

namespace curves {

struct Part {
  std::vector<int> word;    // chord ids, cyclic; each id appears twice
  std::vector<char> thick;  // thick flag for the gap after each position
  auto operator<=>(const Part&) const = default;
  int m() const { return static_cast<int>(word.size()); }
  int k() const { return m() / 2; }
};

// canonical form over rotation x reflection x relabel-by-first-appearance.
// Under reflection the gap after new position i is the old gap (m-2-i) mod m.
Part canon_config(const Part& p);

// "1.2-1.3-2.3-": chord label (1-based) then '-' if the following gap is thick,
// '.' if plain.
std::string config_str(const Part& p);
Part config_parse(const std::string& s);  // inverse of config_str

// orientation class of a face: the cyclic word of traversal bits (dart parity:
// 0 = along the curve, 1 = against) up to rotation, reflection, global flip.
std::vector<int> orient_class(const std::vector<int>& bits);

// faces of size k whose k corner crossings are pairwise distinct
std::vector<Face> gon_faces(const Word& word, const Signs& signs, int k);

struct GonConfig {
  Part config;               // canonical
  std::vector<int> orient;   // canonical orientation class
};
GonConfig config_of(const Word& word, const Signs& signs, const Face& face);
std::vector<GonConfig> curve_configs(const Word& word, const Signs& signs, int k);

// a config is coherent when every boundary edge is traversed the same way
// around the face (all orientation bits equal)
inline bool coherent(const std::vector<int>& orient) {
  for (size_t i = 1; i < orient.size(); ++i)
    if (orient[i] != orient[0]) return false;
  return true;
}

struct AtlasEntry {
  int k = 0;           // 2 bigon, 3 trigon, 4 four-gon
  std::string name;    // e.g. "A", "2c"
  Part config;
};

// load "k name config" lines; '#' comments and blank lines ignored
std::vector<AtlasEntry> load_atlas(const std::string& path);

struct FaceReport {
  int size = 0;
  Part config;              // empty if the face repeats a corner crossing
  std::vector<int> orient;
  std::string label;        // atlas label, or "" if unclassified
};
std::vector<FaceReport> classify_faces(const Word& word, const Signs& signs,
                                       const std::vector<AtlasEntry>& atlas);

// best bound implied by the local rules:
//   incoherent bigon => 1; coherent bigon => 2; trigon A => 2; B, C => 3;
//   4-gon 2a/2b/3a/4a => 3.  nullopt when no rule fires.
std::optional<int> reductivity_upper_bound(const Word& word, const Signs& signs,
                                           const std::vector<AtlasEntry>& atlas);

// derive the full catalog of k-gon configurations by brute force over all
// ways k chords and k thick gaps can close up on a circle, filtered by the
// two local consistency conditions a face on the sphere must satisfy:
//  (a) the thick gaps form a single k-cycle through all k corner chords, and
//  (b) at each corner the two incident face edges attach at the two DIFFERENT
//      passages of the chord (the strands alternate around a crossing, so
//      every corner quadrant uses one dart of each passage).
// The face-walk orientation bits are forced by the configuration; the result
// is exactly 2 bigons, 4 trigons, 13 4-gons.
std::map<int, std::vector<GonConfig>> derive_catalog(int max_k = 4);

}  // namespace curves
