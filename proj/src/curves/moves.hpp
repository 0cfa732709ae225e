#pragma once
// Half-twisted splice (delete a crossing, reverse one strand between its
// visits), its inverse I (insert a crossing), and reductivity.
//
// Direction note.  The reducing move counted by reductivity acts AT a crossing:
// it removes the crossing by the smoothing that keeps a single closed curve
// (the word-level delete-and-reverse splice).  Its inverse inserts one new
// crossing and is what `enumerate_imoves`/`apply_imove` produce; the two
// round-trip exactly.  This orientation is pinned by the torus-projection
// reductivity anchors (see tests): the opposite orientation either trivializes
// r (kink insertions reach a reducible curve in one step from everywhere) or
// makes the anchors unreachable.

#include <optional>
#include <vector>

#include "core.hpp"

namespace curves {

// splice at crossing `label`: n-1 crossings (possibly the empty curve).
PlaneCurve half_twisted_splice(const PlaneCurve& c, int label);
// label-preserving variant: surviving crossings keep their labels.
std::pair<Word, std::map<int, int>> splice_keep_labels(const PlaneCurve& c, int label);

struct IMove {
  int edge_a = 0;       // first cut edge
  int edge_b = 0;       // second cut edge (== edge_a: both cuts on one edge)
  int variant = 0;      // index into the valid wirings at this site
  auto operator<=>(const IMove&) const = default;
};

// All valid inverse-splice insertions: every curve P' with
// half_twisted_splice(P', x) == P for some crossing x of P'.
std::vector<std::pair<IMove, PlaneCurve>> enumerate_imoves(const PlaneCurve& c);
std::optional<PlaneCurve> apply_imove(const PlaneCurve& c, const IMove& m);

struct ReductivityCertificate {
  int r = -1;                          // -1: not reached within max_depth
  std::vector<int> witness;            // crossing labels spliced, in order
  std::vector<long long> depth_counts; // canonical classes explored per depth
  bool exhausted_below_r = true;
};

ReductivityCertificate reductivity(const PlaneCurve& c, int max_depth = 4);

}  // namespace curves
