#pragma once
// Curve generators: standard torus-knot projections and exhaustive enumeration
// of spherical curves by crossing number.

#include <map>

#include "core.hpp"

namespace curves {

// standard projection of the (p,q) torus knot: closure of the braid
// (s1 s2 ... s_{p-1})^q, p,q >= 2, gcd(p,q) = 1.  q(p-1) crossings, genus 0.
PlaneCurve torus_projection(int p, int q);

// all spherical curves with 1..max_n crossings, one canonical representative
// per equivalence class, grouped by crossing number.  Computed as the closure
// of the curl under crossing insertion (every curve with n >= 2 crossings is an
// insertion child of its splice at any crossing).
// Expected sizes: 1, 2, 6, 19, 76, 376, 2194, ...
std::map<int, std::vector<PlaneCurve>> enumerate_curves(int max_n);

// all distinct insertion children of c (each with one extra crossing)
std::vector<PlaneCurve> insertion_children(const PlaneCurve& c);

}  // namespace curves
