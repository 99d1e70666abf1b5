#pragma once

#include <span>
#include <vector>

#include "conway/design.hpp"
#include "conway/perm_group.hpp"
#include "conway/permutation.hpp"

namespace conway {

// Waypoints [a0, a1, ..., ar]; consecutive waypoints must be equal or
// collinear. Closed when a0 == ar.
struct MoveSequence {
  std::vector<Point> waypoints;

  bool closed() const {
    return !waypoints.empty() && waypoints.front() == waypoints.back();
  }
};

// [x, y]: swaps x and y and, for each line {x, y, p, q}, swaps p and q.
// [x, x] is the identity. Acts on all n points. Throws Error when x != y are
// not collinear.
Permutation ElementaryMove(const Design& d, Point x, Point y);

// [a0, a1][a1, a2]...[a_{r-1}, a_r], multiplied left to right. The error for
// a non-collinear step names its index.
Permutation EvaluateMoves(const Design& d, const MoveSequence& sequence);

bool IsCollinear(const Design& d, Point x, Point y);

// Drops `hole` and closes the gap: point p maps to p for p < hole and to p-1
// for p > hole. g must fix `hole`.
Permutation RestrictAwayFrom(const Permutation& g, Point hole);
// Inverse of the re-indexing used by RestrictAwayFrom.
Point HoleIndexToPoint(Point index, Point hole);

// The generators [hole, a, b, hole] for distinct a, b != hole, restricted to
// the n-1 points other than `hole`, with duplicates and identities removed.
// Sorted.
std::vector<Permutation> HoleStabilizerGenerators(const Design& d, Point hole);

// The group generated by HoleStabilizerGenerators, of degree n-1.
Group HoleStabilizer(const Design& d, Point hole);

}  // namespace conway
