#include "conway/moves.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace conway {

Permutation ElementaryMove(const Design& d, Point x, Point y) {
  if (x >= d.n() || y >= d.n()) throw Error("move endpoint out of range");
  if (x == y) return Permutation(d.n());
  auto through = d.LineIndicesThrough(x, y);
  if (through.empty()) {
    throw Error("elementary move [" + std::to_string(x + 1) + "," +
                std::to_string(y + 1) + "] needs collinear points");
  }
  std::vector<Point> images(d.n());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<Point>(i);
  std::swap(images[x], images[y]);
  for (std::size_t idx : through) {
    Point rest[2];
    std::size_t k = 0;
    for (Point p : d.lines()[idx]) {
      if (p != x && p != y) rest[k++] = p;
    }
    std::swap(images[rest[0]], images[rest[1]]);
  }
  return Permutation::FromImages(std::move(images));
}

Permutation EvaluateMoves(const Design& d, const MoveSequence& sequence) {
  Permutation product(d.n());
  const auto& w = sequence.waypoints;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] >= d.n() || w[i + 1] >= d.n()) {
      throw Error("waypoint out of range at step " + std::to_string(i));
    }
    if (w[i] != w[i + 1] && !d.IsCollinear(w[i], w[i + 1])) {
      throw Error("waypoints " + std::to_string(w[i] + 1) + " and " +
                  std::to_string(w[i + 1] + 1) + " at step " + std::to_string(i) +
                  " are not collinear");
    }
    product = product * ElementaryMove(d, w[i], w[i + 1]);
  }
  return product;
}

bool IsCollinear(const Design& d, Point x, Point y) { return d.IsCollinear(x, y); }

Point HoleIndexToPoint(Point index, Point hole) {
  return index < hole ? index : static_cast<Point>(index + 1);
}

Permutation RestrictAwayFrom(const Permutation& g, Point hole) {
  if (hole >= g.degree() || g[hole] != hole) {
    throw Error("restriction point must be fixed");
  }
  std::vector<Point> images;
  images.reserve(g.degree() - 1);
  for (std::size_t p = 0; p < g.degree(); ++p) {
    if (p == hole) continue;
    Point image = g[p];
    images.push_back(image < hole ? image : static_cast<Point>(image - 1));
  }
  return Permutation::FromImages(std::move(images));
}

std::vector<Permutation> HoleStabilizerGenerators(const Design& d, Point hole) {
  if (hole >= d.n()) throw Error("hole point out of range");
  const std::size_t n = d.n();
  // Cache [hole, a] and [a, b]: each generator is [hole,a][a,b][b,hole].
  std::vector<std::optional<Permutation>> from_hole(n);
  for (Point a = 0; a < n; ++a) {
    if (a != hole && d.IsCollinear(hole, a)) from_hole[a] = ElementaryMove(d, hole, a);
  }
  std::vector<Permutation> gens;
  for (Point a = 0; a < n; ++a) {
    if (a == hole || !from_hole[a]) continue;
    for (Point b = 0; b < n; ++b) {
      if (b == hole || b == a || !from_hole[b] || !d.IsCollinear(a, b)) continue;
      // [b, hole] = [hole, b] since elementary moves are symmetric.
      Permutation g = *from_hole[a] * ElementaryMove(d, a, b) * *from_hole[b];
      if (!g.IsIdentity()) gens.push_back(RestrictAwayFrom(g, hole));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

Group HoleStabilizer(const Design& d, Point hole) {
  return Group(d.n() - 1, HoleStabilizerGenerators(d, hole));
}

}  // namespace conway
