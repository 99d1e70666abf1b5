#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "conway/permutation.hpp"

namespace conway {

using GroupOrder = boost::multiprecision::cpp_int;

GroupOrder Factorial(std::size_t m);

// A G-invariant partition into blocks of equal size, 1 < size < degree.
struct BlockSystem {
  std::vector<std::vector<Point>> blocks;  // each sorted; ordered by minimum

  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
};

class StabilizerChain;

// A permutation group given by generators. The base and strong generating set
// is built once, in the constructor, with deterministic Schreier-Sims (base
// points: smallest point moved by the new strong generator). Afterwards the
// group is read-only and safe to share between threads.
class Group {
 public:
  // Trivial group of the given degree.
  explicit Group(std::size_t degree);
  // Throws Error if a generator's degree differs from `degree`.
  Group(std::size_t degree, std::vector<Permutation> generators);
  // Degree taken from the generators; the list must be nonempty.
  static Group FromGenerators(std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  GroupOrder Order() const;
  bool Contains(const Permutation& g) const;

  const std::vector<Point>& Base() const;
  std::vector<std::size_t> BasicOrbitSizes() const;
  std::vector<Permutation> StrongGenerators() const;

  // Orbits ordered by smallest point, each sorted.
  std::vector<std::vector<Point>> Orbits() const;
  bool IsTransitive() const;
  // Every unordered pair {i, j} is swapped by some element.
  bool IsGenerouslyTransitive() const;

  // Finest G-invariant partition in which a and b share a block. nullopt when
  // that partition is the single block of all points. Requires transitivity.
  std::optional<BlockSystem> MinimalBlockSystem(Point a, Point b) const;
  // Some nontrivial block system, or nullopt if primitive. Requires
  // transitivity.
  std::optional<BlockSystem> FindBlockSystem() const;
  bool IsPrimitive() const;

  // Alt(degree) <= G, decided from the exact order.
  bool ContainsAlternating() const;

  // Calls `visit` once per element, in a fixed order. Throws Error if the
  // order exceeds `cap`.
  void ForEachElement(std::uint64_t cap,
                      const std::function<void(const Permutation&)>& visit) const;
  std::vector<Permutation> Elements(std::uint64_t cap) const;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabilizerChain> chain_;
};

}  // namespace conway
