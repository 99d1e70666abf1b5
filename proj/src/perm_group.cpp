#include "conway/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "conway/disjoint_set.hpp"

namespace conway {

GroupOrder Factorial(std::size_t m) {
  GroupOrder f = 1;
  for (std::size_t i = 2; i <= m; ++i) f *= i;
  return f;
}

// One level of the stabilizer chain: the basic orbit of base point `base`
// under the strong generators that fix every earlier base point.
struct ChainLevel {
  Point base = 0;
  std::vector<std::size_t> generators;  // indices into StabilizerChain::strong
  std::vector<Point> orbit;
  std::vector<std::optional<Permutation>> transversal;  // base^u = p
  std::vector<std::optional<Permutation>> inverse;
  std::vector<std::size_t> checked;  // per orbit slot: generators processed
};

class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, const std::vector<Permutation>& gens)
      : degree_(degree) {
    for (const auto& g : gens) {
      auto [residue, depth] = Sift(g, 0);
      if (!residue.IsIdentity()) AddStrongGenerator(std::move(residue), depth);
    }
    Complete();
  }

  // Strips g through levels [from, end). Returns the residue and the level at
  // which stripping stopped (levels_.size() if it went all the way).
  std::pair<Permutation, std::size_t> Sift(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const ChainLevel& level = levels_[l];
      Point p = g[level.base];
      if (!level.transversal[p]) return {std::move(g), l};
      g = g * *level.inverse[p];
    }
    return {std::move(g), levels_.size()};
  }

  GroupOrder Order() const {
    GroupOrder order = 1;
    for (const auto& level : levels_) order *= level.orbit.size();
    return order;
  }

  const std::vector<ChainLevel>& levels() const { return levels_; }
  const std::vector<Point>& base() const { return base_; }
  const std::vector<Permutation>& strong() const { return strong_; }

 private:
  void AddStrongGenerator(Permutation residue, std::size_t depth) {
    if (depth == levels_.size()) {
      auto moved = residue.Support();
      ChainLevel level;
      level.base = moved.front();
      level.orbit = {level.base};
      level.transversal.assign(degree_, std::nullopt);
      level.inverse.assign(degree_, std::nullopt);
      level.transversal[level.base] = Permutation(degree_);
      level.inverse[level.base] = Permutation(degree_);
      level.checked = {0};
      base_.push_back(level.base);
      levels_.push_back(std::move(level));
    }
    strong_.push_back(std::move(residue));
    for (std::size_t l = 0; l <= depth; ++l) {
      levels_[l].generators.push_back(strong_.size() - 1);
    }
  }

  // Extends every basic orbit and sifts every Schreier generator until each
  // one strips to the identity.
  void Complete() {
    while (Step()) {
    }
  }

  // Works from the deepest level up and stops after adding one strong
  // generator, so deeper levels are closed before shallower ones use them.
  bool Step() {
    for (std::size_t l = levels_.size(); l-- > 0;) {
      for (std::size_t slot = 0; slot < levels_[l].orbit.size(); ++slot) {
        while (levels_[l].checked[slot] < levels_[l].generators.size()) {
          ChainLevel& level = levels_[l];
          const Permutation& s = strong_[level.generators[level.checked[slot]++]];
          Point p = level.orbit[slot];
          Point q = s[p];
          if (!level.transversal[q]) {
            Permutation u = *level.transversal[p] * s;
            level.inverse[q] = u.Inverse();
            level.transversal[q] = std::move(u);
            level.orbit.push_back(q);
            level.checked.push_back(0);
            continue;
          }
          Permutation schreier = *level.transversal[p] * s * *level.inverse[q];
          auto [residue, depth] = Sift(std::move(schreier), l + 1);
          if (!residue.IsIdentity()) {
            AddStrongGenerator(std::move(residue), depth);
            return true;
          }
        }
      }
    }
    return false;
  }

  std::size_t degree_;
  std::vector<ChainLevel> levels_;
  std::vector<Point> base_;
  std::vector<Permutation> strong_;
};

Group::Group(std::size_t degree) : Group(degree, {}) {}

Group::Group(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) {
      throw Error("generator of degree " + std::to_string(g.degree()) +
                  " in a group of degree " + std::to_string(degree_));
    }
  }
  chain_ = std::make_shared<const StabilizerChain>(degree_, generators_);
}

Group Group::FromGenerators(std::vector<Permutation> generators) {
  if (generators.empty()) {
    throw Error("empty generator list needs an explicit degree");
  }
  std::size_t degree = generators.front().degree();
  return Group(degree, std::move(generators));
}

GroupOrder Group::Order() const { return chain_->Order(); }

bool Group::Contains(const Permutation& g) const {
  if (g.degree() != degree_) {
    throw Error("membership test with a permutation of degree " +
                std::to_string(g.degree()) + " in a group of degree " +
                std::to_string(degree_));
  }
  auto [residue, depth] = chain_->Sift(g, 0);
  return residue.IsIdentity();
}

const std::vector<Point>& Group::Base() const { return chain_->base(); }

std::vector<std::size_t> Group::BasicOrbitSizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& level : chain_->levels()) sizes.push_back(level.orbit.size());
  return sizes;
}

std::vector<Permutation> Group::StrongGenerators() const { return chain_->strong(); }

std::vector<std::vector<Point>> Group::Orbits() const {
  DisjointSet sets(degree_);
  for (const auto& g : generators_) {
    for (std::size_t i = 0; i < degree_; ++i) sets.Unite(i, g[i]);
  }
  std::vector<std::vector<Point>> orbits;
  for (const auto& cls : sets.Classes()) {
    orbits.emplace_back(cls.begin(), cls.end());
  }
  return orbits;
}

bool Group::IsTransitive() const { return Orbits().size() <= 1; }

bool Group::IsGenerouslyTransitive() const {
  const std::size_t m = degree_;
  if (m < 2) return true;
  // Orbitals: orbits on ordered pairs (i, j), encoded as i*m + j.
  DisjointSet orbitals(m * m);
  for (const auto& g : generators_) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j) orbitals.Unite(i * m + j, g[i] * m + g[j]);
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!orbitals.Same(i * m + j, j * m + i)) return false;
    }
  }
  return true;
}

std::optional<BlockSystem> Group::MinimalBlockSystem(Point a, Point b) const {
  if (a >= degree_ || b >= degree_ || a == b) {
    throw Error("block seed must be two distinct points in range");
  }
  if (!IsTransitive()) throw Error("block systems require a transitive group");
  DisjointSet sets(degree_);
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  sets.Unite(a, b);
  queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (const auto& g : generators_) {
      std::size_t u = sets.Find(g[x]);
      std::size_t v = sets.Find(g[y]);
      if (u != v) {
        sets.Unite(u, v);
        queue.emplace_back(u, v);
      }
    }
  }
  auto classes = sets.Classes();
  if (classes.size() == 1) return std::nullopt;
  BlockSystem system;
  for (const auto& cls : classes) system.blocks.emplace_back(cls.begin(), cls.end());
  return system;
}

std::optional<BlockSystem> Group::FindBlockSystem() const {
  if (!IsTransitive()) throw Error("primitivity is only defined for transitive groups");
  // Every block system has a block containing 0 and some other point.
  for (Point b = 1; b < degree_; ++b) {
    if (auto system = MinimalBlockSystem(0, b)) return system;
  }
  return std::nullopt;
}

bool Group::IsPrimitive() const { return !FindBlockSystem().has_value(); }

bool Group::ContainsAlternating() const {
  if (degree_ <= 2) return true;
  return Order() * 2 >= Factorial(degree_);
}

void Group::ForEachElement(
    std::uint64_t cap, const std::function<void(const Permutation&)>& visit) const {
  if (Order() > cap) {
    throw Error("group order " + Order().str() + " exceeds element cap " +
                std::to_string(cap));
  }
  const auto& levels = chain_->levels();
  // Every element is uniquely u_{k-1} * ... * u_1 * u_0 with u_l from level l.
  std::function<void(std::size_t, const Permutation&)> walk =
      [&](std::size_t remaining, const Permutation& prefix) {
        if (remaining == 0) {
          visit(prefix);
          return;
        }
        const ChainLevel& level = levels[remaining - 1];
        for (Point p : level.orbit) walk(remaining - 1, prefix * *level.transversal[p]);
      };
  walk(levels.size(), Permutation(degree_));
}

std::vector<Permutation> Group::Elements(std::uint64_t cap) const {
  std::vector<Permutation> out;
  ForEachElement(cap, [&](const Permutation& g) { out.push_back(g); });
  return out;
}

}  // namespace conway
