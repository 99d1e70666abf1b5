#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace conway::oracle {

std::optional<std::set<Images>> Closure(std::size_t degree,
                                        const std::vector<Permutation>& gens,
                                        std::size_t cap) {
  Images identity(degree);
  std::iota(identity.begin(), identity.end(), Point{0});
  std::set<Images> seen{identity};
  std::deque<Images> queue{identity};
  while (!queue.empty()) {
    Images g = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      Images next(degree);
      for (std::size_t i = 0; i < degree; ++i) next[i] = s[g[i]];
      if (seen.insert(next).second) {
        if (seen.size() > cap) return std::nullopt;
        queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

namespace {

// Assigns block ids point by point; block ids appear in first-use order so
// each partition is produced once.
bool SearchPartitions(std::size_t degree, std::size_t block_size,
                      const std::vector<Permutation>& gens,
                      std::vector<int>& block_of, std::vector<std::size_t>& fill,
                      std::size_t point) {
  if (point == degree) {
    for (const auto& g : gens) {
      // Blocks map to blocks iff points sharing a block keep sharing one.
      std::vector<int> image_block(fill.size(), -1);
      for (std::size_t p = 0; p < degree; ++p) {
        int target = block_of[g[p]];
        int& slot = image_block[block_of[p]];
        if (slot == -1) slot = target;
        else if (slot != target) return false;
      }
    }
    return true;
  }
  const std::size_t blocks = degree / block_size;
  for (std::size_t b = 0; b < blocks; ++b) {
    if (fill[b] == block_size) continue;
    bool fresh = fill[b] == 0;
    block_of[point] = static_cast<int>(b);
    ++fill[b];
    if (SearchPartitions(degree, block_size, gens, block_of, fill, point + 1)) return true;
    --fill[b];
    if (fresh) break;  // later empty blocks are interchangeable with this one
  }
  return false;
}

}  // namespace

bool HasBlockSystemByPartitions(std::size_t degree,
                                const std::vector<Permutation>& gens) {
  for (std::size_t k = 2; k < degree; ++k) {
    if (degree % k != 0) continue;
    std::vector<int> block_of(degree, -1);
    std::vector<std::size_t> fill(degree / k, 0);
    if (SearchPartitions(degree, k, gens, block_of, fill, 0)) return true;
  }
  return false;
}

std::vector<std::vector<Line>> AllLabeledDesigns(std::size_t n, std::size_t lambda) {
  std::vector<Line> subsets;
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b)
      for (Point c = b + 1; c < n; ++c)
        for (Point d = c + 1; d < n; ++d) subsets.push_back({a, b, c, d});

  std::vector<int> covered(n * n, 0), undecided(n * n, 0);
  for (const Line& s : subsets)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) ++undecided[s[i] * n + s[j]];

  std::vector<std::vector<Line>> out;
  std::vector<Line> chosen;
  auto meets_in_three = [&](const Line& s) {
    for (const Line& t : chosen) {
      int common = 0;
      for (Point p : s) common += std::count(t.begin(), t.end(), p);
      if (common > 2) return true;
    }
    return false;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == subsets.size()) {
      out.push_back(chosen);
      return;
    }
    const Line& s = subsets[idx];
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) --undecided[s[i] * n + s[j]];
    auto feasible = [&] {
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          std::size_t slot = s[i] * n + s[j];
          if (covered[slot] > static_cast<int>(lambda)) return false;
          if (covered[slot] + undecided[slot] < static_cast<int>(lambda)) return false;
        }
      return true;
    };
    // include
    if (!meets_in_three(s)) {
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) ++covered[s[i] * n + s[j]];
      chosen.push_back(s);
      if (feasible()) rec(idx + 1);
      chosen.pop_back();
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) --covered[s[i] * n + s[j]];
    }
    // exclude
    if (feasible()) rec(idx + 1);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) ++undecided[s[i] * n + s[j]];
  };
  rec(0);
  return out;
}

std::vector<Line> BruteForceCanonical(std::size_t n, const std::vector<Line>& lines) {
  std::vector<Point> perm(n);
  std::iota(perm.begin(), perm.end(), Point{0});
  std::vector<Line> best;
  do {
    std::vector<Line> image;
    for (const Line& l : lines) {
      Line m{perm[l[0]], perm[l[1]], perm[l[2]], perm[l[3]]};
      std::sort(m.begin(), m.end());
      image.push_back(m);
    }
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = std::move(image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::size_t BruteForceClassCount(std::size_t n, std::size_t lambda) {
  std::set<std::vector<Line>> classes;
  for (const auto& design : AllLabeledDesigns(n, lambda)) {
    classes.insert(BruteForceCanonical(n, design));
  }
  return classes.size();
}

}  // namespace conway::oracle
