#include "conway/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace conway {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::FromImages(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p]) {
      throw Error("image list is not a bijection");
    }
    seen[p] = true;
  }
  Permutation g;
  g.images_ = std::move(images);
  return g;
}

Permutation Permutation::FromCycles(
    std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation g(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (Point p : cycle) {
      if (p >= degree) throw Error("cycle point out of range");
      if (used[p]) throw Error("point repeated in cycle notation");
      used[p] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      g.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return g;
}

Permutation Permutation::Transposition(std::size_t degree, Point a, Point b) {
  if (a >= degree || b >= degree) throw Error("transposition out of range");
  Permutation g(degree);
  std::swap(g.images_[a], g.images_[b]);
  return g;
}

Permutation Permutation::Parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw Error("malformed cycle notation: expected '('");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      unsigned long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned long>(text[i] - '0');
        if (value > degree) throw Error("cycle point out of range");
        ++i;
      }
      if (i == start) throw Error("malformed cycle notation: expected a point");
      if (value == 0) throw Error("cycle points are 1-based");
      cycle.push_back(static_cast<Point>(value - 1));
      skip_space();
      if (i < text.size() && text[i] == ',') ++i;
    }
    if (cycle.size() == 1) throw Error("malformed cycle notation: 1-cycle");
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return FromCycles(degree, cycles);
}

Point Permutation::Apply(std::size_t i) const {
  if (i >= images_.size()) throw Error("point out of range");
  return images_[i];
}

bool Permutation::IsIdentity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::Inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<Point>(i);
  }
  return Permutation(Unchecked{}, std::move(inv));
}

std::vector<Point> Permutation::Support() const {
  std::vector<Point> moved;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) moved.push_back(static_cast<Point>(i));
  }
  return moved;
}

std::size_t Permutation::SupportSize() const noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) count += images_[i] != i;
  return count;
}

std::vector<std::vector<Point>> Permutation::ToCycles() const {
  std::vector<std::vector<Point>> cycles;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (std::size_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(static_cast<Point>(p));
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

CycleType Permutation::cycle_type() const {
  CycleType lengths;
  for (const auto& c : ToCycles()) lengths.push_back(c.size());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Parity Permutation::parity() const noexcept {
  std::vector<bool> seen(images_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (std::size_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? Parity::kEven : Parity::kOdd;
}

std::string Permutation::ToString() const {
  auto cycles = ToCycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation Compose(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) {
    throw Error("cannot compose permutations of degree " +
                std::to_string(g.degree()) + " and " +
                std::to_string(h.degree()));
  }
  std::vector<Point> images(g.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = h[g[i]];
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

}  // namespace conway
