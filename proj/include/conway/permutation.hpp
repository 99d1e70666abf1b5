#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conway/error.hpp"

namespace conway {

// Sorted multiset of cycle lengths >= 2; fixed points are omitted.
using CycleType = std::vector<std::size_t>;

enum class Parity { kEven, kOdd };

// A bijection on {0, ..., degree-1}. Products act left to right:
// i^(g*h) = (i^g)^h, which matches how move sequences are written.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);

  // Throws Error unless `images` is a bijection on {0..size-1}.
  static Permutation FromImages(std::vector<Point> images);
  static Permutation FromCycles(std::size_t degree,
                                const std::vector<std::vector<Point>>& cycles);
  static Permutation Transposition(std::size_t degree, Point a, Point b);
  // Parses "(1,2)(3,4,5)" with 1-based points; "()" is the identity.
  static Permutation Parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  Point Apply(std::size_t i) const;
  std::span<const Point> images() const noexcept { return images_; }

  bool IsIdentity() const noexcept;
  Permutation Inverse() const;
  std::vector<Point> Support() const;
  std::size_t SupportSize() const noexcept;
  CycleType cycle_type() const;
  Parity parity() const noexcept;

  // Canonical: each cycle starts at its minimum, cycles sorted by leader,
  // fixed points dropped.
  std::vector<std::vector<Point>> ToCycles() const;
  // 1-based cycle notation, "()" for the identity.
  std::string ToString() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  friend Permutation Compose(const Permutation&, const Permutation&);
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

// Left-to-right product; throws Error on degree mismatch.
Permutation Compose(const Permutation& g, const Permutation& h);
inline Permutation operator*(const Permutation& g, const Permutation& h) {
  return Compose(g, h);
}

}  // namespace conway
