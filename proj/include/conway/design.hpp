#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conway/error.hpp"
#include "conway/permutation.hpp"

namespace conway {

// Four distinct points in increasing order.
using Line = std::array<Point, 4>;

// Largest point count accepted by the built-in constructors.
inline constexpr std::size_t kDefaultSizeCap = 64;

struct ValidationReport {
  bool is_2_design = false;
  std::pair<std::size_t, std::size_t> observed_lambda_range{0, 0};
  bool is_simple = false;
  bool is_supersimple = false;
  std::optional<std::string> first_violation;  // 1-based witness
};

// A simple 2-(n,4,lambda) block design candidate. Construction checks only
// structure (range, distinct points, no repeated line); use Validate() for the
// design axioms. Immutable once built.
class Design {
 public:
  Design(std::size_t n, std::size_t lambda, std::vector<Line> lines);

  std::size_t n() const noexcept { return n_; }
  std::size_t lambda() const noexcept { return lambda_; }
  // Lexicographically sorted.
  const std::vector<Line>& lines() const noexcept { return lines_; }

  // Indices into lines() of the lines through {a, b}. Throws if a == b.
  std::span<const std::size_t> LineIndicesThrough(Point a, Point b) const;
  std::vector<Line> LinesThroughPair(Point a, Point b) const;
  // False when a == b.
  bool IsCollinear(Point a, Point b) const;
  // Union of the lines through {a, b}; throws if a == b or not collinear.
  std::vector<Point> Overline(Point a, Point b) const;

  // Number of lines a valid design must have: lambda*n*(n-1)/12.
  static std::optional<std::size_t> ExpectedLineCount(std::size_t n,
                                                      std::size_t lambda);

  friend bool operator==(const Design& a, const Design& b) {
    return a.n_ == b.n_ && a.lambda_ == b.lambda_ && a.lines_ == b.lines_;
  }

 private:
  std::size_t PairSlot(Point a, Point b) const;

  std::size_t n_;
  std::size_t lambda_;
  std::vector<Line> lines_;
  std::vector<std::vector<std::size_t>> pair_index_;
};

ValidationReport Validate(const Design& d);

// Text format: first non-comment line "n lambda", then lambda*n*(n-1)/12
// lines of four 1-based points. '#' starts a comment.
Design ParseDesign(std::string_view text);
std::string SerializeDesign(const Design& d);
Design LoadDesign(const std::string& path);

// Maps every line pointwise through g and re-sorts.
Design Relabel(const Design& d, const Permutation& g);

// Points are vectors of GF(2)^k (bit patterns); lines are zero-sum 4-sets.
Design BooleanQuadrupleSystem(std::size_t k,
                              std::size_t size_cap = kDefaultSizeCap);
// Points and lines of the projective plane of order 3.
Design ProjectivePlane3();

// One of: bqs8, bqs16, pg3, paper9, paper10.
Design Builtin(std::string_view name);
std::vector<std::string> BuiltinNames();

std::string FormatLine(const Line& line);  // "(1,2,3,4)"

}  // namespace conway
