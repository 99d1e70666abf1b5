#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conway/classify.hpp"
#include "conway/design.hpp"

namespace conway {

inline constexpr std::size_t kCanonicalSizeCap = 16;

// Canonical representative of d's isomorphism class: the relabeling whose
// line list, ordered colexicographically (by largest point, then next
// largest, ...), is lexicographically least. Found by branch and bound over
// label assignments. Isomorphic designs have identical canonical forms.
Design CanonicalForm(const Design& d, std::size_t size_cap = kCanonicalSizeCap);
// The relabeling g with Relabel(d, g) == CanonicalForm(d).
Permutation CanonicalLabeling(const Design& d,
                              std::size_t size_cap = kCanonicalSizeCap);
bool IsCanonical(const Design& d, std::size_t size_cap = kCanonicalSizeCap);
bool IsCanonical(std::size_t n, std::span<const Line> lines);

// 64-bit FNV-1a of the serialized canonical form, as 16 hex digits.
std::string CanonicalHash(const Design& d);

// lambda*n*(n-1) divisible by 12 and lambda*(n-1) divisible by 3.
bool DivisibilityHolds(std::size_t n, std::size_t lambda);

struct EnumerationOptions {
  std::size_t workers = 1;
  bool keep_designs = true;
  // Annotate each design with the signature of its hole stabilizer at point 0.
  bool classify = false;
  // Shuffles the order in which candidate lines are tried; results are
  // unaffected.
  std::optional<std::uint64_t> shuffle_seed;
  std::size_t size_cap = kCanonicalSizeCap;
};

struct EnumerationResult {
  std::size_t n = 0;
  std::size_t lambda = 0;
  std::uint64_t count = 0;
  // Canonical, pairwise non-isomorphic, sorted by line list.
  std::vector<Design> designs;
  std::vector<Signature> signatures;  // parallel to designs when classified
};

// One canonical design per isomorphism class of supersimple 2-(n,4,lambda)
// designs. Throws Error when the divisibility conditions fail or n exceeds
// the cap.
EnumerationResult EnumerateDesigns(std::size_t n, std::size_t lambda,
                                   const EnumerationOptions& options = {});
std::uint64_t CountDesigns(std::size_t n, std::size_t lambda, std::size_t workers = 1);

}  // namespace conway
