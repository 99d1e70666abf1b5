#pragma once

// Independent reference computations used to cross-check the library. None of
// these share code paths with the routines they check: closure is plain
// breadth-first multiplication, block systems come from enumerating every
// equal-part partition, and design enumeration is include/exclude over all
// 4-subsets with isomorphism classes taken by trying all n! relabelings.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "conway/design.hpp"
#include "conway/permutation.hpp"

namespace conway::oracle {

using Images = std::vector<Point>;

// Every element of <gens>, or nullopt once more than `cap` are found.
std::optional<std::set<Images>> Closure(std::size_t degree,
                                        const std::vector<Permutation>& gens,
                                        std::size_t cap);

// True iff some partition of {0..degree-1} into blocks of equal size k,
// 1 < k < degree, is mapped onto itself by every generator.
bool HasBlockSystemByPartitions(std::size_t degree,
                                const std::vector<Permutation>& gens);

// All labeled supersimple 2-(n,4,lambda) designs, as lex-sorted line lists.
std::vector<std::vector<Line>> AllLabeledDesigns(std::size_t n, std::size_t lambda);

// Least lex-sorted line list over all n! relabelings.
std::vector<Line> BruteForceCanonical(std::size_t n, const std::vector<Line>& lines);

// Number of isomorphism classes of supersimple 2-(n,4,lambda) designs.
std::size_t BruteForceClassCount(std::size_t n, std::size_t lambda);

}  // namespace conway::oracle
