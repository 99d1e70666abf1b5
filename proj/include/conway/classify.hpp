#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conway/perm_group.hpp"

namespace conway {

struct Signature {
  std::size_t degree = 0;
  GroupOrder order = 1;
  bool transitive = false;
  std::optional<bool> primitive;  // set only for transitive groups
  bool generously_transitive = false;
  bool contains_alt = false;
  bool all_even = true;  // every generator is an even permutation

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature ComputeSignature(const Group& group);

// Name looked up from (degree, order) alone. Returns "unrecognized" when the
// pair is not in the table.
std::string Recognize(std::size_t degree, const GroupOrder& order);
inline std::string Recognize(const Signature& sig) {
  return Recognize(sig.degree, sig.order);
}

enum class ClaimStatus { kHolds, kViolated, kNotApplicable };
std::string ToString(ClaimStatus status);

struct Claim {
  std::string id;
  ClaimStatus status = ClaimStatus::kNotApplicable;
  std::string witness;
};

struct ConsistencyReport {
  std::vector<Claim> claims;

  bool HasViolation() const;
  const Claim* Find(const std::string& id) const;
};

// Checks the four degree bounds that hold for the hole stabilizer of any
// supersimple 2-(n,4,lambda) design:
//   transitive_bound       n > 24*lambda/7 + 1        => transitive
//   primitive_bound        n > 9*lambda - 6           => primitive
//   generous_bound         n >= 10*lambda - 5         => generously transitive
//   alternating_bound      n > 9*lambda^2 - 12*lambda + 5
//                             => contains Alt(n-1), or lambda = 1, n = 13 and
//                                the group has order 95040
ConsistencyReport CheckDegreeBounds(std::size_t n, std::size_t lambda,
                                    const Signature& sig);

// For lambda = 3: the signature must be Alt-containing or one of the listed
// exceptional rows for its n, and must satisfy the lambda = 3 thresholds
// (n > 11 transitive, n > 21 primitive, n > 50 alternating) and evenness.
ConsistencyReport CheckLambda3Classification(std::size_t n, const Signature& sig);

enum class CriterionCase {
  kSmallSupportElement,
  kSharedTranspositionPair,
  kNeither,
};
std::string ToString(CriterionCase c);

struct CriterionResult {
  CriterionCase which = CriterionCase::kNeither;
  std::vector<Permutation> witnesses;
  std::optional<std::pair<Point, Point>> shared_transposition;
};

inline constexpr std::uint64_t kDefaultElementCap = 1'000'000;

// Scans every element. Case 1: some non-identity element has support smaller
// than 6*(lambda-1). Case 2: otherwise, two distinct elements of cycle type
// 2^(3*(lambda-1)) share a transposition. A hole stabilizer of a supersimple
// 2-(n,4,lambda) design always lands in case 1 or 2, so kNeither rules the
// group out. Witnesses are the lexicographically least available.
CriterionResult SupportCriterion(const Group& group, std::size_t lambda,
                                 std::uint64_t cap = kDefaultElementCap);

}  // namespace conway
