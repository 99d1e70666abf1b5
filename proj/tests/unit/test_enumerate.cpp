#include <random>

#include <gtest/gtest.h>

#include "conway/enumerate.hpp"
#include "conway/moves.hpp"
#include "oracles.hpp"

namespace conway {
namespace {

Permutation Random(std::size_t degree, std::mt19937_64& rng) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::FromImages(images);
}

TEST(Canonical, IdempotentAndInvariant) {
  std::mt19937_64 rng(8);
  for (const auto& name : BuiltinNames()) {
    Design d = Builtin(name);
    if (d.n() > 12) continue;
    Design c = CanonicalForm(d);
    EXPECT_EQ(CanonicalForm(c), c) << name;
    EXPECT_TRUE(IsCanonical(c)) << name;
    EXPECT_EQ(Relabel(d, CanonicalLabeling(d)), c) << name;
    for (int trial = 0; trial < 5; ++trial) {
      Design r = Relabel(d, Random(d.n(), rng));
      EXPECT_EQ(CanonicalForm(r), c) << name;
      EXPECT_EQ(CanonicalHash(r), CanonicalHash(d)) << name;
    }
  }
}

TEST(Canonical, LargeAutomorphismGroup) {
  std::mt19937_64 rng(9);
  Design d = BooleanQuadrupleSystem(4);
  EXPECT_EQ(CanonicalForm(Relabel(d, Random(16, rng))), CanonicalForm(d));
}

TEST(Canonical, DistinguishesNonIsomorphic) {
  EXPECT_NE(CanonicalHash(Builtin("bqs8")), CanonicalHash(Builtin("paper9")));
  EXPECT_EQ(CanonicalHash(Builtin("pg3")).size(), 16u);
  EXPECT_THROW(CanonicalForm(BooleanQuadrupleSystem(5)), Error);
}

TEST(Canonical, AgreesWithBruteForceClasses) {
  // Two labeled designs share a canonical form iff they share the brute-force one.
  auto labeled = oracle::AllLabeledDesigns(7, 2);
  ASSERT_FALSE(labeled.empty());
  std::map<std::vector<Line>, std::string> hash_of;
  for (const auto& lines : labeled) {
    auto brute = oracle::BruteForceCanonical(7, lines);
    std::string hash = CanonicalHash(Design(7, 2, lines));
    auto [it, inserted] = hash_of.emplace(brute, hash);
    if (!inserted) EXPECT_EQ(it->second, hash);
  }
  std::set<std::string> hashes;
  for (const auto& [brute, hash] : hash_of) hashes.insert(hash);
  EXPECT_EQ(hashes.size(), hash_of.size());
}

TEST(Enumerate, Divisibility) {
  EXPECT_TRUE(DivisibilityHolds(8, 3));
  EXPECT_TRUE(DivisibilityHolds(13, 1));
  EXPECT_FALSE(DivisibilityHolds(12, 1));
  EXPECT_FALSE(DivisibilityHolds(6, 1));
  EXPECT_THROW(EnumerateDesigns(12, 1), Error);
  EXPECT_THROW(EnumerateDesigns(17, 3), Error);
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(CountDesigns(4, 1), 1u);
  EXPECT_EQ(CountDesigns(5, 3), 0u);
  EXPECT_EQ(CountDesigns(8, 3), 1u);
  EXPECT_EQ(CountDesigns(9, 3), 1u);
}

TEST(Enumerate, MatchesBruteForceOracle) {
  for (auto [n, lambda] : {std::pair<std::size_t, std::size_t>{4, 1}, {5, 3}, {7, 2}, {8, 3}}) {
    EXPECT_EQ(CountDesigns(n, lambda), oracle::BruteForceClassCount(n, lambda))
        << n << "," << lambda;
  }
}

TEST(Enumerate, KnownDesigns) {
  auto eight = EnumerateDesigns(8, 3);
  ASSERT_EQ(eight.designs.size(), 1u);
  EXPECT_EQ(eight.designs[0], CanonicalForm(Builtin("bqs8")));
  EXPECT_EQ(HoleStabilizer(eight.designs[0], 0).Order(), 1);

  EnumerationOptions opts;
  opts.classify = true;
  auto nine = EnumerateDesigns(9, 3, opts);
  ASSERT_EQ(nine.designs.size(), 1u);
  EXPECT_EQ(nine.designs[0], CanonicalForm(Builtin("paper9")));
  ASSERT_EQ(nine.signatures.size(), 1u);
  EXPECT_EQ(nine.signatures[0].order, 288);
}

TEST(Enumerate, WorkersAndShuffleDoNotChangeResults) {
  auto base = EnumerateDesigns(9, 3);
  for (std::size_t workers : {2u, 4u}) {
    for (std::uint64_t seed : {1u, 99u}) {
      EnumerationOptions opts;
      opts.workers = workers;
      opts.shuffle_seed = seed;
      auto other = EnumerateDesigns(9, 3, opts);
      EXPECT_EQ(other.count, base.count);
      EXPECT_EQ(other.designs, base.designs);
    }
  }
  EnumerationOptions opts;
  opts.shuffle_seed = 5;
  EXPECT_EQ(EnumerateDesigns(7, 2, opts).designs, EnumerateDesigns(7, 2).designs);
}

TEST(Enumerate, CountOnly) {
  EnumerationOptions opts;
  opts.keep_designs = false;
  auto r = EnumerateDesigns(8, 3, opts);
  EXPECT_EQ(r.count, 1u);
  EXPECT_TRUE(r.designs.empty());
}

}  // namespace
}  // namespace conway
