#include <gtest/gtest.h>

#include "rfib/oracles.hpp"

using namespace rfib;
using namespace rfib::oracle;

TEST(OrderedSetPartitions, RestrictedCounts) {
  // three singletons in 3! orders, plus 3 choices of pair x 2 orders
  EXPECT_EQ(fubini_restricted_bruteforce(3, 2), 12);
  EXPECT_EQ(fubini_restricted_bruteforce(0, 1), 1);
  EXPECT_EQ(fubini_restricted_bruteforce(0, 5), 1);
  EXPECT_EQ(fubini_restricted_bruteforce(4, 1), 24);
  EXPECT_EQ(fubini_restricted_bruteforce(5, 9), fubini_restricted_bruteforce(5, 5));
  EXPECT_THROW(fubini_restricted_bruteforce(3, 0), std::invalid_argument);
}

TEST(OrderedSetPartitions, VisitsBlocksSummingToN) {
  unsigned visits = 0;
  for_each_ordered_set_partition(5, 3, [&](BlockSizes s) {
    unsigned total = 0;
    for (unsigned b : s) {
      EXPECT_LE(b, 3u);
      total += b;
    }
    EXPECT_EQ(total, 5u);
    ++visits;
  });
  EXPECT_EQ(BigInt(visits), fubini_restricted_bruteforce(5, 3));
}

TEST(PreferenceOrderings, ProfileCounts) {
  EXPECT_EQ(preference_ordering_count(3, PartitionProfile({1, 1, 0})), 6);
  EXPECT_EQ(preference_ordering_count(3, PartitionProfile({3, 0, 0})), 6);
  EXPECT_EQ(preference_ordering_count(3, PartitionProfile({0, 0, 1})), 1);
  EXPECT_EQ(preference_ordering_count(0, PartitionProfile()), 1);
  EXPECT_THROW(preference_ordering_count(4, PartitionProfile({1, 1, 0})), std::invalid_argument);
}

TEST(PreferenceOrderings, TableSumsToRestrictedFubini) {
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned r = 1; r <= 4; ++r) {
      BigInt total = 0;
      for (const auto& [profile, count] : preference_ordering_table(n, r)) {
        EXPECT_EQ(profile.weight(), n);
        EXPECT_EQ(count, preference_ordering_count(n, profile));
        total += count;
      }
      EXPECT_EQ(total, fubini_restricted_bruteforce(n, r));
    }
}

TEST(SetPartitions, BellNumbers) {
  const unsigned bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (unsigned n = 0; n < 8; ++n) {
    unsigned count = 0;
    for_each_set_partition(n, [&](BlockSizes) { ++count; });
    EXPECT_EQ(count, bell[n]);
  }
}
