#include <gtest/gtest.h>

#include "dioph/campaign.hpp"
#include "dioph/tuple.hpp"

using namespace dioph;

TEST(Search, FrozenCountsUpToTenThousand) {
  const auto r = brute_force_search(10000);
  EXPECT_EQ(r.pairs, 51764u);
  EXPECT_EQ(r.triples.size(), 20937u);
  EXPECT_TRUE(r.quintuples.empty());
  const std::vector<std::vector<std::uint64_t>> want = {
      {1, 3, 8, 120},     {1, 3, 120, 1680},  {1, 8, 15, 528},    {1, 8, 120, 4095},
      {1, 15, 24, 1520},  {1, 24, 35, 3480},  {1, 35, 48, 6888},  {2, 4, 12, 420},
      {2, 12, 24, 2380},  {2, 24, 40, 7812},  {3, 5, 16, 1008},   {3, 8, 21, 2080},
      {3, 16, 33, 6440},  {4, 6, 20, 1980},   {4, 12, 30, 5852},  {5, 7, 24, 3432},
      {6, 8, 28, 5460},   {7, 9, 32, 8160}};
  ASSERT_EQ(r.quadruples.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(r.quadruples[i].elements, want[i]);
    EXPECT_TRUE(r.quadruples[i].regular);
  }
}

TEST(Search, TriplesAreTriplesAndRegularMeansEuler) {
  const auto r = brute_force_search(3000);
  for (const auto& t : r.triples) {
    const auto tr = DiophantineTriple::make(static_cast<unsigned long>(t.elements[0]),
                                            static_cast<unsigned long>(t.elements[1]),
                                            static_cast<unsigned long>(t.elements[2]));
    EXPECT_EQ(t.regular, is_euler_triple(tr));
  }
}

TEST(Search, DegenerateLimits) {
  EXPECT_TRUE(brute_force_search(2).triples.empty());
  EXPECT_THROW(brute_force_search(std::uint64_t{1} << 31), std::invalid_argument);
  const auto r = brute_force_search(120);
  ASSERT_EQ(r.quadruples.size(), 1u);
  EXPECT_EQ(r.quadruples[0].elements, (std::vector<std::uint64_t>{1, 3, 8, 120}));
}
