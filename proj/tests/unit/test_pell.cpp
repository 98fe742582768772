#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "dioph/pell.hpp"
#include "dioph/tuple.hpp"

using namespace dioph;

TEST(PellProblem, Validation) {
  const auto p = PellProblem::make(1, 3);
  EXPECT_EQ(p.R, 2);
  EXPECT_THROW(PellProblem::make(3, 1), std::invalid_argument);
  EXPECT_THROW(PellProblem::make(2, 3), std::invalid_argument);
  EXPECT_THROW(PellProblem::make(0, 3), std::invalid_argument);
}

TEST(FundamentalSolutions, Examples) {
  const auto f13 = fundamental_solutions(PellProblem::make(1, 3));
  ASSERT_EQ(f13.size(), 1u);
  EXPECT_EQ(f13[0].V0, 1);
  EXPECT_EQ(f13[0].U0, 1);

  const auto f18 = fundamental_solutions(PellProblem::make(1, 8));
  EXPECT_NE(std::find(f18.begin(), f18.end(), FundamentalSolution{1, 1}), f18.end());

  // (4,12), R = 7: U0 <= sqrt(32/12) gives U0 = 1, and 4 V0^2 = 4 gives V0 = +-1.
  const auto p = PellProblem::make(4, 12);
  EXPECT_EQ(scan_fundamentals(p), (std::vector<FundamentalSolution>{{1, 1}, {-1, 1}}));
}

TEST(SolutionsUpTo, Examples) {
  const auto p = PellProblem::make(1, 3);
  const auto s = solutions_up_to(p, 10);
  ASSERT_GE(s.size(), 2u);
  EXPECT_EQ(s[0].V, 1);
  EXPECT_EQ(s[0].U, 1);
  EXPECT_EQ(s[0].q, 0u);
  EXPECT_EQ(s[1].V, 5);
  EXPECT_EQ(s[1].U, 3);
  EXPECT_EQ(s[1].q, 1u);

  const auto s2 = solutions_up_to(p, 2);
  ASSERT_EQ(s2.size(), 1u);
  EXPECT_EQ(s2[0].U, 1);
}

TEST(SolutionsUpTo, EquationHoldsOnEveryTermAndUGrows) {
  const auto p = PellProblem::make(1, 8);
  const auto s = solutions_up_to(p, 1000000);
  ASSERT_GE(s.size(), 4u);
  for (const auto& x : s) EXPECT_EQ(p.A * x.V * x.V - p.B * x.U * x.U, p.A - p.B);
  std::map<std::pair<mpz_class, mpz_class>, std::vector<mpz_class>> orbits;
  for (const auto& x : s) orbits[{x.origin.V0, x.origin.U0}].push_back(x.U);
  for (auto& [k, us] : orbits) {
    for (std::size_t i = 1; i < us.size(); ++i) EXPECT_GT(us[i], us[i - 1]);
  }
}

TEST(ThirdElements, Examples) {
  const auto p = PellProblem::make(1, 3);
  const auto t = third_elements(p, 10);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].C, 8);
  EXPECT_EQ(t[0].U, 3);
  EXPECT_TRUE(third_elements(p, 2).empty());

  const auto p24 = PellProblem::make(2, 4);
  const auto t24 = third_elements(p24, 100, ThirdElementFilter::AnyDistinct);
  ASSERT_FALSE(t24.empty());
  for (const auto& x : t24) EXPECT_TRUE(is_diophantine_tuple({2, 4, x.C})) << x.C;
}

TEST(ThirdElements, AnyDistinctContainsAboveB) {
  const auto p = PellProblem::make(3, 8);
  const auto above = third_elements(p, 100000, ThirdElementFilter::AboveB);
  const auto any = third_elements(p, 100000, ThirdElementFilter::AnyDistinct);
  std::set<mpz_class> all;
  for (const auto& x : any) all.insert(x.C);
  for (const auto& x : above) {
    EXPECT_GT(x.C, p.B);
    EXPECT_TRUE(all.count(x.C));
  }
  EXPECT_TRUE(all.count(1));  // {1,3,8}
  EXPECT_TRUE(all.count(21));
}

TEST(Divisors, Basics) {
  EXPECT_EQ(divisors(1), std::vector<std::uint64_t>({1}));
  EXPECT_EQ(divisors(48), std::vector<std::uint64_t>({1, 2, 3, 4, 6, 8, 12, 16, 24, 48}));
  EXPECT_EQ(small_divisors_r2m1(7), std::vector<std::uint64_t>({1, 2, 3, 4, 6}));
}

TEST(DivisorPairs, Examples) {
  auto pairs = [](std::uint64_t R) {
    std::vector<std::pair<long, long>> out;
    for (const auto& p : divisor_pairs(R)) out.emplace_back(p.A.get_si(), p.B.get_si());
    return out;
  };
  using V = std::vector<std::pair<long, long>>;
  EXPECT_EQ(pairs(2), (V{{1, 3}}));
  EXPECT_EQ(pairs(3), (V{{1, 8}, {2, 4}}));
  EXPECT_EQ(pairs(7), (V{{1, 48}, {2, 24}, {3, 16}, {4, 12}, {6, 8}}));
}

TEST(PellProperties, CompleteAgainstBruteForceForSmallB) {
  for (long B = 2; B <= 120; ++B) {
    for (long A = 1; A < B; ++A) {
      if (!isqrt_exact(A * B + 1)) continue;
      const auto p = PellProblem::make(A, B);
      std::set<std::pair<mpz_class, mpz_class>> brute, got;
      for (long U = 1; U <= 3000; ++U) {
        const long num = A - B + B * U * U;
        if (num <= 0 || num % A) continue;
        if (auto V = isqrt_exact(num / A)) brute.insert({*V, mpz_class(U)});
      }
      for (const auto& s : solutions_up_to(p, 3000)) got.insert({s.V, s.U});
      EXPECT_EQ(got, brute) << "A=" << A << " B=" << B;
    }
  }
}
