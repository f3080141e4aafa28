#include "tricube/oracle.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace tricube;
using tricube::testing::uniform;

namespace {

std::vector<Triple> triples(std::initializer_list<std::array<int, 3>> ts) {
  std::vector<Triple> out;
  for (const auto& t : ts) out.push_back({t[0], t[1], t[2]});
  return out;
}

// Triple loop over the whole cube; slow but as plain as it gets.
std::vector<Triple> cube_scan(const TripleSystem& sys, int bound) {
  std::vector<Triple> out;
  for (int x = -bound; x <= bound; ++x)
    for (int y = -bound; y <= bound; ++y)
      for (int z = -bound; z <= bound; ++z)
        if (verify({x, y, z}, sys)) out.push_back({x, y, z});
  return out;
}

}  // namespace

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force({3, 3}, 5), triples({{-5, 4, 4}, {1, 1, 1}, {4, -5, 4}, {4, 4, -5}}));
  EXPECT_EQ(brute_force({3, 3}, 1), triples({{1, 1, 1}}));
  EXPECT_EQ(brute_force({0, 0}, 1),
            triples({{-1, 0, 1}, {-1, 1, 0}, {0, -1, 1}, {0, 0, 0}, {0, 1, -1}, {1, -1, 0}, {1, 0, -1}}));
  EXPECT_EQ(brute_force({3, 3}, 0), std::vector<Triple>{});
  EXPECT_EQ(brute_force({0, 0}, 0), triples({{0, 0, 0}}));
}

TEST(BruteForce, NegativeBoundRejected) { EXPECT_THROW(brute_force({3, 3}, -1), std::domain_error); }

TEST(BruteForce, MatchesCubeScan) {
  for (int i = 0; i < 200; ++i) {
    const TripleSystem sys{uniform(-8, 8), uniform(-300, 300)};
    const int bound = static_cast<int>(uniform(0, 7));
    ASSERT_EQ(brute_force(sys, bound), cube_scan(sys, bound));
  }
}

TEST(BruteForce, WideIntegerPathMatchesNativePath) {
  // A bound past the native limit forces the arbitrary-precision loop, so
  // compare both loops on the same small box instead.
  for (int i = 0; i < 50; ++i) {
    const TripleSystem sys{uniform(-10, 10), uniform(-500, 500)};
    std::vector<Triple> wide;
    detail::scan_box<Int>(sys.s, sys.c, Int(12), wide);
    ASSERT_EQ(wide, brute_force(sys, 12));
  }
}

TEST(BruteForce, MonotoneInBound) {
  for (int i = 0; i < 300; ++i) {
    const TripleSystem sys{uniform(-10, 10), uniform(-1000, 1000)};
    const int b1 = static_cast<int>(uniform(0, 15));
    const int b2 = b1 + static_cast<int>(uniform(0, 10));
    const auto small = brute_force(sys, b1);
    const auto large = brute_force(sys, b2);
    ASSERT_TRUE(std::includes(large.begin(), large.end(), small.begin(), small.end()));
    for (const auto& t : large) ASSERT_TRUE(verify(t, sys));
  }
}

TEST(BruteForce, DegenerateGivesFamilyMembersInBox) {
  const auto found = brute_force({2, 8}, 3);
  for (const auto& t : found) EXPECT_TRUE(verify(t, {2, 8}));
  // (2, t, -t) for |t| <= 3 in all arrangements, plus nothing else.
  EXPECT_EQ(found.size(), 18u);
}
