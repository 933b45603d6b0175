#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "schubert/clan.hpp"
#include "schubert/errors.hpp"

namespace schubert {
namespace {

Clan K(std::string_view text) { return Clan::parse(text); }

TEST(ClanParse, Normalization) {
  EXPECT_EQ(K("5,7,5,7").to_string(), "1,2,1,2");
  EXPECT_EQ(K("+,-").to_string(), "+,-");
  EXPECT_EQ(K("2,1,1,2").to_string(), "1,2,2,1");
  EXPECT_NE(K("1,2,1,2"), K("1,2,2,1"));
  EXPECT_EQ(K("+-1221+-"), K("(+,−,1,2,2,1,+,−)"));
  EXPECT_EQ(K("+,-,1,2,2,1,+,-").size(), 8u);
}

TEST(ClanParse, Errors) {
  EXPECT_THROW(K("1,2,1"), ParseError);
  EXPECT_THROW(K("1,1,1"), ParseError);
  EXPECT_THROW(K("1,,1"), ParseError);
  EXPECT_THROW(K("+,x"), ParseError);
}

TEST(ClanParse, SignatureCheck) {
  const std::vector<Symbol> raw{Symbol::plus(), Symbol::arc(4), Symbol::arc(4), Symbol::minus()};
  EXPECT_NO_THROW(normalize(raw, std::pair{2, 2}));
  EXPECT_THROW(normalize(raw, std::pair{3, 1}), ArgumentError);
}

TEST(ClanAccessors, CountsAndMates) {
  const auto g = K("+,-,1,2,2,1,+,-");
  EXPECT_EQ(g.plus_count(), 2);
  EXPECT_EQ(g.minus_count(), 2);
  EXPECT_EQ(g.arc_count(), 2);
  EXPECT_EQ(g.mate(2), 5u);
  EXPECT_EQ(g.mate(3), 4u);
  EXPECT_TRUE(g.is_plus(0));
  EXPECT_TRUE(g.is_minus(1));
  EXPECT_EQ(g.swapped(1, 2).to_string(), "+,1,-,2,2,1,+,-");
  EXPECT_EQ(K("+,-").joined(0, 1).to_string(), "1,1");
}

TEST(Patterns, Avoidance) {
  EXPECT_FALSE(avoids_pattern(K("1,2,1,2"), crossing_pattern()));
  EXPECT_TRUE(avoids_pattern(K("+,-,1,1,2,2"), crossing_pattern()));
  EXPECT_FALSE(avoids_pattern(K("1,2,2,1"), K("1,1")));
  EXPECT_TRUE(avoids_pattern(K("+,+,-"), K("-,-")));
  EXPECT_FALSE(avoids_pattern(K("1,+,2,1,2"), crossing_pattern()));
}

TEST(Predicates, SkewSymmetry) {
  EXPECT_TRUE(is_skew_symmetric(K("+,-,1,2,2,1,+,-")));
  EXPECT_FALSE(is_skew_symmetric(K("+,+")));
  EXPECT_TRUE(is_skew_symmetric(K("1,2,1,2")));
  EXPECT_FALSE(is_skew_symmetric(K("+,-,-")));
}

TEST(Predicates, TypeD) {
  EXPECT_TRUE(is_type_d_clan(K("+,1,-,1,2,+,2,-")));
  EXPECT_FALSE(is_type_d_clan(K("1,2,2,1")));
  EXPECT_TRUE(is_type_d_clan(K("-,+,-,+,-,+")));
  // Skew-symmetric with one minus in the first half: parity fails.
  EXPECT_FALSE(is_type_d_clan(K("-,+")));
  EXPECT_TRUE(is_type_d_clan(K("+,-")));
}

TEST(DenseOrbit, Formula) {
  EXPECT_EQ(dense_orbit_clan(GroupType::C, 4), K("1,2,3,4,4,3,2,1"));
  EXPECT_EQ(dense_orbit_clan(GroupType::D, 4), K("1,2,3,4,3,4,1,2"));
  EXPECT_EQ(dense_orbit_clan(GroupType::D, 3), K("1,2,+,-,1,2"));
  EXPECT_EQ(dense_orbit_clan(GroupType::C, 1), K("1,1"));
  for (int n = 2; n <= 6; ++n) {
    EXPECT_TRUE(is_orbit_clan(GroupType::C, dense_orbit_clan(GroupType::C, n)));
    EXPECT_TRUE(is_orbit_clan(GroupType::D, dense_orbit_clan(GroupType::D, n)));
  }
}

TEST(Enumeration, RankOne) {
  const auto clans = enumerate_clans(GroupType::C, 1);
  const std::set<Clan> got(clans.begin(), clans.end());
  EXPECT_EQ(got, (std::set<Clan>{K("+,-"), K("-,+"), K("1,1")}));
}

// Golden values produced by enumeration and confirmed by reachability in
// the weak order graph.
TEST(Enumeration, GoldenCounts) {
  const std::vector<std::pair<int, std::size_t>> c{{1, 3}, {2, 11}, {3, 45}, {4, 201}, {5, 963}};
  for (auto [n, count] : c) EXPECT_EQ(enumerate_clans(GroupType::C, n).size(), count) << n;
  const std::vector<std::pair<int, std::size_t>> d{{2, 3}, {3, 10}, {4, 38}, {5, 156}};
  for (auto [n, count] : d) EXPECT_EQ(enumerate_clans(GroupType::D, n).size(), count) << n;
}

TEST(Enumeration, SatisfiesPredicatesWithoutDuplicates) {
  for (auto type : {GroupType::C, GroupType::D}) {
    for (int n = 2; n <= 4; ++n) {
      const auto clans = enumerate_clans(type, n);
      EXPECT_TRUE(std::is_sorted(clans.begin(), clans.end()));
      EXPECT_EQ(std::set<Clan>(clans.begin(), clans.end()).size(), clans.size());
      for (const auto& g : clans) {
        EXPECT_EQ(g.size(), static_cast<std::size_t>(2 * n));
        EXPECT_TRUE(is_orbit_clan(type, g)) << g.to_string();
      }
    }
  }
}

}  // namespace
}  // namespace schubert
