#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "schubert/errors.hpp"
#include "schubert/structure_constants.hpp"
#include "test_support.hpp"

namespace schubert {
namespace {

using testing::C;
using testing::D;

TEST(Constant, TableExamples) {
  const auto u = C("-4,1,2,3");
  const auto v = C("1,-4,2,3");
  EXPECT_EQ(schubert_constant(u, v, testing::word(GroupType::C, 4, "3,2,1,4,3,2,1")), 2u);
  EXPECT_EQ(schubert_constant(u, v, testing::word(GroupType::C, 4, "4,3,2,1,4,3,2")), 1u);

  const auto du = D("-4,1,2,-3");
  const auto dv = D("1,2,-4,-3");
  EXPECT_EQ(schubert_constant(du, dv, testing::word(GroupType::D, 4, "2,4,2,1")), 1u);
  EXPECT_EQ(schubert_constant(du, dv, testing::word(GroupType::D, 4, "1,3,2,1")), 0u);

  EXPECT_EQ(schubert_constant(D("1,3,2"), D("-3,1,-2"), testing::word(GroupType::D, 3, "2,3,1")),
            1u);
  EXPECT_EQ(schubert_constant(D("1,3,2"), D("-3,1,-2"), testing::word(GroupType::D, 3, "1,2,1")),
            0u);
}

TEST(Constant, LengthMismatchIsZero) {
  EXPECT_EQ(schubert_constant(C("-4,1,2,3"), C("1,-4,2,3"), C("1,2,3,4")), 0u);
}

TEST(Constant, IdentityFactor) {
  const auto e = SignedPermutation::identity(GroupType::C, 3);
  for (const auto& u : all_elements(GroupType::C, 3)) {
    for (const auto& w : enumerate_by_length(GroupType::C, 3, length(u))) {
      EXPECT_EQ(schubert_constant(u, e, w), w == u ? 1u : 0u);
      EXPECT_EQ(schubert_constant(e, u, w), w == u ? 1u : 0u);
    }
  }
}

TEST(Constant, UnsupportedPairs) {
  EXPECT_THROW(schubert_constant(C("2,1,3"), C("2,1,3"), C("1,2,3")), UnsupportedPair);
  EXPECT_THROW(schubert_constant(C("1,2"), C("1,2,3"), C("1,2,3")), ArgumentError);
}

TEST(Product, Examples) {
  const auto c = schubert_product(C("-4,1,2,3"), C("1,-4,2,3"));
  ASSERT_EQ(c.terms.size(), 4u);
  std::multiset<std::uint64_t> coefficients;
  for (const auto& [w, k] : c.terms) coefficients.insert(k);
  EXPECT_EQ(coefficients, (std::multiset<std::uint64_t>{1, 2, 2, 2}));

  const auto d = schubert_product(D("-4,1,2,-3"), D("1,2,-4,-3"));
  ASSERT_EQ(d.terms.size(), 1u);
  EXPECT_EQ(d.terms.begin()->first, testing::word(GroupType::D, 4, "2,4,2,1"));
  EXPECT_EQ(d.terms.begin()->second, 1u);
}

TEST(Product, IdentityFactor) {
  const auto u = C("-4,1,2,3");
  const auto p = schubert_product(u, SignedPermutation::identity(GroupType::C, 4));
  ASSERT_EQ(p.terms.size(), 1u);
  EXPECT_EQ(p.terms.begin()->first, u);
  EXPECT_EQ(p.terms.begin()->second, 1u);
}

TEST(Product, ThreadCountDoesNotMatter) {
  const auto u = C("-4,1,2,3");
  const auto v = C("1,-4,2,3");
  const auto one = schubert_product(u, v, 1);
  for (unsigned t : {2u, 3u, 8u}) {
    EXPECT_EQ(schubert_product(u, v, t).terms, one.terms);
    EXPECT_EQ(to_json(schubert_product(u, v, t)), to_json(one));
  }
}

TEST(Product, RowsCoverTheLengthLevel) {
  const auto rows = product_rows(C("-4,1,2,3"), C("1,-4,2,3"));
  EXPECT_EQ(rows.size(), 44u);
  EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end(),
                             [](const auto& a, const auto& b) { return a.word < b.word; }));
  std::size_t nonzero = 0;
  for (const auto& r : rows) nonzero += r.coefficient != 0 ? 1 : 0;
  EXPECT_EQ(nonzero, 4u);
}

TEST(Product, Json) {
  const auto json = to_json(schubert_product(D("1,3,2"), D("-3,1,-2")));
  EXPECT_EQ(json.find("{\n  \"type\": \"D\",\n  \"rank\": 3,"), 0u);
  EXPECT_NE(json.find("\"coeff\": 1"), std::string::npos);
}

}  // namespace
}  // namespace schubert
