#include <gtest/gtest.h>

#include <map>

#include "schubert/errors.hpp"
#include "schubert/weak_order_graph.hpp"
#include "test_support.hpp"

namespace schubert {
namespace {

Clan K(std::string_view text) { return Clan::parse(text); }

struct GoldenGraph {
  GroupType type;
  int rank;
  std::size_t vertices;
  std::size_t edges;
  std::size_t doubles;
};

// Recorded from build_graph and confirmed by an independent prototype that
// walks the action in a different order.
const GoldenGraph kGolden[] = {
    {GroupType::C, 1, 3, 2, 0},      {GroupType::C, 2, 11, 12, 1},
    {GroupType::C, 3, 45, 70, 6},    {GroupType::C, 4, 201, 408, 33},
    {GroupType::C, 5, 963, 2418, 180}, {GroupType::D, 2, 3, 2, 0},
    {GroupType::D, 3, 10, 12, 0},    {GroupType::D, 4, 38, 64, 0},
    {GroupType::D, 5, 156, 340, 0},
};

TEST(Graph, GoldenCounts) {
  for (const auto& g : kGolden) {
    const auto graph = build_graph(g.type, g.rank);
    const auto name = to_string(GroupSpec{g.type, g.rank});
    EXPECT_EQ(graph.vertices().size(), g.vertices) << name;
    EXPECT_EQ(graph.edges().size(), g.edges) << name;
    EXPECT_EQ(graph.double_edge_count(), g.doubles) << name;
    EXPECT_EQ(graph.top(), dense_orbit_clan(g.type, g.rank)) << name;
    EXPECT_EQ(graph.codim(graph.top()), 0);
  }
}

TEST(Graph, TopAndCodimension) {
  const auto graph = build_graph(GroupType::C, 4);
  EXPECT_EQ(graph.top(), K("1,2,3,4,4,3,2,1"));
  EXPECT_TRUE(graph.out_edges(graph.top()).empty());
  EXPECT_EQ(graph.codim(K("+,-,1,2,2,1,+,-")), 7);
  for (const auto& e : graph.edges()) {
    EXPECT_EQ(graph.codim(e.source), graph.codim(e.target) + 1);
  }
  EXPECT_THROW(graph.codim(K("1,2,1,2")), ArgumentError);
}

TEST(Graph, ValidatesInput) {
  const auto top = K("1,1");
  std::vector<Clan> vertices{K("+,-"), K("-,+"), top};
  std::vector<GraphEdge> edges{{K("+,-"), top, 1, false}};
  // "-,+" cannot reach the top.
  EXPECT_THROW(WeakOrderGraph(GroupType::C, 1, vertices, edges, top), InvariantViolation);
  edges.push_back({K("-,+"), top, 1, false});
  EXPECT_NO_THROW(WeakOrderGraph(GroupType::C, 1, vertices, edges, top));
  edges.push_back({top, K("+,-"), 1, false});
  EXPECT_THROW(WeakOrderGraph(GroupType::C, 1, vertices, edges, top), InvariantViolation);
}

TEST(Brion, Top) {
  const auto graph = build_graph(GroupType::C, 3);
  const auto d = brion_decomposition(graph, graph.top());
  ASSERT_EQ(d.terms.size(), 1u);
  EXPECT_EQ(d.terms.begin()->first, SignedPermutation::identity(GroupType::C, 3));
  EXPECT_EQ(d.terms.begin()->second, 1u);
}

TEST(Brion, TableOne) {
  const auto graph = build_graph(GroupType::C, 4);
  const auto d = brion_decomposition(graph, K("+,-,1,2,2,1,+,-"));
  const std::map<SignedPermutation, std::uint64_t> expected{
      {testing::word(GroupType::C, 4, "3,2,1,4,3,2,1"), 2},
      {testing::word(GroupType::C, 4, "2,1,3,4,3,2,1"), 2},
      {testing::word(GroupType::C, 4, "1,2,3,4,3,2,1"), 2},
      {testing::word(GroupType::C, 4, "4,3,2,1,4,3,2"), 1},
  };
  EXPECT_EQ(d.terms, expected);
}

TEST(Brion, TableThree) {
  const auto graph = build_graph(GroupType::D, 3);
  const auto d = brion_decomposition(graph, K("-,+,-,+,-,+"));
  const std::map<SignedPermutation, std::uint64_t> expected{
      {testing::word(GroupType::D, 3, "2,3,1"), 1},
      {testing::word(GroupType::D, 3, "3,1,2"), 1},
  };
  EXPECT_EQ(d.terms, expected);
}

TEST(Export, DotIsDeterministic) {
  const auto graph = build_graph(GroupType::C, 1);
  const auto dot = export_dot(graph);
  EXPECT_EQ(dot, export_dot(build_graph(GroupType::C, 1)));
  EXPECT_NE(dot.find("\"1,1\" [dense_orbit=true"), std::string::npos);
  EXPECT_NE(dot.find("\"+,-\" -> \"1,1\""), std::string::npos);
  EXPECT_NE(dot.find("\"-,+\" -> \"1,1\""), std::string::npos);

  const auto c2 = export_dot(build_graph(GroupType::C, 2));
  EXPECT_NE(c2.find("\"1,2,1,2\" -> \"1,2,2,1\" [label=\"1\", double=true"),
            std::string::npos);
  const auto d3 = export_dot(build_graph(GroupType::D, 3));
  EXPECT_NE(d3.find("\"1,2,+,-,1,2\" [dense_orbit=true"), std::string::npos);
  EXPECT_EQ(d3.find("double=true"), std::string::npos);
}

TEST(Export, JsonRoundTrip) {
  for (auto [type, rank] : {std::pair{GroupType::C, 3}, std::pair{GroupType::D, 4}}) {
    const auto graph = build_graph(type, rank);
    const auto text = to_json(graph);
    const auto back = graph_from_json(text);
    EXPECT_EQ(back.vertices(), graph.vertices());
    EXPECT_EQ(back.edges(), graph.edges());
    EXPECT_EQ(back.top(), graph.top());
    EXPECT_EQ(to_json(back), text);
  }
  EXPECT_THROW(graph_from_json("{"), ParseError);
  EXPECT_THROW(graph_from_json(R"({"type":"C"})"), ParseError);
}

}  // namespace
}  // namespace schubert
