#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "schubert/clan.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

struct GraphEdge {
  Clan source;
  Clan target;
  int label;
  bool is_double;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Weak order on the orbit clans of one type and rank. Edges point from an
/// orbit to the larger orbit obtained by one simple reflection; the dense
/// orbit is the unique sink.
class WeakOrderGraph {
 public:
  /// Validates the data and computes codimensions. Throws
  /// InvariantViolation when an edge endpoint is missing, the top vertex has
  /// an outgoing edge, some vertex cannot reach the top, or codimension does
  /// not drop by one along an edge.
  WeakOrderGraph(GroupType type, int rank, std::vector<Clan> vertices,
                 std::vector<GraphEdge> edges, Clan top);

  GroupType type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<Clan>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const Clan& top() const { return top_; }
  bool contains(const Clan& gamma) const { return index_.count(gamma) != 0; }
  int codim(const Clan& gamma) const;
  /// Edges leaving gamma, ordered by label.
  std::vector<GraphEdge> out_edges(const Clan& gamma) const;
  std::size_t double_edge_count() const;

 private:
  GroupType type_;
  int rank_;
  std::vector<Clan> vertices_;
  std::vector<GraphEdge> edges_;
  Clan top_;
  std::unordered_map<Clan, std::size_t> index_;
  std::vector<int> codim_;
  std::vector<std::vector<std::size_t>> out_;
};

WeakOrderGraph build_graph(GroupType type, int rank);

/// Expansion of an orbit-closure class in Schubert classes:
/// terms[w] = 2^D for each w of length codim(source) that carries source to
/// the dense orbit, D being the number of double edges on the way.
struct BrionDecomposition {
  Clan source;
  std::map<SignedPermutation, std::uint64_t> terms;
};

BrionDecomposition brion_decomposition(const WeakOrderGraph& graph, const Clan& gamma);

/// Graphviz text with vertices and edges sorted by their text forms.
std::string export_dot(const WeakOrderGraph& graph);

/// {"type","rank","top","vertices":[...],"edges":[{"src","dst","label","double"}]}
std::string to_json(const WeakOrderGraph& graph);
WeakOrderGraph graph_from_json(std::string_view text);

}  // namespace schubert
