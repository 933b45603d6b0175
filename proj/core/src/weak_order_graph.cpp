#include "schubert/weak_order_graph.hpp"

#include <algorithm>
#include <deque>
#include <tuple>
#include <nlohmann/json.hpp>

#include "schubert/errors.hpp"
#include "schubert/monoid_action.hpp"

namespace schubert {

WeakOrderGraph::WeakOrderGraph(GroupType type, int rank, std::vector<Clan> vertices,
                               std::vector<GraphEdge> edges, Clan top)
    : type_(type), rank_(rank), vertices_(std::move(vertices)), edges_(std::move(edges)),
      top_(std::move(top)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);
  if (!contains(top_)) throw InvariantViolation("top clan is not a vertex");

  auto find = [this](const Clan& c) {
    const auto it = index_.find(c);
    if (it == index_.end()) {
      throw InvariantViolation("edge endpoint " + c.to_string() + " is not a vertex");
    }
    return it->second;
  };
  std::sort(edges_.begin(), edges_.end(), [&](const GraphEdge& a, const GraphEdge& b) {
    const auto ia = find(a.source);
    const auto ib = find(b.source);
    return ia != ib ? ia < ib : a.label < b.label;
  });

  out_.assign(vertices_.size(), {});
  std::vector<std::vector<std::size_t>> in(vertices_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto s = find(edges_[e].source);
    const auto t = find(edges_[e].target);
    out_[s].push_back(e);
    in[t].push_back(s);
  }
  const auto top_index = index_.at(top_);
  if (!out_[top_index].empty()) throw InvariantViolation("top clan has an outgoing edge");

  codim_.assign(vertices_.size(), -1);
  codim_[top_index] = 0;
  std::deque<std::size_t> queue{top_index};
  while (!queue.empty()) {
    const auto t = queue.front();
    queue.pop_front();
    for (auto s : in[t]) {
      if (codim_[s] < 0) {
        codim_[s] = codim_[t] + 1;
        queue.push_back(s);
      }
    }
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (codim_[v] < 0) {
      throw InvariantViolation("clan " + vertices_[v].to_string() + " cannot reach the top");
    }
  }
  for (const auto& e : edges_) {
    if (codim_[find(e.source)] != codim_[find(e.target)] + 1) {
      throw InvariantViolation("edge " + e.source.to_string() + " -> " +
                               e.target.to_string() + " does not drop codimension by one");
    }
  }
}

int WeakOrderGraph::codim(const Clan& gamma) const {
  const auto it = index_.find(gamma);
  if (it == index_.end()) {
    throw ArgumentError("clan " + gamma.to_string() + " is not a vertex of the graph");
  }
  return codim_[it->second];
}

std::vector<GraphEdge> WeakOrderGraph::out_edges(const Clan& gamma) const {
  const auto it = index_.find(gamma);
  if (it == index_.end()) {
    throw ArgumentError("clan " + gamma.to_string() + " is not a vertex of the graph");
  }
  std::vector<GraphEdge> out;
  for (auto e : out_[it->second]) out.push_back(edges_[e]);
  return out;
}

std::size_t WeakOrderGraph::double_edge_count() const {
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [](const GraphEdge& e) { return e.is_double; }));
}

WeakOrderGraph build_graph(GroupType type, int rank) {
  auto vertices = enumerate_clans(type, rank);
  std::vector<GraphEdge> edges;
  for (const auto& gamma : vertices) {
    for (int i = 1; i <= rank; ++i) {
      auto step = act_simple(type, i, gamma);
      if (step.moved) {
        edges.push_back({gamma, std::move(step.output), i, step.is_double});
      }
    }
  }
  return WeakOrderGraph(type, rank, std::move(vertices), std::move(edges),
                        dense_orbit_clan(type, rank));
}

BrionDecomposition brion_decomposition(const WeakOrderGraph& graph, const Clan& gamma) {
  BrionDecomposition result{gamma, {}};
  const int d = graph.codim(gamma);
  for (const auto& w : enumerate_by_length(graph.type(), graph.rank(), d)) {
    const auto reached = act_word(graph.type(), reduced_word(w), gamma);
    if (reached.clan != graph.top()) continue;
#ifndef NDEBUG
    for (const auto& word : all_reduced_words(w)) {
      const auto other = act_word(graph.type(), word, gamma);
      if (other.clan != reached.clan || other.doubles != reached.doubles) {
        throw InvariantViolation("action of " + w.to_string() + " depends on the word");
      }
    }
#endif
    result.terms.emplace(w, std::uint64_t{1} << reached.doubles);
  }
  return result;
}

std::string export_dot(const WeakOrderGraph& graph) {
  std::vector<std::string> names;
  for (const auto& v : graph.vertices()) names.push_back(v.to_string());
  std::sort(names.begin(), names.end());
  struct Line {
    std::string src, dst;
    int label;
    bool is_double;
  };
  std::vector<Line> lines;
  for (const auto& e : graph.edges()) {
    lines.push_back({e.source.to_string(), e.target.to_string(), e.label, e.is_double});
  }
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    return std::tie(a.src, a.label) < std::tie(b.src, b.label);
  });

  const auto top = graph.top().to_string();
  std::string out = "digraph \"" + to_string(GroupSpec{graph.type(), graph.rank()}) +
                    "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& name : names) {
    out += "  \"" + name + "\"";
    if (name == top) out += " [dense_orbit=true, peripheries=2]";
    out += ";\n";
  }
  for (const auto& line : lines) {
    out += "  \"" + line.src + "\" -> \"" + line.dst + "\" [label=\"" +
           std::to_string(line.label) + "\"";
    if (line.is_double) out += ", double=true, color=\"black:black\"";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

std::string to_json(const WeakOrderGraph& graph) {
  nlohmann::ordered_json doc;
  doc["type"] = std::string(1, to_char(graph.type()));
  doc["rank"] = graph.rank();
  doc["top"] = graph.top().to_string();
  auto& vertices = doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : graph.vertices()) vertices.push_back(v.to_string());
  auto& edges = doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : graph.edges()) {
    nlohmann::ordered_json edge;
    edge["src"] = e.source.to_string();
    edge["dst"] = e.target.to_string();
    edge["label"] = e.label;
    edge["double"] = e.is_double;
    edges.push_back(std::move(edge));
  }
  return doc.dump(2) + "\n";
}

WeakOrderGraph graph_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    const auto spec = parse_group(doc.at("type").get<std::string>() +
                                  std::to_string(doc.at("rank").get<int>()));
    std::vector<Clan> vertices;
    for (const auto& v : doc.at("vertices")) vertices.push_back(Clan::parse(v.get<std::string>()));
    std::vector<GraphEdge> edges;
    for (const auto& e : doc.at("edges")) {
      edges.push_back({Clan::parse(e.at("src").get<std::string>()),
                       Clan::parse(e.at("dst").get<std::string>()), e.at("label").get<int>(),
                       e.at("double").get<bool>()});
    }
    return WeakOrderGraph(spec.type, spec.rank, std::move(vertices), std::move(edges),
                          Clan::parse(doc.at("top").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace schubert
