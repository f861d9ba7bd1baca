#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include "lsys/linear_system.hpp"

namespace lsys {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;  // first < second

/// Simple undirected graph; self-loops and repeated edges are rejected.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t num_vertices, std::vector<Edge> edges,
        std::optional<std::vector<std::uint8_t>> bipartition = std::nullopt)
      : n_(num_vertices), adj_(num_vertices), bipartition_(std::move(bipartition)) {
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
      if (u >= n_ || v >= n_) throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range");
      if (u == v) throw Error(ErrorCode::InvalidGraph, "self-loop at " + std::to_string(u));
      Edge e = std::minmax(u, v);
      if (!seen.insert(e).second) {
        throw Error(ErrorCode::InvalidGraph, "repeated edge " + std::to_string(e.first) + "-" +
                                                 std::to_string(e.second));
      }
      if (bipartition_ && (*bipartition_)[u] == (*bipartition_)[v]) {
        throw Error(ErrorCode::InvalidGraph, "edge inside one side of the bipartition");
      }
      edges_.push_back(e);
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    if (bipartition_ && bipartition_->size() != n_) {
      throw Error(ErrorCode::InvalidGraph, "bipartition size mismatch");
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  const std::optional<std::vector<std::uint8_t>>& bipartition() const noexcept {
    return bipartition_;
  }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::optional<std::vector<std::uint8_t>> bipartition_;
};

/// A subdivision of K5 or K3,3: branch vertices joined by internally
/// disjoint paths. Each path lists its vertices from one branch vertex to
/// another.
struct KuratowskiWitness {
  enum class Kind { K5, K33 };
  Kind kind = Kind::K5;
  std::vector<Vertex> branch_vertices;
  std::vector<std::vector<Vertex>> paths;
};

struct PlanarityVerdict {
  bool planar = false;
  /// Rotation system: cyclic neighbour order around each vertex.
  std::optional<std::vector<std::vector<Vertex>>> embedding;
  std::optional<KuratowskiWitness> witness;
};

/// Bipartite point/line incidence graph: points are vertices 0..n-1, line
/// l is vertex n+l.
inline Graph incidence_graph(const LinearSystem& sys) {
  const std::size_t n = sys.num_points();
  std::vector<Edge> edges;
  for (std::size_t l = 0; l < sys.num_lines(); ++l) {
    for (PointId p : sys.line(static_cast<LineIndex>(l))) {
      edges.emplace_back(p, static_cast<Vertex>(n + l));
    }
  }
  std::vector<std::uint8_t> side(n + sys.num_lines(), 0);
  std::fill(side.begin() + static_cast<std::ptrdiff_t>(n), side.end(), 1);
  return Graph(n + sys.num_lines(), std::move(edges), std::move(side));
}

namespace detail {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

inline BoostGraph to_boost(std::size_t n, const std::vector<Edge>& edges) {
  BoostGraph g(n);
  for (auto [u, v] : edges) boost::add_edge(u, v, g);
  auto index = boost::get(boost::edge_index, g);
  int i = 0;
  for (auto [it, end] = boost::edges(g); it != end; ++it) boost::put(index, *it, i++);
  return g;
}

inline bool boost_planar(std::size_t n, const std::vector<Edge>& edges) {
  BoostGraph g = to_boost(n, edges);
  return boost::boyer_myrvold_planarity_test(g);
}

// Identifies a minimal non-planar edge set as a K5 or K3,3 subdivision by
// tracing degree-2 chains between branch vertices.
inline std::optional<KuratowskiWitness> trace_subdivision(std::size_t n,
                                                          const std::vector<Edge>& edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  KuratowskiWitness w;
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].size() >= 3) w.branch_vertices.push_back(static_cast<Vertex>(v));
  }
  std::set<Vertex> branch(w.branch_vertices.begin(), w.branch_vertices.end());
  std::set<std::pair<Vertex, Vertex>> used_first_edge;
  for (Vertex b : w.branch_vertices) {
    for (Vertex next : adj[b]) {
      if (used_first_edge.count({b, next})) continue;
      std::vector<Vertex> path{b};
      Vertex prev = b, cur = next;
      while (!branch.count(cur)) {
        if (adj[cur].size() != 2) return std::nullopt;
        path.push_back(cur);
        Vertex nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
      }
      path.push_back(cur);
      used_first_edge.insert({b, next});
      used_first_edge.insert({cur, prev});
      w.paths.push_back(std::move(path));
    }
  }
  if (w.branch_vertices.size() == 5 && w.paths.size() == 10) {
    w.kind = KuratowskiWitness::Kind::K5;
  } else if (w.branch_vertices.size() == 6 && w.paths.size() == 9) {
    w.kind = KuratowskiWitness::Kind::K33;
  } else {
    return std::nullopt;
  }
  return w;
}

}  // namespace detail

/// Decides planarity. Planar graphs come with a rotation system; non-planar
/// graphs with a K5 or K3,3 subdivision obtained from the Boyer-Myrvold
/// Kuratowski subgraph, reduced to a deletion-minimal non-planar edge set.
inline PlanarityVerdict is_planar(const Graph& g) {
  using namespace detail;
  BoostGraph bg = to_boost(g.num_vertices(), g.edges());
  using EmbeddingStorage = std::vector<std::vector<BoostEdge>>;
  EmbeddingStorage storage(boost::num_vertices(bg));
  auto embedding = boost::make_iterator_property_map(storage.begin(),
                                                     boost::get(boost::vertex_index, bg));
  std::vector<BoostEdge> kuratowski;
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg, boost::boyer_myrvold_params::embedding = embedding,
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  PlanarityVerdict verdict;
  verdict.planar = planar;
  if (planar) {
    std::vector<std::vector<Vertex>> rotation(g.num_vertices());
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      for (const auto& e : storage[v]) {
        auto s = static_cast<Vertex>(boost::source(e, bg));
        auto t = static_cast<Vertex>(boost::target(e, bg));
        rotation[v].push_back(s == v ? t : s);
      }
    }
    verdict.embedding = std::move(rotation);
    return verdict;
  }

  std::vector<Edge> sub;
  for (const auto& e : kuratowski) {
    sub.push_back(std::minmax(static_cast<Vertex>(boost::source(e, bg)),
                              static_cast<Vertex>(boost::target(e, bg))));
  }
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  if (boost_planar(g.num_vertices(), sub)) sub = g.edges();  // not expected; fall back
  // Drop every edge whose removal keeps the set non-planar.
  for (std::size_t i = 0; i < sub.size();) {
    std::vector<Edge> trial = sub;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!boost_planar(g.num_vertices(), trial)) {
      sub = std::move(trial);
    } else {
      ++i;
    }
  }
  verdict.witness = trace_subdivision(g.num_vertices(), sub);
  return verdict;
}

/// Non-planarity of the incidence graph rules out a straight-line drawing
/// of the system in the plane.
inline PlanarityVerdict zykov_planar(const LinearSystem& sys) {
  return is_planar(incidence_graph(sys));
}

namespace detail {

inline bool validate_rotation(const Graph& g, const std::vector<std::vector<Vertex>>& rot) {
  const std::size_t n = g.num_vertices();
  if (rot.size() != n) return false;
  // Position of each neighbour in the rotation of v.
  std::vector<std::map<Vertex, std::size_t>> where(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Vertex> sorted = rot[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(static_cast<Vertex>(v))) return false;
    for (std::size_t i = 0; i < rot[v].size(); ++i) where[v][rot[v][i]] = i;
  }
  // Faces are orbits of the dart map (u,v) -> (v, successor of u around v).
  std::set<std::pair<Vertex, Vertex>> seen;
  std::size_t faces = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (Vertex v : rot[u]) {
      if (seen.count({static_cast<Vertex>(u), v})) continue;
      ++faces;
      Vertex a = static_cast<Vertex>(u), b = v;
      while (seen.insert({a, b}).second) {
        const auto& around = rot[b];
        Vertex c = around[(where[b][a] + 1) % around.size()];
        a = b;
        b = c;
      }
    }
  }
  // Components, counting isolated vertices as components with one face.
  std::vector<int> comp(n, -1);
  std::size_t components = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{static_cast<Vertex>(s)};
    comp[s] = static_cast<int>(components);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (comp[y] < 0) {
          comp[y] = static_cast<int>(components);
          stack.push_back(y);
        }
      }
    }
    ++components;
    if (g.neighbors(static_cast<Vertex>(s)).empty()) ++faces;
  }
  // Euler per component: V - E + F = 2, summed over components.
  const long long lhs = static_cast<long long>(n) - static_cast<long long>(g.num_edges()) +
                        static_cast<long long>(faces);
  return lhs == 2 * static_cast<long long>(components);
}

inline bool validate_witness(const Graph& g, const KuratowskiWitness& w) {
  std::set<Vertex> branch(w.branch_vertices.begin(), w.branch_vertices.end());
  const bool k5 = w.kind == KuratowskiWitness::Kind::K5;
  if (branch.size() != w.branch_vertices.size()) return false;
  if (branch.size() != (k5 ? 5u : 6u) || w.paths.size() != (k5 ? 10u : 9u)) return false;
  std::set<Vertex> interior_used;
  std::set<std::pair<Vertex, Vertex>> joined;
  std::map<Vertex, std::vector<Vertex>> partner;
  for (const auto& path : w.paths) {
    if (path.size() < 2) return false;
    Vertex a = path.front(), b = path.back();
    if (!branch.count(a) || !branch.count(b) || a == b) return false;
    if (!joined.insert(std::minmax(a, b)).second) return false;
    partner[a].push_back(b);
    partner[b].push_back(a);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!g.has_edge(path[i], path[i + 1])) return false;
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (branch.count(path[i]) || !interior_used.insert(path[i]).second) return false;
    }
  }
  if (k5) return joined.size() == 10;  // all pairs of five, each once
  // K3,3: two-colour the branch vertices along the paths.
  std::map<Vertex, int> colour;
  std::vector<Vertex> stack{*branch.begin()};
  colour[*branch.begin()] = 0;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : partner[x]) {
      auto it = colour.find(y);
      if (it == colour.end()) {
        colour[y] = 1 - colour[x];
        stack.push_back(y);
      } else if (it->second == colour[x]) {
        return false;
      }
    }
  }
  if (colour.size() != 6) return false;
  int zeros = 0;
  for (auto& [v, c] : colour) zeros += c == 0;
  return zeros == 3;  // 9 distinct cross pairs of a 3+3 split is all of them
}

}  // namespace detail

/// Re-checks a verdict independently of how it was produced: a rotation
/// system must satisfy Euler's formula; a witness must be a genuine K5 or
/// K3,3 subdivision inside `g`.
inline bool validate_verdict(const Graph& g, const PlanarityVerdict& v) {
  if (v.planar) return v.embedding && detail::validate_rotation(g, *v.embedding);
  return v.witness && detail::validate_witness(g, *v.witness);
}

}  // namespace lsys
