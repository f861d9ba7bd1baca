// Test-only brute-force oracles. None of these share code paths with the
// library searches they are used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "lsys/constructions.hpp"
#include "lsys/linear_system.hpp"
#include "lsys/planarity.hpp"

namespace oracle {

using lsys::Line;
using lsys::LinearSystem;
using lsys::PointId;

inline std::set<Line> line_set(const std::vector<Line>& lines) {
  return {lines.begin(), lines.end()};
}

inline std::vector<Line> mapped_lines(const LinearSystem& sys, const std::vector<PointId>& perm) {
  std::vector<Line> out;
  for (const auto& l : sys.lines()) {
    Line m;
    for (PointId p : l) m.push_back(perm[p]);
    std::sort(m.begin(), m.end());
    out.push_back(m);
  }
  return out;
}

/// Exact hypergraph isomorphism by trying every point bijection.
inline bool isomorphic_exact(const LinearSystem& a, const LinearSystem& b) {
  if (a.num_points() != b.num_points() || a.num_lines() != b.num_lines()) return false;
  std::vector<PointId> perm(a.num_points());
  std::iota(perm.begin(), perm.end(), 0u);
  const auto target = line_set(b.lines());
  do {
    if (line_set(mapped_lines(a, perm)) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Drops points of degree <= 1 by hand (no shared code with the library).
inline LinearSystem prune(const LinearSystem& sys) {
  std::vector<int> deg(sys.num_points(), 0);
  for (const auto& l : sys.lines())
    for (PointId p : l) ++deg[p];
  std::vector<int> id(sys.num_points(), -1);
  int next = 0;
  for (std::size_t p = 0; p < sys.num_points(); ++p)
    if (deg[p] >= 2) id[p] = next++;
  std::set<Line> lines;
  for (const auto& l : sys.lines()) {
    Line r;
    for (PointId p : l)
      if (id[p] >= 0) r.push_back(static_cast<PointId>(id[p]));
    if (!r.empty()) lines.insert(r);
  }
  return LinearSystem(static_cast<std::size_t>(next), {lines.begin(), lines.end()});
}

/// Does some injection of a's points into b's points make every line of a
/// the exact trace of some b line on the image?
inline bool embeds_exact(const LinearSystem& a, const LinearSystem& b) {
  const std::size_t na = a.num_points(), nb = b.num_points();
  if (na > nb) return false;
  std::vector<PointId> img(na);
  std::vector<bool> used(nb, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == na) {
      std::set<PointId> image(img.begin(), img.end());
      for (const auto& l : a.lines()) {
        std::set<PointId> want;
        for (PointId p : l) want.insert(img[p]);
        bool ok = false;
        for (const auto& h : b.lines()) {
          std::set<PointId> trace;
          for (PointId y : h)
            if (image.count(y)) trace.insert(y);
          if (trace == want) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
      return true;
    }
    for (std::size_t y = 0; y < nb; ++y) {
      if (used[y]) continue;
      used[y] = true;
      img[i] = static_cast<PointId>(y);
      if (rec(i + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  return rec(0);
}

/// Random point relabeling and line reordering.
inline LinearSystem shuffled(const LinearSystem& sys, std::mt19937_64& rng) {
  std::vector<PointId> perm(sys.num_points());
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto lines = mapped_lines(sys, perm);
  std::shuffle(lines.begin(), lines.end(), rng);
  return LinearSystem(sys.num_points(), lines);
}

/// random_linear_system with fresh seeds until generation succeeds.
inline LinearSystem random_system(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                  std::size_t lo, std::size_t hi) {
  for (int attempt = 0;; ++attempt) {
    try {
      return lsys::random_linear_system(n, m, lo, hi, rng());
    } catch (const lsys::Error&) {
      if (attempt == 1000) throw;
    }
  }
}

// --- planarity -----------------------------------------------------------

/// Searches for a K5 or K3,3 subdivision in a graph with at most 8
/// vertices. By Kuratowski's theorem the graph is planar iff none exists.
inline bool has_kuratowski_subdivision(const lsys::Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;

  // Connect the listed branch pairs with internally disjoint paths whose
  // interiors avoid branch vertices.
  auto connect_all = [&](const std::vector<std::pair<int, int>>& pairs,
                         std::vector<bool> blocked) -> bool {
    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
      if (k == pairs.size()) return true;
      auto [s, t] = pairs[k];
      std::function<bool(int)> walk = [&](int x) -> bool {
        for (std::size_t y = 0; y < n; ++y) {
          if (!adj[x][y]) continue;
          if (static_cast<int>(y) == t) {
            if (rec(k + 1)) return true;
            continue;
          }
          if (blocked[y]) continue;
          blocked[y] = true;
          if (walk(static_cast<int>(y))) return true;
          blocked[y] = false;
        }
        return false;
      };
      return walk(s);
    };
    return rec(0);
  };

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  // K5
  if (n >= 5) {
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - 5, pick.end(), true);
    do {
      std::vector<int> b;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) b.push_back(static_cast<int>(i));
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) pairs.emplace_back(b[i], b[j]);
      std::vector<bool> blocked(n, false);
      for (int v : b) blocked[v] = true;
      if (connect_all(pairs, blocked)) return true;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  // K3,3
  if (n >= 6) {
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - 6, pick.end(), true);
    do {
      std::vector<int> b;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) b.push_back(static_cast<int>(i));
      for (int mask = 0; mask < 64; ++mask) {
        if (__builtin_popcount(mask) != 3 || !(mask & 1)) continue;
        std::vector<int> left, right;
        for (int i = 0; i < 6; ++i) (mask >> i & 1 ? left : right).push_back(b[i]);
        std::vector<std::pair<int, int>> pairs;
        for (int x : left)
          for (int y : right) pairs.emplace_back(x, y);
        std::vector<bool> blocked(n, false);
        for (int v : b) blocked[v] = true;
        if (connect_all(pairs, blocked)) return true;
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return false;
}

inline lsys::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<lsys::Edge> edges;
  for (lsys::Vertex u = 0; u < n; ++u)
    for (lsys::Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return lsys::Graph(n, edges);
}

inline lsys::Graph complete_graph(std::size_t n) {
  std::vector<lsys::Edge> edges;
  for (lsys::Vertex u = 0; u < n; ++u)
    for (lsys::Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return lsys::Graph(n, edges);
}

}  // namespace oracle
