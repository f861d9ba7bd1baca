#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "lsys/linear_system.hpp"

namespace lsys {

/// 3-uniform hypergraph on the lines of a linear system: {A,B,C} is an edge
/// iff A, B and C have no common point.
///
/// Pairs of disjoint lines are recorded separately. They are the degenerate
/// triples {A,A,B}; a colour class must avoid them too for a class to share
/// a common point, which is what makes the chromatic number equal τ.
class ThreeHypergraph {
 public:
  ThreeHypergraph() = default;

  std::size_t num_vertices() const noexcept { return n_; }
  const std::vector<std::array<std::uint32_t, 3>>& edges() const noexcept { return edges_; }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& disjoint_pairs() const noexcept {
    return disjoint_pairs_;
  }

  bool has_edge(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
    if (a == b || b == c || a == c) return false;
    return third_[a * n_ + b].test(c);
  }

  /// Vertices c with {a,b,c} an edge.
  const LineSet& completions(std::uint32_t a, std::uint32_t b) const { return third_[a * n_ + b]; }

  bool disjoint(std::uint32_t a, std::uint32_t b) const { return disjoint_[a].test(b); }

  friend ThreeHypergraph three_hypergraph(const LinearSystem& sys);

 private:
  std::size_t n_ = 0;
  std::vector<std::array<std::uint32_t, 3>> edges_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> disjoint_pairs_;
  std::vector<LineSet> third_;
  std::vector<LineSet> disjoint_;
};

/// Builds the 3-hypergraph of a system with at least three lines.
inline ThreeHypergraph three_hypergraph(const LinearSystem& sys) {
  const std::size_t n = sys.num_lines();
  if (n < 3) {
    throw Error(ErrorCode::TooFewLines,
                "the 3-hypergraph needs at least 3 lines, got " + std::to_string(n));
  }
  ThreeHypergraph h;
  h.n_ = n;
  h.third_.assign(n * n, LineSet{});
  h.disjoint_.assign(n, LineSet{});
  const auto& masks = sys.line_masks();
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      PointSet ab = masks[a] & masks[b];
      if (ab.none()) {
        h.disjoint_pairs_.emplace_back(a, b);
        h.disjoint_[a].set(b);
        h.disjoint_[b].set(a);
      }
      for (std::uint32_t c = b + 1; c < n; ++c) {
        if ((ab & masks[c]).none()) {
          h.edges_.push_back({a, b, c});
          for (auto [x, y, z] : {std::array{a, b, c}, std::array{b, c, a}, std::array{a, c, b}}) {
            h.third_[x * n + y].set(z);
            h.third_[y * n + x].set(z);
          }
        }
      }
    }
  }
  return h;
}

}  // namespace lsys
