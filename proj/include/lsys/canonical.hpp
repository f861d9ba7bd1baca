#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "lsys/linear_system.hpp"

namespace lsys {

/// Isomorphism-invariant label of a linear system after removing points of
/// degree at most one. Equal labels iff the pruned systems are isomorphic.
struct CanonicalForm {
  std::string label;
  std::pair<std::size_t, std::size_t> pruned_sizes;  // (points, lines)

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    return a.label <=> b.label;
  }
};

namespace detail {

// Individualization-refinement canonical labeling of the point/line
// incidence graph. Points start in one cell and lines in another, so leaves
// place points at positions 0..n-1 and lines at n..n+m-1. The label is the
// lexicographically smallest incidence matrix over all leaves; subtrees
// equivalent under automorphisms discovered along the way are skipped.
class CanonicalLabeler {
 public:
  explicit CanonicalLabeler(const LinearSystem& sys)
      : n_(sys.num_points()), m_(sys.num_lines()), adj_(n_ + m_) {
    for (std::size_t l = 0; l < m_; ++l) {
      for (PointId p : sys.line(static_cast<LineIndex>(l))) {
        adj_[p].push_back(static_cast<int>(n_ + l));
        adj_[n_ + l].push_back(static_cast<int>(p));
      }
    }
  }

  /// Returns (label, vertex -> position) for the canonical leaf.
  std::pair<std::string, std::vector<int>> run() {
    std::vector<int> cell(n_ + m_);
    for (std::size_t v = 0; v < n_ + m_; ++v) cell[v] = v < n_ ? 0 : 1;
    if (n_ == 0 || m_ == 0) {
      // Nothing to refine against; cells are still ordered points-first.
      for (std::size_t v = 0; v < n_ + m_; ++v) cell[v] = static_cast<int>(v);
    }
    refine(cell);
    std::vector<int> path;
    search(cell, path);
    return {header() + best_cert_, best_pos_};
  }

 private:
  std::string header() const {
    std::string h;
    auto put = [&h](std::size_t x) {
      h.push_back(static_cast<char>(x & 0xff));
      h.push_back(static_cast<char>((x >> 8) & 0xff));
    };
    put(n_);
    put(m_);
    return h;
  }

  static int num_cells(const std::vector<int>& cell) {
    return cell.empty() ? 0 : *std::max_element(cell.begin(), cell.end()) + 1;
  }

  // Equitable refinement: split cells by the multiset of neighbour cells
  // until stable. Cell order is preserved (old cell index is the primary key).
  void refine(std::vector<int>& cell) const {
    const std::size_t nv = cell.size();
    std::vector<std::pair<std::vector<int>, int>> keys(nv);
    std::vector<int> order(nv);
    int cells = num_cells(cell);
    while (true) {
      for (std::size_t v = 0; v < nv; ++v) {
        auto& key = keys[v].first;
        key.clear();
        key.push_back(cell[v]);
        for (int w : adj_[v]) key.push_back(cell[w]);
        std::sort(key.begin() + 1, key.end());
        keys[v].second = static_cast<int>(v);
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return keys[a].first < keys[b].first; });
      int next = -1;
      for (std::size_t i = 0; i < nv; ++i) {
        if (i == 0 || keys[order[i]].first != keys[order[i - 1]].first) ++next;
        cell[order[i]] = next;
      }
      int now = next + 1;
      if (now == cells) return;
      cells = now;
    }
  }

  std::string certificate(const std::vector<int>& pos) const {
    // Row per line position, one bit per point position.
    std::vector<std::vector<int>> rows(m_);
    for (std::size_t l = 0; l < m_; ++l) {
      auto& row = rows[pos[n_ + l] - n_];
      for (int p : adj_[n_ + l]) row.push_back(pos[p]);
    }
    std::string cert;
    cert.reserve(m_ * ((n_ + 7) / 8));
    for (auto& row : rows) {
      std::string bytes((n_ + 7) / 8, '\0');
      for (int p : row) bytes[p / 8] = static_cast<char>(bytes[p / 8] | (0x80 >> (p % 8)));
      cert += bytes;
    }
    return cert;
  }

  bool fixes_path(const std::vector<int>& aut, const std::vector<int>& path) const {
    for (int v : path) {
      if (aut[v] != v) return false;
    }
    return true;
  }

  bool same_orbit(int u, int v, const std::vector<int>& path) const {
    const std::size_t nv = n_ + m_;
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& aut : automorphisms_) {
      if (!fixes_path(aut, path)) continue;
      for (std::size_t x = 0; x < nv; ++x) {
        int a = find(static_cast<int>(x));
        int b = find(aut[x]);
        if (a != b) parent[a] = b;
      }
    }
    return find(u) == find(v);
  }

  void search(const std::vector<int>& cell, std::vector<int>& path) {
    const std::size_t nv = cell.size();
    std::vector<int> size(nv, 0);
    for (int c : cell) ++size[c];
    int target = -1;
    for (std::size_t c = 0; c < nv; ++c) {
      if (size[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    }
    if (target < 0) {
      std::string cert = certificate(cell);
      if (!have_best_ || cert < best_cert_) {
        best_cert_ = std::move(cert);
        best_pos_ = cell;
        have_best_ = true;
      } else if (cert == best_cert_) {
        std::vector<int> inv(nv);
        for (std::size_t v = 0; v < nv; ++v) inv[best_pos_[v]] = static_cast<int>(v);
        std::vector<int> aut(nv);
        for (std::size_t v = 0; v < nv; ++v) aut[v] = inv[cell[v]];
        automorphisms_.push_back(std::move(aut));
      }
      return;
    }
    std::vector<int> explored;
    for (std::size_t v = 0; v < nv; ++v) {
      if (cell[v] != target) continue;
      bool skip = false;
      for (int u : explored) {
        if (same_orbit(u, static_cast<int>(v), path)) {
          skip = true;
          break;
        }
      }
      if (skip) continue;
      explored.push_back(static_cast<int>(v));
      std::vector<int> child = cell;
      for (std::size_t w = 0; w < nv; ++w) {
        if (child[w] > target || (child[w] == target && w != v)) ++child[w];
      }
      refine(child);
      path.push_back(static_cast<int>(v));
      search(child, path);
      path.pop_back();
    }
  }

  std::size_t n_;
  std::size_t m_;
  std::vector<std::vector<int>> adj_;
  std::string best_cert_;
  std::vector<int> best_pos_;
  bool have_best_ = false;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace detail

/// Canonical label of the system exactly as given (no pruning; isolated
/// points count). Used for exact hypergraph isomorphism classes.
inline std::string hypergraph_label(const LinearSystem& sys) {
  return detail::CanonicalLabeler(sys).run().first;
}

/// Returns a copy of `sys` renumbered into canonical order.
inline LinearSystem canonical_relabel(const LinearSystem& sys) {
  auto [label, pos] = detail::CanonicalLabeler(sys).run();
  const std::size_t n = sys.num_points();
  std::vector<PointId> perm(n);
  for (std::size_t p = 0; p < n; ++p) perm[p] = static_cast<PointId>(pos[p]);
  std::vector<LineIndex> order(sys.num_lines());
  for (std::size_t l = 0; l < sys.num_lines(); ++l) {
    order[pos[n + l] - n] = static_cast<LineIndex>(l);
  }
  return relabel(sys, perm, order);
}

inline CanonicalForm canonical_form(const LinearSystem& sys) {
  LinearSystem pruned = prune_low_degree(sys).system;
  return CanonicalForm{hypergraph_label(pruned), {pruned.num_points(), pruned.num_lines()}};
}

/// Isomorphism up to removal of points of degree 0 or 1.
inline bool is_isomorphic(const LinearSystem& a, const LinearSystem& b) {
  LinearSystem pa = prune_low_degree(a).system;
  LinearSystem pb = prune_low_degree(b).system;
  if (pa.num_points() != pb.num_points() || pa.num_lines() != pb.num_lines()) return false;
  return hypergraph_label(pa) == hypergraph_label(pb);
}

}  // namespace lsys
