#pragma once

#include <optional>
#include <vector>

#include "lsys/linear_system.hpp"

namespace lsys {

/// Witness that a (pruned) system is isomorphic to a linear subsystem of a
/// host: every source line maps to a host line whose trace on the image of
/// the source points is exactly the image of the source line.
struct Embedding {
  std::vector<PointId> point_map;   // source point -> host point (injective)
  std::vector<LineIndex> line_map;  // source line -> host line
};

/// Checks the embedding invariant directly against both systems.
inline bool validate_embedding(const LinearSystem& source, const LinearSystem& host,
                               const Embedding& emb) {
  if (emb.point_map.size() != source.num_points() || emb.line_map.size() != source.num_lines()) {
    return false;
  }
  PointSet image;
  for (PointId y : emb.point_map) {
    if (y >= host.num_points() || image.test(y)) return false;
    image.set(y);
  }
  for (std::size_t l = 0; l < source.num_lines(); ++l) {
    if (emb.line_map[l] >= host.num_lines()) return false;
    PointSet mapped;
    for (PointId p : source.line(static_cast<LineIndex>(l))) mapped.set(emb.point_map[p]);
    if ((host.line_mask(emb.line_map[l]) & image) != mapped) return false;
  }
  return true;
}

namespace detail {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const LinearSystem& a, const LinearSystem& b) : a_(a), b_(b) {
    const std::size_t na = a.num_points();
    // Visit points so that each one shares lines with already placed points
    // where possible; ties go to the lowest id.
    std::vector<bool> placed(na, false);
    std::vector<std::size_t> shared(na, 0);
    for (std::size_t step = 0; step < na; ++step) {
      std::size_t pick = na;
      for (std::size_t p = 0; p < na; ++p) {
        if (placed[p]) continue;
        if (pick == na || shared[p] > shared[pick] ||
            (shared[p] == shared[pick] &&
             a.degree(static_cast<PointId>(p)) > a.degree(static_cast<PointId>(pick)))) {
          pick = p;
        }
      }
      placed[pick] = true;
      order_.push_back(static_cast<PointId>(pick));
      for (std::size_t q = 0; q < na; ++q) {
        if (!placed[q] && a.join(static_cast<PointId>(pick), static_cast<PointId>(q))) ++shared[q];
      }
    }
  }

  std::optional<Embedding> run() {
    if (a_.num_points() > b_.num_points() || a_.num_lines() > b_.num_lines()) return std::nullopt;
    State s;
    s.image.assign(a_.num_points(), kUnset);
    s.line_image.assign(a_.num_lines(), kUnset);
    s.mapped_on_line.assign(a_.num_lines(), 0);
    if (!extend(s, 0)) return std::nullopt;
    return result_;
  }

 private:
  static constexpr std::uint32_t kUnset = ~std::uint32_t{0};

  struct State {
    std::vector<std::uint32_t> image;
    std::vector<std::uint32_t> line_image;
    std::vector<std::size_t> mapped_on_line;
    PointSet used;
  };

  bool try_assign(State& s, PointId v, PointId y) const {
    if (s.used.test(y) || b_.degree(y) < a_.degree(v)) return false;
    // Lines not through v with a fixed host line must not pick up y.
    for (std::size_t l = 0; l < a_.num_lines(); ++l) {
      if (s.line_image[l] != kUnset && !a_.line_mask(static_cast<LineIndex>(l)).test(v) &&
          b_.line_mask(s.line_image[l]).test(y)) {
        return false;
      }
    }
    for (LineIndex l : a_.lines_through(v)) {
      if (s.mapped_on_line[l] == 0) continue;
      if (s.line_image[l] != kUnset) {
        if (!b_.line_mask(s.line_image[l]).test(y)) return false;
        continue;
      }
      // Exactly one point of l placed so far: the host line is now forced.
      PointId u = 0;
      for (PointId p : a_.line(l)) {
        if (p != v && s.image[p] != kUnset) u = p;
      }
      auto host = b_.join(s.image[u], y);
      if (!host) return false;
      // The new host line may not contain images of points outside l.
      const PointSet& hm = b_.line_mask(*host);
      for (std::size_t p = 0; p < a_.num_points(); ++p) {
        if (s.image[p] != kUnset && p != u && hm.test(s.image[p]) &&
            !a_.line_mask(l).test(p)) {
          return false;
        }
      }
      s.line_image[l] = *host;
    }
    s.image[v] = y;
    s.used.set(y);
    for (LineIndex l : a_.lines_through(v)) ++s.mapped_on_line[l];
    return true;
  }

  bool finish(State& s) {
    // Lines with a single point: any host line through its image whose
    // trace on the image set is that point alone.
    for (std::size_t l = 0; l < a_.num_lines(); ++l) {
      if (s.line_image[l] != kUnset) continue;
      PointId y = s.image[a_.line(static_cast<LineIndex>(l)).front()];
      bool found = false;
      for (LineIndex h : b_.lines_through(y)) {
        if ((b_.line_mask(h) & s.used).count() == 1) {
          s.line_image[l] = h;
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    Embedding emb;
    emb.point_map.assign(s.image.begin(), s.image.end());
    emb.line_map.assign(s.line_image.begin(), s.line_image.end());
    result_ = std::move(emb);
    return true;
  }

  bool extend(const State& s, std::size_t depth) {
    if (depth == order_.size()) {
      State done = s;
      return finish(done);
    }
    PointId v = order_[depth];
    for (std::size_t y = 0; y < b_.num_points(); ++y) {
      State next = s;
      if (!try_assign(next, v, static_cast<PointId>(y))) continue;
      if (extend(next, depth + 1)) return true;
    }
    return false;
  }

  const LinearSystem& a_;
  const LinearSystem& b_;
  std::vector<PointId> order_;
  Embedding result_;
};

}  // namespace detail

/// Searches for an embedding of `prune_low_degree(a)` into `b` as a linear
/// subsystem. The witness refers to the point and line ids of the pruned
/// system. Candidate host points are tried in ascending order, so the
/// witness is deterministic.
inline std::optional<Embedding> embeds_as_subsystem(const LinearSystem& a, const LinearSystem& b) {
  LinearSystem pruned = prune_low_degree(a).system;
  return detail::EmbeddingSearch(pruned, b).run();
}

}  // namespace lsys
