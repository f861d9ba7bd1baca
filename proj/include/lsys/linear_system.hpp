#pragma once

#include <algorithm>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsys/error.hpp"

namespace lsys {

using PointId = std::uint32_t;
using LineIndex = std::uint32_t;
using Line = std::vector<PointId>;

/// Upper bound on points and lines of a single system. Incidences are kept
/// as fixed-width bit vectors so triple intersections are word operations.
inline constexpr std::size_t kMaxIds = 256;

using PointSet = std::bitset<kMaxIds>;
using LineSet = std::bitset<kMaxIds>;

/// Index of the lowest set bit at or after `from`, or kMaxIds if none.
inline std::size_t next_bit(const std::bitset<kMaxIds>& bits, std::size_t from = 0) {
#if defined(__GLIBCXX__)
  return from == 0 ? bits._Find_first() : bits._Find_next(from - 1);
#else
  for (std::size_t i = from; i < kMaxIds; ++i) {
    if (bits.test(i)) return i;
  }
  return kMaxIds;
#endif
}

/// Calls `fn(i)` for every set bit in ascending order.
template <typename Fn>
void for_each_bit(const std::bitset<kMaxIds>& bits, Fn&& fn) {
  for (std::size_t i = next_bit(bits); i < kMaxIds; i = next_bit(bits, i + 1)) fn(i);
}

/// A finite linear system: points 0..num_points()-1 and a list of distinct,
/// nonempty lines, any two of which share at most one point.
///
/// Construction validates and normalizes (each line sorted, repeated ids in a
/// line collapsed). Instances are immutable afterwards.
class LinearSystem {
 public:
  LinearSystem() = default;

  LinearSystem(std::size_t num_points, std::vector<Line> lines) : num_points_(num_points) {
    if (num_points > kMaxIds) {
      throw Error(ErrorCode::TooManyPoints,
                  "at most " + std::to_string(kMaxIds) + " points are supported, got " +
                      std::to_string(num_points));
    }
    if (lines.size() > kMaxIds) {
      throw Error(ErrorCode::TooLarge,
                  "at most " + std::to_string(kMaxIds) + " lines are supported, got " +
                      std::to_string(lines.size()));
    }
    lines_.reserve(lines.size());
    masks_.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
      Line line = std::move(lines[i]);
      if (line.empty()) {
        throw Error(ErrorCode::EmptyLine, "line " + std::to_string(i) + " is empty");
      }
      std::sort(line.begin(), line.end());
      line.erase(std::unique(line.begin(), line.end()), line.end());
      PointSet mask;
      for (PointId p : line) {
        if (p >= num_points) {
          throw Error(ErrorCode::BadPointId, "line " + std::to_string(i) + " contains point " +
                                                 std::to_string(p) + " but there are only " +
                                                 std::to_string(num_points) + " points");
        }
        mask.set(p);
      }
      lines_.push_back(std::move(line));
      masks_.push_back(mask);
    }
    for (std::size_t a = 0; a < lines_.size(); ++a) {
      for (std::size_t b = a + 1; b < lines_.size(); ++b) {
        if (masks_[a] == masks_[b]) {
          throw Error(ErrorCode::DuplicateLine,
                      "lines " + std::to_string(a) + " and " + std::to_string(b) + " are equal",
                      std::pair{a, b});
        }
        if ((masks_[a] & masks_[b]).count() > 1) {
          throw Error(ErrorCode::LinearityViolation,
                      "lines " + std::to_string(a) + " and " + std::to_string(b) +
                          " share more than one point",
                      std::pair{a, b});
        }
      }
    }
    through_.assign(num_points_, LineSet{});
    for (std::size_t l = 0; l < lines_.size(); ++l) {
      for (PointId p : lines_[l]) through_[p].set(l);
    }
  }

  std::size_t num_points() const noexcept { return num_points_; }
  std::size_t num_lines() const noexcept { return lines_.size(); }
  bool empty() const noexcept { return lines_.empty(); }

  const std::vector<Line>& lines() const noexcept { return lines_; }

  const Line& line(LineIndex l) const {
    check_line(l);
    return lines_[l];
  }

  const PointSet& line_mask(LineIndex l) const {
    check_line(l);
    return masks_[l];
  }

  const std::vector<PointSet>& line_masks() const noexcept { return masks_; }

  /// Lines through `p` as a bit mask over line indices.
  const LineSet& lines_through_mask(PointId p) const {
    check_point(p);
    return through_[p];
  }

  std::vector<LineIndex> lines_through(PointId p) const {
    check_point(p);
    std::vector<LineIndex> out;
    for (std::size_t l = 0; l < lines_.size(); ++l) {
      if (through_[p].test(l)) out.push_back(static_cast<LineIndex>(l));
    }
    return out;
  }

  std::size_t degree(PointId p) const {
    check_point(p);
    return through_[p].count();
  }

  std::size_t max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& t : through_) best = std::max(best, t.count());
    return best;
  }

  /// The set X_k of points whose degree is at least k.
  std::vector<PointId> points_of_degree_at_least(std::size_t k) const {
    std::vector<PointId> out;
    for (std::size_t p = 0; p < num_points_; ++p) {
      if (through_[p].count() >= k) out.push_back(static_cast<PointId>(p));
    }
    return out;
  }

  /// Index of the line through both points, if any. Unique by linearity.
  std::optional<LineIndex> join(PointId a, PointId b) const {
    check_point(a);
    check_point(b);
    LineSet both = through_[a] & through_[b];
    if (a == b || both.none()) return std::nullopt;
    return static_cast<LineIndex>(next_bit(both));
  }

  void check_point(PointId p) const {
    if (p >= num_points_) {
      throw Error(ErrorCode::BadPointId, "point " + std::to_string(p) + " out of range (" +
                                             std::to_string(num_points_) + " points)");
    }
  }

  void check_line(LineIndex l) const {
    if (l >= lines_.size()) {
      throw Error(ErrorCode::BadLineIndex, "line " + std::to_string(l) + " out of range (" +
                                               std::to_string(lines_.size()) + " lines)");
    }
  }

  friend bool operator==(const LinearSystem& a, const LinearSystem& b) {
    return a.num_points_ == b.num_points_ && a.lines_ == b.lines_;
  }

 private:
  std::size_t num_points_ = 0;
  std::vector<Line> lines_;
  std::vector<PointSet> masks_;
  std::vector<LineSet> through_;
};

/// Result of a structural operation that renumbers points and lines.
struct Subsystem {
  LinearSystem system;
  /// Old point id -> new point id, or nullopt if the point was removed.
  std::vector<std::optional<PointId>> point_map;
  /// New line index -> index of the (first) originating line in the input.
  std::vector<LineIndex> line_origin;
};

namespace detail {

// Builds the subsystem with lines {l & keep : l in chosen}, dropping empty
// residues and merging equal ones. Kept points are compacted in id order.
inline Subsystem restrict_lines(const LinearSystem& sys, std::span<const LineIndex> chosen,
                                const PointSet& keep) {
  Subsystem out;
  out.point_map.assign(sys.num_points(), std::nullopt);
  PointId next = 0;
  for (std::size_t p = 0; p < sys.num_points(); ++p) {
    if (keep.test(p)) out.point_map[p] = next++;
  }
  std::vector<Line> lines;
  std::map<Line, std::size_t> seen;
  for (LineIndex l : chosen) {
    Line residue;
    for (PointId p : sys.line(l)) {
      if (out.point_map[p]) residue.push_back(*out.point_map[p]);
    }
    if (residue.empty() || seen.count(residue)) continue;
    seen.emplace(residue, lines.size());
    lines.push_back(std::move(residue));
    out.line_origin.push_back(l);
  }
  out.system = LinearSystem(next, std::move(lines));
  return out;
}

inline std::vector<LineIndex> all_lines(const LinearSystem& sys) {
  std::vector<LineIndex> all(sys.num_lines());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<LineIndex>(i);
  return all;
}

inline PointSet all_points(const LinearSystem& sys) {
  PointSet s;
  for (std::size_t p = 0; p < sys.num_points(); ++p) s.set(p);
  return s;
}

}  // namespace detail

/// Removes point `p` from every line. Lines that become empty are dropped,
/// equal residues merged; all other points (isolated ones included) stay.
inline Subsystem delete_point(const LinearSystem& sys, PointId p) {
  sys.check_point(p);
  PointSet keep = detail::all_points(sys);
  keep.reset(p);
  return detail::restrict_lines(sys, detail::all_lines(sys), keep);
}

/// Keeps the given points (and every line's trace on them).
inline Subsystem restrict_to_points(const LinearSystem& sys, const PointSet& keep) {
  return detail::restrict_lines(sys, detail::all_lines(sys), keep & detail::all_points(sys));
}

/// Subsystem induced by a set of lines: the ground set becomes the union of
/// the chosen lines.
inline Subsystem induced_subsystem(const LinearSystem& sys, std::span<const LineIndex> line_subset) {
  PointSet covered;
  std::vector<LineIndex> chosen(line_subset.begin(), line_subset.end());
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  for (LineIndex l : chosen) covered |= sys.line_mask(l);
  return detail::restrict_lines(sys, chosen, covered);
}

inline Subsystem delete_line(const LinearSystem& sys, LineIndex l) {
  sys.check_line(l);
  std::vector<LineIndex> rest;
  for (std::size_t i = 0; i < sys.num_lines(); ++i) {
    if (i != l) rest.push_back(static_cast<LineIndex>(i));
  }
  return induced_subsystem(sys, rest);
}

/// Removes every point of degree 0 or 1 in one pass. Removing such a point
/// never lowers another point's degree, so no fixpoint iteration is needed.
/// Two lines can collapse onto the same single point; they are merged.
inline Subsystem prune_low_degree(const LinearSystem& sys) {
  PointSet keep;
  for (std::size_t p = 0; p < sys.num_points(); ++p) {
    if (sys.degree(static_cast<PointId>(p)) >= 2) keep.set(p);
  }
  return detail::restrict_lines(sys, detail::all_lines(sys), keep);
}

/// Relabels points by `perm` (old id -> new id) and reorders lines by
/// `line_order` (new position -> old index).
inline LinearSystem relabel(const LinearSystem& sys, std::span<const PointId> perm,
                            std::span<const LineIndex> line_order) {
  std::vector<Line> lines;
  lines.reserve(line_order.size());
  for (LineIndex l : line_order) {
    Line line;
    for (PointId p : sys.line(l)) line.push_back(perm[p]);
    lines.push_back(std::move(line));
  }
  return LinearSystem(sys.num_points(), std::move(lines));
}

}  // namespace lsys
