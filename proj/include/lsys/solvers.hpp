#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "lsys/linear_system.hpp"
#include "lsys/three_hypergraph.hpp"

namespace lsys {

/// A computed optimum together with the witness that attains it.
struct Certificate {
  enum class Kind { Transversal, TwoPacking };

  Kind kind = Kind::Transversal;
  std::vector<std::uint32_t> members;  // point ids or line indices, sorted

  std::size_t value() const noexcept { return members.size(); }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// True iff every line meets `points`.
inline bool is_transversal(const LinearSystem& sys, std::span<const PointId> points) {
  PointSet s;
  for (PointId p : points) {
    sys.check_point(p);
    s.set(p);
  }
  return std::all_of(sys.line_masks().begin(), sys.line_masks().end(),
                     [&](const PointSet& m) { return (m & s).any(); });
}

/// True iff no point lies on three of the given lines.
inline bool is_two_packing(const LinearSystem& sys, std::span<const LineIndex> lines) {
  PointSet once, twice;
  std::vector<LineIndex> sorted(lines.begin(), lines.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (LineIndex l : sorted) {
    const PointSet& m = sys.line_mask(l);
    if ((twice & m).any()) return false;
    twice |= once & m;
    once |= m;
  }
  return true;
}

namespace detail {

class TransversalSearch {
 public:
  explicit TransversalSearch(const LinearSystem& sys) : sys_(sys) {
    for (std::size_t l = 0; l < sys.num_lines(); ++l) all_lines_.set(l);
  }

  Certificate solve() {
    Certificate cert{Certificate::Kind::Transversal, {}};
    if (sys_.empty()) return cert;
    const PointSet all = all_points(sys_);
    std::size_t lower = disjoint_lower_bound(LineSet{}, all);
    std::size_t upper = greedy_upper_bound();
    std::size_t tau = upper;
    for (std::size_t k = lower; k < upper; ++k) {
      if (feasible(LineSet{}, k, all)) {
        tau = k;
        break;
      }
    }
    // Lexicographically smallest witness: fix members one at a time, each
    // time taking the least point that still extends to a size-tau cover
    // using only larger points.
    LineSet covered;
    PointSet allowed = all;
    for (std::size_t slot = 0; slot < tau; ++slot) {
      for (std::size_t p = next_bit(allowed); p < kMaxIds; p = next_bit(allowed, p + 1)) {
        PointSet rest = allowed;
        for (std::size_t q = 0; q <= p; ++q) rest.reset(q);
        LineSet with = covered | sys_.lines_through_mask(static_cast<PointId>(p));
        if (feasible(with, tau - slot - 1, rest)) {
          cert.members.push_back(static_cast<std::uint32_t>(p));
          covered = with;
          allowed = rest;
          break;
        }
      }
    }
    return cert;
  }

 private:
  std::size_t greedy_upper_bound() const {
    LineSet covered;
    std::size_t used = 0;
    while (covered != all_lines_) {
      std::size_t best_p = 0, best_gain = 0;
      for (std::size_t p = 0; p < sys_.num_points(); ++p) {
        std::size_t gain = (sys_.lines_through_mask(static_cast<PointId>(p)) & ~covered).count();
        if (gain > best_gain) {
          best_gain = gain;
          best_p = p;
        }
      }
      covered |= sys_.lines_through_mask(static_cast<PointId>(best_p));
      ++used;
    }
    return used;
  }

  // Greedy set of pairwise disjoint uncovered lines (disjoint on the allowed
  // points); each needs its own transversal point.
  std::size_t disjoint_lower_bound(const LineSet& covered, const PointSet& allowed) const {
    std::size_t count = 0;
    PointSet used;
    for (std::size_t l = 0; l < sys_.num_lines(); ++l) {
      if (covered.test(l)) continue;
      PointSet m = sys_.line_masks()[l] & allowed;
      if ((m & used).none()) {
        used |= m;
        ++count;
      }
    }
    return count;
  }

  // Is there a set of at most `budget` allowed points covering the rest?
  bool feasible(const LineSet& covered, std::size_t budget, PointSet allowed) const {
    if (covered == all_lines_) return true;
    if (budget == 0) return false;
    std::size_t pick = kMaxIds, pick_size = kMaxIds;
    for (std::size_t l = 0; l < sys_.num_lines(); ++l) {
      if (covered.test(l)) continue;
      std::size_t sz = (sys_.line_masks()[l] & allowed).count();
      if (sz < pick_size) {
        pick_size = sz;
        pick = l;
      }
    }
    if (pick_size == 0) return false;
    if (disjoint_lower_bound(covered, allowed) > budget) return false;
    PointSet branch = sys_.line_masks()[pick] & allowed;
    for (std::size_t p = next_bit(branch); p < kMaxIds; p = next_bit(branch, p + 1)) {
      if (feasible(covered | sys_.lines_through_mask(static_cast<PointId>(p)), budget - 1,
                   allowed)) {
        return true;
      }
      // Solutions through p are exhausted; later branches avoid it.
      allowed.reset(p);
    }
    return false;
  }

  const LinearSystem& sys_;
  LineSet all_lines_;
};

class TwoPackingSearch {
 public:
  explicit TwoPackingSearch(const LinearSystem& sys) : sys_(sys) {}

  Certificate solve() {
    std::vector<LineIndex> cand(sys_.num_lines());
    std::iota(cand.begin(), cand.end(), LineIndex{0});
    std::vector<LineIndex> chosen;
    dfs(cand, chosen, PointSet{}, PointSet{});
    Certificate cert{Certificate::Kind::TwoPacking, {}};
    cert.members.assign(best_.begin(), best_.end());
    return cert;
  }

 private:
  // Include-first DFS in index order; a best is replaced only on strict
  // improvement, so the witness is the lexicographically first maximum.
  void dfs(std::vector<LineIndex> cand, std::vector<LineIndex>& chosen, const PointSet& once,
           const PointSet& twice) {
    if (chosen.size() > best_.size() || !have_best_) {
      best_ = chosen;
      have_best_ = true;
    }
    while (!cand.empty()) {
      if (chosen.size() + cand.size() <= best_.size()) return;
      LineIndex l = cand.front();
      const PointSet& m = sys_.line_masks()[l];
      PointSet twice2 = twice | (once & m);
      PointSet once2 = once | m;
      std::vector<LineIndex> next;
      next.reserve(cand.size());
      for (std::size_t i = 1; i < cand.size(); ++i) {
        if ((sys_.line_masks()[cand[i]] & twice2).none()) next.push_back(cand[i]);
      }
      chosen.push_back(l);
      dfs(std::move(next), chosen, once2, twice2);
      chosen.pop_back();
      cand.erase(cand.begin());
    }
  }

  const LinearSystem& sys_;
  std::vector<LineIndex> best_;
  bool have_best_ = false;
};

inline constexpr std::size_t kOracleLimit = 20;

inline void check_oracle_bounds(const LinearSystem& sys) {
  if (sys.num_points() > kOracleLimit || sys.num_lines() > kOracleLimit) {
    throw Error(ErrorCode::TooLarge, "brute-force oracles accept at most " +
                                         std::to_string(kOracleLimit) + " points and lines");
  }
}

// Visits k-subsets of {0..n-1} in lexicographic order until fn returns true.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return false;
  std::vector<std::uint32_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0u);
  while (true) {
    if (fn(std::span<const std::uint32_t>(idx))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Minimum transversal by branch and bound. Branches on the uncovered line
/// with the fewest candidate points; bounds with greedy disjoint lines.
/// Returns the lexicographically smallest minimum transversal.
inline Certificate transversal_number(const LinearSystem& sys) {
  return detail::TransversalSearch(sys).solve();
}

/// Maximum 2-packing (no point on three chosen lines). Returns the
/// lexicographically first maximum set of line indices.
inline Certificate two_packing_number(const LinearSystem& sys) {
  return detail::TwoPackingSearch(sys).solve();
}

/// Exhaustive oracle: point subsets by increasing size, in lexicographic
/// order. At most 20 points and 20 lines.
inline Certificate brute_force_transversal(const LinearSystem& sys) {
  detail::check_oracle_bounds(sys);
  Certificate cert{Certificate::Kind::Transversal, {}};
  for (std::size_t k = 0; k <= sys.num_points(); ++k) {
    bool found = detail::for_each_combination(sys.num_points(), k, [&](auto subset) {
      if (!is_transversal(sys, subset)) return false;
      cert.members.assign(subset.begin(), subset.end());
      return true;
    });
    if (found) return cert;
  }
  return cert;  // unreachable for valid systems: all points always cover
}

/// Exhaustive oracle: line subsets by decreasing size, in lexicographic order.
inline Certificate brute_force_two_packing(const LinearSystem& sys) {
  detail::check_oracle_bounds(sys);
  Certificate cert{Certificate::Kind::TwoPacking, {}};
  for (std::size_t k = sys.num_lines(); k > 0; --k) {
    bool found = detail::for_each_combination(sys.num_lines(), k, [&](auto subset) {
      if (!is_two_packing(sys, subset)) return false;
      cert.members.assign(subset.begin(), subset.end());
      return true;
    });
    if (found) return cert;
  }
  return cert;
}

/// Largest vertex set all of whose triples are edges.
inline std::size_t clique_number_3h(const ThreeHypergraph& h) {
  const std::size_t n = h.num_vertices();
  std::size_t best = 0;
  std::vector<std::uint32_t> clique;
  auto dfs = [&](auto&& self, LineSet cand) -> void {
    best = std::max(best, clique.size());
    while (cand.any()) {
      if (clique.size() + cand.count() <= best) return;
      auto v = static_cast<std::uint32_t>(next_bit(cand));
      cand.reset(v);
      LineSet next = cand;
      for (std::uint32_t u : clique) next &= h.completions(u, v);
      clique.push_back(v);
      self(self, next);
      clique.pop_back();
    }
  };
  LineSet all;
  for (std::size_t v = 0; v < n; ++v) all.set(v);
  dfs(dfs, all);
  return best;
}

inline constexpr std::size_t kChromaticLimit = 13;

/// Fewest classes such that no class contains an edge or a disjoint pair.
inline std::size_t chromatic_number_3h(const ThreeHypergraph& h) {
  const std::size_t n = h.num_vertices();
  if (n > kChromaticLimit) {
    throw Error(ErrorCode::TooLarge, "chromatic number is limited to " +
                                         std::to_string(kChromaticLimit) + " vertices");
  }
  std::size_t best = n;
  std::vector<std::vector<std::uint32_t>> classes;
  auto fits = [&](const std::vector<std::uint32_t>& cls, std::uint32_t v) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (h.disjoint(cls[i], v)) return false;
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        if (h.has_edge(cls[i], cls[j], v)) return false;
      }
    }
    return true;
  };
  auto dfs = [&](auto&& self, std::uint32_t v) -> void {
    if (classes.size() >= best) return;
    if (v == n) {
      best = classes.size();
      return;
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (!fits(classes[i], v)) continue;
      classes[i].push_back(v);
      self(self, v + 1);
      classes[i].pop_back();
    }
    if (classes.size() + 1 < best) {
      classes.push_back({v});
      self(self, v + 1);
      classes.pop_back();
    }
  };
  if (n == 0) return 0;
  dfs(dfs, 0);
  return best;
}

}  // namespace lsys
