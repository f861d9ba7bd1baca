#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lsys/canonical.hpp"
#include "lsys/embedding.hpp"
#include "lsys/linear_system.hpp"
#include "lsys/solvers.hpp"

namespace lsys {

/// A constructed system with its name, construction parameters, and (for
/// the hand-listed systems) the symbolic point names.
struct NamedSystem {
  std::string name;
  LinearSystem system;
  std::map<std::string, std::string> provenance;
  std::vector<std::string> point_names;
};

struct Triangle {
  std::array<PointId, 3> vertices;  // ascending
  std::array<LineIndex, 3> sides;   // joins of (v0,v1), (v0,v2), (v1,v2)

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

inline bool is_prime(unsigned q) {
  if (q < 2) return false;
  for (unsigned d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

inline constexpr unsigned kMaxPlaneOrder = 11;

/// Desarguesian plane of prime order q: points and lines are normalized
/// homogeneous triples over Z/q (first nonzero coordinate 1), both listed in
/// lexicographic order; a point lies on a line iff their dot product is 0.
inline NamedSystem projective_plane(unsigned q) {
  if (!is_prime(q)) {
    throw Error(ErrorCode::NotPrime, "order must be prime, got " + std::to_string(q));
  }
  if (q > kMaxPlaneOrder) {
    throw Error(ErrorCode::TooLarge, "order must be at most " + std::to_string(kMaxPlaneOrder));
  }
  std::vector<std::array<unsigned, 3>> triples;
  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      for (unsigned c = 0; c < q; ++c) {
        std::array<unsigned, 3> t{a, b, c};
        auto first = std::find_if(t.begin(), t.end(), [](unsigned x) { return x != 0; });
        if (first != t.end() && *first == 1) triples.push_back(t);
      }
    }
  }
  std::vector<Line> lines;
  for (const auto& cov : triples) {
    Line line;
    for (std::size_t p = 0; p < triples.size(); ++p) {
      const auto& pt = triples[p];
      if ((cov[0] * pt[0] + cov[1] * pt[1] + cov[2] * pt[2]) % q == 0) {
        line.push_back(static_cast<PointId>(p));
      }
    }
    lines.push_back(std::move(line));
  }
  NamedSystem out{"pi(" + std::to_string(q) + ")",
                  LinearSystem(triples.size(), std::move(lines)),
                  {{"q", std::to_string(q)}},
                  {}};
  for (const auto& t : triples) {
    out.point_names.push_back("(" + std::to_string(t[0]) + ":" + std::to_string(t[1]) + ":" +
                              std::to_string(t[2]) + ")");
  }
  return out;
}

namespace detail {

inline NamedSystem from_symbols(std::string name, std::vector<std::string> symbols,
                                const std::vector<std::vector<std::string>>& lines) {
  std::vector<Line> ids;
  for (const auto& l : lines) {
    Line line;
    for (const auto& s : l) {
      auto it = std::find(symbols.begin(), symbols.end(), s);
      line.push_back(static_cast<PointId>(it - symbols.begin()));
    }
    ids.push_back(std::move(line));
  }
  return NamedSystem{std::move(name), LinearSystem(symbols.size(), std::move(ids)), {},
                     std::move(symbols)};
}

}  // namespace detail

/// The 8-point, 8-line, 3-regular system, with points
/// p, q, x1, x2, x3, y1, y3, y4 numbered 0..7.
inline NamedSystem c34_explicit() {
  return detail::from_symbols("c34", {"p", "q", "x1", "x2", "x3", "y1", "y3", "y4"},
                              {{"p", "y1", "y3"},
                               {"x2", "x3", "y1"},
                               {"q", "y1", "y4"},
                               {"x1", "x3", "y4"},
                               {"p", "q", "x1"},
                               {"x1", "x2", "y3"},
                               {"q", "x3", "y3"},
                               {"p", "x2", "y4"}});
}

/// The 10-point, 10-line system left after removing a triangle from the
/// plane of order 3, with points p, q, x1..x3, y1..y5 numbered 0..9.
inline NamedSystem c_explicit() {
  return detail::from_symbols(
      "c", {"p", "q", "x1", "x2", "x3", "y1", "y2", "y3", "y4", "y5"},
      {{"p", "y1", "y2", "y3"},
       {"q", "y1", "y4", "y5"},
       {"x1", "x2", "y3", "y5"},
       {"x1", "x3", "y2", "y4"},
       {"p", "x2", "y4"},
       {"p", "x3", "y5"},
       {"p", "q", "x1"},
       {"q", "x2", "y2"},
       {"q", "x3", "y3"},
       {"x2", "x3", "y1"}});
}

/// Plane of order 3 minus point k with its four lines, minus line l with
/// its four points. Requires k not on l.
inline NamedSystem c34_from_pi3(PointId k, LineIndex l) {
  LinearSystem pi3 = projective_plane(3).system;
  pi3.check_point(k);
  pi3.check_line(l);
  if (pi3.line_mask(l).test(k)) {
    throw Error(ErrorCode::PointOnLine,
                "point " + std::to_string(k) + " lies on line " + std::to_string(l));
  }
  std::vector<LineIndex> kept;
  for (std::size_t i = 0; i < pi3.num_lines(); ++i) {
    if (i != l && !pi3.line_mask(static_cast<LineIndex>(i)).test(k)) {
      kept.push_back(static_cast<LineIndex>(i));
    }
  }
  PointSet keep = detail::all_points(pi3) & ~pi3.line_mask(l);
  keep.reset(k);
  return NamedSystem{"c34",
                     detail::restrict_lines(pi3, kept, keep).system,
                     {{"k", std::to_string(k)}, {"l", std::to_string(l)}},
                     {}};
}

/// All triangles: three non-collinear points that are pairwise joined.
inline std::vector<Triangle> find_triangles(const LinearSystem& sys) {
  std::vector<Triangle> out;
  const auto n = static_cast<PointId>(sys.num_points());
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = a + 1; b < n; ++b) {
      auto ab = sys.join(a, b);
      if (!ab) continue;
      for (PointId c = b + 1; c < n; ++c) {
        if (sys.line_mask(*ab).test(c)) continue;
        auto ac = sys.join(a, c);
        auto bc = sys.join(b, c);
        if (ac && bc) out.push_back(Triangle{{a, b, c}, {*ab, *ac, *bc}});
      }
    }
  }
  return out;
}

/// Removes a triangle's three vertices and three sides.
inline NamedSystem triangle_delete(const LinearSystem& host, const Triangle& t) {
  auto bad = [] { return Error(ErrorCode::NotATriangle, "not a triangle of this system"); };
  const auto& v = t.vertices;
  for (PointId p : v) {
    if (p >= host.num_points()) throw bad();
  }
  if (v[0] == v[1] || v[0] == v[2] || v[1] == v[2]) throw bad();
  const std::array<std::array<PointId, 2>, 3> pairs{{{v[0], v[1]}, {v[0], v[2]}, {v[1], v[2]}}};
  for (std::size_t i = 0; i < 3; ++i) {
    if (host.join(pairs[i][0], pairs[i][1]) != std::optional<LineIndex>(t.sides[i])) throw bad();
  }
  if (host.line_mask(t.sides[0]).test(v[2])) throw bad();  // collinear
  std::vector<LineIndex> kept;
  for (std::size_t i = 0; i < host.num_lines(); ++i) {
    if (std::find(t.sides.begin(), t.sides.end(), i) == t.sides.end()) {
      kept.push_back(static_cast<LineIndex>(i));
    }
  }
  PointSet keep = detail::all_points(host);
  for (PointId p : v) keep.reset(p);
  return NamedSystem{"c",
                     detail::restrict_lines(host, kept, keep).system,
                     {{"triangle", std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
                                       std::to_string(v[2])}},
                     {}};
}

namespace detail {

inline std::vector<NamedSystem> sorted_members(std::map<CanonicalForm, LinearSystem> found) {
  std::vector<NamedSystem> out;
  std::size_t i = 0;
  for (auto& [form, sys] : found) {
    out.push_back(NamedSystem{"c44-" + std::to_string(i++), std::move(sys), {}, {}});
  }
  return out;
}

inline bool is_c44_member(const LinearSystem& cand, const LinearSystem& c,
                          const LinearSystem& pi3) {
  return embeds_as_subsystem(c, cand).has_value() && embeds_as_subsystem(cand, pi3).has_value() &&
         two_packing_number(cand).value() == 4;
}

}  // namespace detail

/// Every system, up to isomorphism, that contains the ten-line system C as a
/// linear subsystem, is itself a linear subsystem of the plane of order 3,
/// and has 2-packing number 4. The plane and one triangle T are fixed; the
/// candidates take the points of C plus a subset S of T's vertices, and the
/// parent lines of C plus a subset of T's sides, all restricted to that
/// point set. Members are sorted by canonical label.
inline std::vector<NamedSystem> enumerate_c44() {
  const LinearSystem pi3 = projective_plane(3).system;
  const LinearSystem c = c_explicit().system;
  const Triangle t = find_triangles(pi3).front();
  std::vector<LineIndex> parents;
  for (std::size_t i = 0; i < pi3.num_lines(); ++i) {
    if (std::find(t.sides.begin(), t.sides.end(), i) == t.sides.end()) {
      parents.push_back(static_cast<LineIndex>(i));
    }
  }
  PointSet base = detail::all_points(pi3);
  for (PointId v : t.vertices) base.reset(v);

  std::map<CanonicalForm, LinearSystem> found;
  for (unsigned vmask = 0; vmask < 8; ++vmask) {
    PointSet keep = base;
    for (unsigned i = 0; i < 3; ++i) {
      if (vmask & (1u << i)) keep.set(t.vertices[i]);
    }
    for (unsigned smask = 0; smask < 8; ++smask) {
      std::vector<LineIndex> lines = parents;
      for (unsigned i = 0; i < 3; ++i) {
        if (smask & (1u << i)) lines.push_back(t.sides[i]);
      }
      std::sort(lines.begin(), lines.end());
      LinearSystem cand = detail::restrict_lines(pi3, lines, keep).system;
      if (!detail::is_c44_member(cand, c, pi3)) continue;
      found.emplace(canonical_form(cand), std::move(cand));
    }
  }
  return detail::sorted_members(std::move(found));
}

/// Slow cross-check for enumerate_c44: every line subset of the plane of
/// order 3, restricted to every point superset of C's points.
inline std::vector<NamedSystem> enumerate_c44_exhaustive() {
  const LinearSystem pi3 = projective_plane(3).system;
  const LinearSystem c = c_explicit().system;
  const Triangle t = find_triangles(pi3).front();
  PointSet base = detail::all_points(pi3);
  for (PointId v : t.vertices) base.reset(v);

  std::map<CanonicalForm, LinearSystem> found;
  for (unsigned vmask = 0; vmask < 8; ++vmask) {
    PointSet keep = base;
    for (unsigned i = 0; i < 3; ++i) {
      if (vmask & (1u << i)) keep.set(t.vertices[i]);
    }
    for (unsigned lmask = 1; lmask < (1u << pi3.num_lines()); ++lmask) {
      std::vector<LineIndex> lines;
      for (std::size_t i = 0; i < pi3.num_lines(); ++i) {
        if (lmask & (1u << i)) lines.push_back(static_cast<LineIndex>(i));
      }
      LinearSystem cand = detail::restrict_lines(pi3, lines, keep).system;
      if (cand.num_lines() < c.num_lines()) continue;  // C's ten lines need ten images
      if (!detail::is_c44_member(cand, c, pi3)) continue;
      found.emplace(canonical_form(cand), std::move(cand));
    }
  }
  return detail::sorted_members(std::move(found));
}

/// Deterministic rejection sampler. Each attempt draws a line size in
/// [min_size, max_size] and a uniformly random point subset of that size,
/// accepted iff it is new and meets every existing line in at most one
/// point. Throws GenerationExhausted after `max_rejections` consecutive
/// rejections.
inline LinearSystem random_linear_system(std::size_t num_points, std::size_t num_lines,
                                         std::size_t min_size, std::size_t max_size,
                                         std::uint64_t seed, std::size_t max_rejections = 2000) {
  if (min_size == 0 || min_size > max_size || max_size > num_points || num_points > kMaxIds ||
      num_lines > kMaxIds) {
    throw Error(ErrorCode::InvalidArgument, "infeasible random system parameters");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size_dist(min_size, max_size);
  std::vector<PointId> pool(num_points);
  for (std::size_t i = 0; i < num_points; ++i) pool[i] = static_cast<PointId>(i);
  std::vector<Line> lines;
  std::vector<PointSet> masks;
  std::size_t rejections = 0;
  while (lines.size() < num_lines) {
    std::size_t k = size_dist(rng);
    std::shuffle(pool.begin(), pool.end(), rng);
    Line line(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(line.begin(), line.end());
    PointSet m;
    for (PointId p : line) m.set(p);
    bool ok = std::all_of(masks.begin(), masks.end(),
                          [&](const PointSet& o) { return (o & m).count() <= 1 && o != m; });
    if (!ok) {
      if (++rejections > max_rejections) {
        throw Error(ErrorCode::GenerationExhausted,
                    "gave up after " + std::to_string(max_rejections) + " rejections with " +
                        std::to_string(lines.size()) + " of " + std::to_string(num_lines) +
                        " lines");
      }
      continue;
    }
    rejections = 0;
    lines.push_back(std::move(line));
    masks.push_back(m);
  }
  return LinearSystem(num_points, std::move(lines));
}

}  // namespace lsys
