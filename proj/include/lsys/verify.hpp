#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "lsys/canonical.hpp"
#include "lsys/constructions.hpp"
#include "lsys/embedding.hpp"
#include "lsys/io.hpp"
#include "lsys/planarity.hpp"
#include "lsys/solvers.hpp"
#include "lsys/three_hypergraph.hpp"

namespace lsys {

inline constexpr std::size_t kExhaustiveMaxPoints = 9;
inline constexpr std::size_t kExhaustiveMaxLines = 7;

/// Every linear system with at most `max_points` covered points and at most
/// `max_lines` lines of sizes in [min_size, max_size], one per isomorphism
/// class, starting with the empty system. Built level by level: each class
/// with m lines is extended by one line in every possible way and the
/// results are deduplicated by canonical label. Points are always 0..n-1
/// with no isolated points.
inline std::vector<LinearSystem> exhaustive_small(std::size_t max_points, std::size_t max_lines,
                                                  std::size_t min_size = 2,
                                                  std::size_t max_size = 4) {
  if (max_points > kExhaustiveMaxPoints || max_lines > kExhaustiveMaxLines) {
    throw Error(ErrorCode::TooLarge, "exhaustive generation is limited to " +
                                         std::to_string(kExhaustiveMaxPoints) + " points and " +
                                         std::to_string(kExhaustiveMaxLines) + " lines");
  }
  if (min_size == 0 || min_size > max_size) {
    throw Error(ErrorCode::InvalidArgument, "line size range must satisfy 1 <= min <= max");
  }
  std::vector<LinearSystem> out{LinearSystem()};
  std::vector<LinearSystem> level{LinearSystem()};
  for (std::size_t m = 1; m <= max_lines && !level.empty(); ++m) {
    std::unordered_set<std::string> seen;
    std::vector<LinearSystem> next;
    for (const auto& s : level) {
      const std::size_t n = s.num_points();
      std::vector<PointId> old_points;
      auto extend = [&](auto&& self, PointId from) -> void {
        for (std::size_t fresh = 0; old_points.size() + fresh <= max_size && n + fresh <= max_points;
             ++fresh) {
          if (old_points.size() + fresh < min_size) continue;
          Line line = old_points;
          for (std::size_t k = 0; k < fresh; ++k) line.push_back(static_cast<PointId>(n + k));
          if (line.size() == 1 && fresh == 0) {
            auto through = s.lines_through(line[0]);
            if (std::any_of(through.begin(), through.end(),
                            [&](LineIndex l) { return s.line(l).size() == 1; })) {
              continue;
            }
          }
          auto lines = s.lines();
          lines.push_back(std::move(line));
          LinearSystem cand(n + fresh, std::move(lines));
          if (seen.insert(hypergraph_label(cand)).second) next.push_back(std::move(cand));
        }
        if (old_points.size() == max_size) return;
        for (PointId p = from; p < n; ++p) {
          bool free = std::none_of(old_points.begin(), old_points.end(),
                                   [&](PointId q) { return s.join(p, q).has_value(); });
          if (!free) continue;
          old_points.push_back(p);
          self(self, p + 1);
          old_points.pop_back();
        }
      };
      extend(extend, 0);
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

struct Instance {
  std::string source;
  LinearSystem system;
};

/// Solver results for one instance, plus lazily computed planarity.
struct Analysis {
  Instance instance;
  Certificate tau;
  Certificate nu2;
  std::size_t max_degree = 0;
  mutable std::optional<bool> planar;

  std::size_t lines() const { return instance.system.num_lines(); }
  bool is_planar() const {
    if (!planar) planar = zykov_planar(instance.system).planar;
    return *planar;
  }
};

inline Analysis analyze(Instance inst) {
  Analysis a{std::move(inst), {}, {}, 0, std::nullopt};
  a.tau = transversal_number(a.instance.system);
  a.nu2 = two_packing_number(a.instance.system);
  a.max_degree = a.instance.system.max_degree();
  return a;
}

struct ClaimReport {
  std::string id;
  std::string statement;
  std::size_t instances_checked = 0;
  std::vector<nlohmann::json> counterexamples;
  double wall_seconds = 0;
  std::vector<std::string> notes;

  bool passed() const { return instances_checked > 0 && counterexamples.empty(); }
};

namespace detail {

inline nlohmann::json describe(const Instance& inst, std::size_t tau, std::size_t nu2) {
  return {{"source", inst.source},
          {"instance", to_json(InstanceFile{inst.system, inst.source, {}})},
          {"tau", tau},
          {"nu2", nu2}};
}

struct Values {
  std::size_t tau;
  std::size_t nu2;
};

// Re-reads a suspected counterexample from its serialized form and
// recomputes both values with the brute-force oracle (or the solver when the
// instance is beyond oracle range). Returns the confirmed values, or nullopt
// when the recomputation disagrees with the values that triggered it.
inline std::optional<Values> reconfirm(const Analysis& a, std::vector<std::string>& notes) {
  LinearSystem back = parse_instance(write_instance(InstanceFile{a.instance.system, {}, {}})).system;
  Values v{};
  if (back.num_points() <= kOracleLimit && back.num_lines() <= kOracleLimit) {
    v = {brute_force_transversal(back).value(), brute_force_two_packing(back).value()};
  } else {
    v = {transversal_number(back).value(), two_packing_number(back).value()};
    notes.push_back(a.instance.source + ": beyond oracle range, re-solved from serialized form");
  }
  if (v.tau != a.tau.value() || v.nu2 != a.nu2.value()) {
    notes.push_back(a.instance.source + ": solver/oracle disagreement, not counted here");
    return std::nullopt;
  }
  return v;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Generic τ/ν₂ claim: `applies` filters, `holds` judges values.
inline ClaimReport value_claim(std::string id, std::string statement,
                               const std::vector<Analysis>& corpus,
                               const std::function<bool(const Analysis&)>& applies,
                               const std::function<bool(const Analysis&, Values)>& holds) {
  Timer timer;
  ClaimReport r{std::move(id), std::move(statement), 0, {}, 0, {}};
  for (const auto& a : corpus) {
    if (!applies(a)) continue;
    ++r.instances_checked;
    if (holds(a, {a.tau.value(), a.nu2.value()})) continue;
    auto v = reconfirm(a, r.notes);
    if (v && !holds(a, *v)) r.counterexamples.push_back(describe(a.instance, v->tau, v->nu2));
  }
  r.wall_seconds = timer.seconds();
  return r;
}

}  // namespace detail

/// Δ ≤ 2 exactly when the 2-packing number equals the number of lines.
inline ClaimReport check_low_degree_packing(const std::vector<Analysis>& corpus) {
  return detail::value_claim(
      "low-degree-iff-full-packing",
      "max degree <= 2 if and only if nu2 equals the number of lines", corpus,
      [](const Analysis&) { return true; },
      [](const Analysis& a, detail::Values v) { return (a.max_degree <= 2) == (v.nu2 == a.lines()); });
}

/// ν₂ = 2 with more than two lines forces τ = 1, and conversely.
inline std::vector<ClaimReport> check_nu2_two(const std::vector<Analysis>& corpus) {
  return {detail::value_claim(
              "nu2-two-tau-one", "nu2 = 2 and more than 2 lines implies tau = 1", corpus,
              [](const Analysis& a) { return a.nu2.value() == 2 && a.lines() > 2; },
              [](const Analysis&, detail::Values v) { return v.nu2 != 2 || v.tau == 1; }),
          detail::value_claim(
              "tau-one-nu2-two", "tau = 1 and more than 2 lines implies nu2 = 2", corpus,
              [](const Analysis& a) { return a.tau.value() == 1 && a.lines() > 2; },
              [](const Analysis&, detail::Values v) { return v.tau != 1 || v.nu2 == 2; })};
}

inline ClaimReport check_nu2_three(const std::vector<Analysis>& corpus) {
  return detail::value_claim(
      "nu2-three-tau-two", "nu2 = 3 and more than 3 lines implies tau = 2", corpus,
      [](const Analysis& a) { return a.nu2.value() == 3 && a.lines() > 3; },
      [](const Analysis&, detail::Values v) { return v.nu2 != 3 || v.tau == 2; });
}

inline ClaimReport check_nu2_four_high_degree(const std::vector<Analysis>& corpus) {
  return detail::value_claim(
      "nu2-four-high-degree-tau-three", "nu2 = 4 and max degree >= 5 implies tau <= 3", corpus,
      [](const Analysis& a) { return a.nu2.value() == 4 && a.max_degree >= 5; },
      [](const Analysis&, detail::Values v) { return v.nu2 != 4 || v.tau <= 3; });
}

/// Canonical forms of the known τ = ν₂ = 4 systems: the 8-point system and
/// every member of the C44 family.
inline std::set<CanonicalForm> equality_family_forms() {
  std::set<CanonicalForm> forms{canonical_form(c34_explicit().system)};
  for (const auto& m : enumerate_c44()) forms.insert(canonical_form(m.system));
  return forms;
}

/// ν₂ = 4 with more than four lines gives τ ≤ 4, and τ = 4 only for
/// subsystems of the plane of order 3 isomorphic to a known family member.
inline ClaimReport check_nu2_four(const std::vector<Analysis>& corpus) {
  const auto forms = equality_family_forms();
  const LinearSystem pi3 = projective_plane(3).system;
  std::size_t equality = 0;
  auto in_family = [&](const Analysis& a) {
    return forms.count(canonical_form(a.instance.system)) == 1 &&
           embeds_as_subsystem(a.instance.system, pi3).has_value();
  };
  auto r = detail::value_claim(
      "nu2-four-tau-four-family",
      "nu2 = 4 and more than 4 lines implies tau <= 4; tau = 4 only for subsystems of the "
      "plane of order 3 isomorphic to the 8-point system or a C44 member",
      corpus, [](const Analysis& a) { return a.nu2.value() == 4 && a.lines() > 4; },
      [&](const Analysis& a, detail::Values v) {
        if (v.nu2 != 4) return true;
        if (v.tau < 4) return true;
        ++equality;
        return v.tau == 4 && in_family(a);
      });
  r.notes.push_back("instances with tau = 4: " + std::to_string(equality));
  return r;
}

/// Planar incidence graph (a necessary condition for a straight-line
/// drawing), ν₂ in {2,3,4} and more than ν₂ lines gives τ ≤ ν₂ - 1.
inline ClaimReport check_planar_bound(const std::vector<Analysis>& corpus) {
  std::map<std::size_t, std::size_t> by_nu2, tau_two_at_three;
  auto r = detail::value_claim(
      "planar-tau-below-nu2",
      "planar incidence graph, nu2 in {2,3,4} and more than nu2 lines implies tau <= nu2 - 1",
      corpus,
      [](const Analysis& a) {
        std::size_t nu = a.nu2.value();
        return nu >= 2 && nu <= 4 && a.lines() > nu && a.is_planar();
      },
      [&](const Analysis&, detail::Values v) {
        ++by_nu2[v.nu2];
        if (v.nu2 == 3 && v.tau == 2) ++tau_two_at_three[3];
        return v.tau + 1 <= v.nu2;
      });
  for (auto [nu, count] : by_nu2) {
    r.notes.push_back("planar instances with nu2 = " + std::to_string(nu) + ": " +
                      std::to_string(count));
  }
  r.notes.push_back("planar nu2 = 3 instances with tau exactly 2: " +
                    std::to_string(tau_two_at_three[3]));
  r.notes.push_back("planarity is a proxy: the planar class strictly contains the systems with "
                    "straight-line drawings");
  return r;
}

/// The 8-point system and every C44 member have non-planar incidence graphs
/// with a validated Kuratowski witness.
inline ClaimReport check_equality_family_nonplanar() {
  detail::Timer timer;
  ClaimReport r{"equality-family-nonplanar",
                "the 8-point system and every C44 member have non-planar incidence graphs",
                0, {}, 0, {}};
  std::vector<NamedSystem> family{c34_explicit()};
  for (auto& m : enumerate_c44()) family.push_back(std::move(m));
  for (const auto& f : family) {
    ++r.instances_checked;
    auto g = incidence_graph(f.system);
    auto v = is_planar(g);
    if (v.planar || !validate_verdict(g, v)) {
      r.counterexamples.push_back({{"source", f.name},
                                   {"instance", to_json(InstanceFile{f.system, f.name, {}})},
                                   {"verdict", to_json(v)}});
    } else {
      r.notes.push_back(f.name + ": " +
                        (v.witness->kind == KuratowskiWitness::Kind::K5 ? "K5" : "K3,3") +
                        " subdivision with " + std::to_string(v.witness->paths.size()) + " paths");
    }
  }
  r.wall_seconds = timer.seconds();
  return r;
}

inline ClaimReport check_solver_oracle(const std::vector<Analysis>& corpus) {
  detail::Timer timer;
  ClaimReport r{"solver-matches-oracle",
                "branch and bound values and witnesses equal exhaustive enumeration", 0, {}, 0, {}};
  std::size_t skipped = 0;
  for (const auto& a : corpus) {
    const auto& s = a.instance.system;
    if (s.num_points() > detail::kOracleLimit || s.num_lines() > detail::kOracleLimit) {
      ++skipped;
      continue;
    }
    ++r.instances_checked;
    auto bt = brute_force_transversal(s);
    auto bn = brute_force_two_packing(s);
    if (bt != a.tau || bn != a.nu2) {
      auto j = detail::describe(a.instance, a.tau.value(), a.nu2.value());
      j["oracle_tau"] = bt.value();
      j["oracle_nu2"] = bn.value();
      r.counterexamples.push_back(std::move(j));
    }
  }
  if (skipped) r.notes.push_back("beyond oracle range: " + std::to_string(skipped));
  r.wall_seconds = timer.seconds();
  return r;
}

inline ClaimReport check_certificates(const std::vector<Analysis>& corpus) {
  detail::Timer timer;
  ClaimReport r{"certificates-validate",
                "every transversal meets all lines and every packing has no triple point", 0, {},
                0, {}};
  for (const auto& a : corpus) {
    ++r.instances_checked;
    const auto& s = a.instance.system;
    if (!is_transversal(s, a.tau.members) || !is_two_packing(s, a.nu2.members)) {
      r.counterexamples.push_back(detail::describe(a.instance, a.tau.value(), a.nu2.value()));
    }
  }
  r.wall_seconds = timer.seconds();
  return r;
}

inline ClaimReport check_tau_nu2_bounds(const std::vector<Analysis>& corpus) {
  std::size_t upper = 0;
  auto r = detail::value_claim(
      "tau-nu2-bounds",
      "ceil(nu2/2) <= tau always; tau <= nu2(nu2-1)/2 when nu2 >= 2 and there are more than nu2 "
      "lines",
      corpus, [](const Analysis&) { return true; },
      [&](const Analysis& a, detail::Values v) {
        if ((v.nu2 + 1) / 2 > v.tau) return false;
        if (v.nu2 >= 2 && a.lines() > v.nu2) {
          ++upper;
          return v.tau <= v.nu2 * (v.nu2 - 1) / 2;
        }
        return true;
      });
  r.notes.push_back("upper bound asserted on " + std::to_string(upper) + " instances");
  return r;
}

inline ClaimReport check_three_hypergraph(const std::vector<Analysis>& corpus) {
  detail::Timer timer;
  ClaimReport r{"three-hypergraph",
                "nu2 equals the clique number and tau the chromatic number of the 3-hypergraph of "
                "lines",
                0, {}, 0, {}};
  std::size_t skipped = 0;
  for (const auto& a : corpus) {
    if (a.lines() < 3) continue;
    if (a.lines() > kChromaticLimit) {
      ++skipped;
      continue;
    }
    ++r.instances_checked;
    auto h = three_hypergraph(a.instance.system);
    std::size_t omega = clique_number_3h(h), chi = chromatic_number_3h(h);
    if (omega != a.nu2.value() || chi != a.tau.value()) {
      auto j = detail::describe(a.instance, a.tau.value(), a.nu2.value());
      j["clique_number"] = omega;
      j["chromatic_number"] = chi;
      r.counterexamples.push_back(std::move(j));
    }
  }
  if (skipped) r.notes.push_back("more than 13 lines, skipped: " + std::to_string(skipped));
  r.wall_seconds = timer.seconds();
  return r;
}

inline ClaimReport check_odd_planes(const std::vector<Analysis>& corpus) {
  return detail::value_claim(
      "odd-plane-values", "tau = nu2 = q + 1 for the plane of odd prime order q", corpus,
      [](const Analysis& a) { return a.instance.source.rfind("fixture:pi", 0) == 0; },
      [](const Analysis& a, detail::Values v) {
        unsigned q = static_cast<unsigned>(std::stoul(a.instance.source.substr(10)));
        return q % 2 == 0 || (v.tau == q + 1 && v.nu2 == q + 1);
      });
}

struct VerifyConfig {
  std::uint64_t seed = 7;
  std::size_t random_count = 1000;
  std::size_t exhaustive_points = 9;  // 0 disables the exhaustive class
  std::size_t exhaustive_lines = 7;
  std::size_t min_size = 2;
  std::size_t max_size = 4;
  bool fixtures = true;
};

/// Named systems plus small shapes that exercise each claim's hypothesis.
inline std::vector<Instance> fixture_instances() {
  std::vector<Instance> out;
  for (unsigned q : {2u, 3u, 5u}) {
    out.push_back({"fixture:pi" + std::to_string(q), projective_plane(q).system});
  }
  out.push_back({"fixture:c34", c34_explicit().system});
  out.push_back({"fixture:c", c_explicit().system});
  for (auto& m : enumerate_c44()) out.push_back({"fixture:" + m.name, std::move(m.system)});

  out.push_back({"fixture:pencil-4", LinearSystem(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})});
  std::vector<Line> petals;
  for (PointId i = 0; i < 5; ++i) petals.push_back({0, 1 + 2 * i, 2 + 2 * i});
  out.push_back({"fixture:sunflower-5", LinearSystem(11, petals)});
  out.push_back({"fixture:point-and-double-point",
                 LinearSystem(7, {{0, 1}, {0, 2, 5}, {0, 3, 6}, {1, 2, 3}})});
  // Five lines {p, a_i, b_i} through p=0, with a_i = 1..5 and b_i = 6..10.
  auto star = [] {
    std::vector<Line> lines;
    for (PointId i = 0; i < 5; ++i) lines.push_back({0, 1 + i, 6 + i});
    return lines;
  };
  auto disjoint_pair = star();
  disjoint_pair.push_back({1, 2, 3, 4, 5});
  disjoint_pair.push_back({6, 7, 8, 9, 10});
  out.push_back({"fixture:star-5-two-disjoint", LinearSystem(11, disjoint_pair)});
  auto meeting_pair = star();
  meeting_pair.push_back({1, 2, 11});
  meeting_pair.push_back({8, 9, 11});
  out.push_back({"fixture:star-5-two-meeting", LinearSystem(12, meeting_pair)});
  out.push_back({"fixture:triangle", LinearSystem(3, {{0, 1}, {1, 2}, {0, 2}})});
  return out;
}

/// Seeded random systems: `count` general draws plus `count / 2` random
/// restrictions of the plane of order 3 (which reach ν₂ = 4 far more often).
inline std::vector<Instance> random_instances(std::uint64_t seed, std::size_t count,
                                              std::vector<std::string>& warnings) {
  std::vector<Instance> out;
  std::mt19937_64 rng(seed);
  std::size_t exhausted = 0;
  for (std::size_t i = 0; i < count;) {
    std::size_t n = 5 + rng() % 9;   // 5..13
    std::size_t m = 3 + rng() % 10;  // 3..12
    std::size_t hi = 2 + rng() % 3;  // 2..4
    std::uint64_t s = rng();
    try {
      out.push_back({"random:" + std::to_string(s) + ":" + std::to_string(n) + "x" +
                         std::to_string(m) + ":2-" + std::to_string(hi),
                     random_linear_system(n, m, 2, hi, s)});
      ++i;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::GenerationExhausted) throw;
      ++exhausted;
    }
  }
  if (exhausted) {
    warnings.push_back("random generation exhausted " + std::to_string(exhausted) +
                       " times; those draws were replaced");
  }
  const LinearSystem pi3 = projective_plane(3).system;
  for (std::size_t i = 0; i < count / 2; ++i) {
    std::uniform_real_distribution<double> keep_line(0.4, 1.0), keep_point(0.6, 1.0);
    double pl = keep_line(rng), pp = keep_point(rng);
    std::bernoulli_distribution line_coin(pl), point_coin(pp);
    std::vector<LineIndex> lines;
    for (LineIndex l = 0; l < pi3.num_lines(); ++l)
      if (line_coin(rng)) lines.push_back(l);
    PointSet keep;
    for (std::size_t p = 0; p < pi3.num_points(); ++p)
      if (point_coin(rng)) keep.set(p);
    out.push_back({"pi3-sub:" + std::to_string(i), detail::restrict_lines(pi3, lines, keep).system});
  }
  return out;
}

struct VerifyReport {
  VerifyConfig config;
  std::map<std::string, std::size_t> corpus_counts;  // by source kind
  double corpus_seconds = 0;
  std::vector<ClaimReport> claims;
  std::vector<std::string> warnings;

  bool passed() const {
    return !claims.empty() &&
           std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.passed(); });
  }
};

/// Builds the corpus (fixtures, exhaustive class, random draws), solves each
/// instance once and evaluates every claim over it.
inline VerifyReport run_all(const VerifyConfig& config) {
  VerifyReport report;
  report.config = config;
  detail::Timer timer;
  std::vector<Instance> instances;
  if (config.fixtures) {
    auto f = fixture_instances();
    report.corpus_counts["fixture"] = f.size();
    instances.insert(instances.end(), f.begin(), f.end());
  }
  if (config.exhaustive_points > 0) {
    auto ex = exhaustive_small(config.exhaustive_points, config.exhaustive_lines, config.min_size,
                               config.max_size);
    report.corpus_counts["exhaustive"] = ex.size();
    for (std::size_t i = 0; i < ex.size(); ++i) {
      instances.push_back({"exhaustive:" + std::to_string(i), std::move(ex[i])});
    }
  }
  if (config.random_count > 0) {
    auto rnd = random_instances(config.seed, config.random_count, report.warnings);
    for (const auto& inst : rnd) {
      ++report.corpus_counts[inst.source.substr(0, inst.source.find(':'))];
    }
    instances.insert(instances.end(), rnd.begin(), rnd.end());
  }
  std::vector<Analysis> corpus;
  corpus.reserve(instances.size());
  for (auto& inst : instances) corpus.push_back(analyze(std::move(inst)));
  report.corpus_seconds = timer.seconds();

  auto add = [&](ClaimReport r) { report.claims.push_back(std::move(r)); };
  add(check_solver_oracle(corpus));
  add(check_certificates(corpus));
  add(check_tau_nu2_bounds(corpus));
  add(check_three_hypergraph(corpus));
  add(check_low_degree_packing(corpus));
  for (auto& r : check_nu2_two(corpus)) add(std::move(r));
  add(check_nu2_three(corpus));
  add(check_nu2_four_high_degree(corpus));
  add(check_nu2_four(corpus));
  add(check_planar_bound(corpus));
  add(check_equality_family_nonplanar());
  if (config.fixtures) add(check_odd_planes(corpus));
  return report;
}

inline nlohmann::json to_json(const ClaimReport& r, bool timing = true) {
  nlohmann::json j{{"id", r.id},
                   {"statement", r.statement},
                   {"passed", r.passed()},
                   {"instances_checked", r.instances_checked},
                   {"counterexamples", r.counterexamples},
                   {"notes", r.notes}};
  if (timing) j["wall_seconds"] = r.wall_seconds;
  return j;
}

/// With `timing` false the output depends only on the config.
inline nlohmann::json to_json(const VerifyReport& r, bool timing = true) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : r.claims) claims.push_back(to_json(c, timing));
  nlohmann::json j{{"config",
                    {{"seed", r.config.seed},
                     {"random_count", r.config.random_count},
                     {"exhaustive_points", r.config.exhaustive_points},
                     {"exhaustive_lines", r.config.exhaustive_lines},
                     {"line_sizes", {r.config.min_size, r.config.max_size}},
                     {"fixtures", r.config.fixtures}}},
                   {"corpus", r.corpus_counts},
                   {"passed", r.passed()},
                   {"warnings", r.warnings},
                   {"claims", claims}};
  if (timing) j["corpus_seconds"] = r.corpus_seconds;
  return j;
}

inline std::string to_markdown(const VerifyReport& r) {
  std::ostringstream out;
  out << "# Claim verification report\n\n";
  out << "Overall: **" << (r.passed() ? "PASS" : "FAIL") << "**\n\n";
  out << "Config: seed " << r.config.seed << ", " << r.config.random_count
      << " random draws, exhaustive up to " << r.config.exhaustive_points << " points and "
      << r.config.exhaustive_lines << " lines, line sizes " << r.config.min_size << "-"
      << r.config.max_size << ", fixtures " << (r.config.fixtures ? "on" : "off") << ".\n\n";
  out << "Corpus:";
  for (const auto& [kind, n] : r.corpus_counts) out << " " << kind << " " << n << ";";
  out << " solved in " << r.corpus_seconds << " s.\n\n";
  out << "Straight-line drawability is not decided directly. The planar-bound claim is checked "
         "on every instance whose incidence graph is planar, which is a necessary condition.\n\n";
  out << "| claim | statement | instances | counterexamples | seconds | result |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const auto& c : r.claims) {
    out << "| `" << c.id << "` | " << c.statement << " | " << c.instances_checked << " | "
        << c.counterexamples.size() << " | " << c.wall_seconds << " | "
        << (c.passed() ? "pass" : "FAIL") << " |\n";
  }
  for (const auto& c : r.claims) {
    if (c.notes.empty() && c.counterexamples.empty()) continue;
    out << "\n## " << c.id << "\n\n";
    for (const auto& n : c.notes) out << "- " << n << "\n";
    for (const auto& x : c.counterexamples) out << "- counterexample: `" << x.dump() << "`\n";
  }
  if (!r.warnings.empty()) {
    out << "\n## Warnings\n\n";
    for (const auto& w : r.warnings) out << "- " << w << "\n";
  }
  return out.str();
}

}  // namespace lsys
