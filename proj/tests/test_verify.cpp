#include <catch_amalgamated.hpp>

#include <map>

#include "lsys/verify.hpp"
#include "oracles.hpp"

using namespace lsys;

namespace {

// Isomorphism classes of linear systems on at most n points (no isolated
// points) with lines of the given sizes, by trying every subset of
// candidate lines and keying on the least relabeled line set.
std::size_t brute_force_class_count(std::size_t n, std::size_t max_lines, std::size_t lo,
                                    std::size_t hi) {
  std::vector<Line> cand;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::size_t k = static_cast<std::size_t>(__builtin_popcount(mask));
    if (k < lo || k > hi) continue;
    Line l;
    for (PointId p = 0; p < n; ++p)
      if (mask >> p & 1) l.push_back(p);
    cand.push_back(l);
  }
  std::vector<PointId> perm(n);
  std::set<std::pair<std::size_t, std::set<Line>>> classes;
  std::vector<Line> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    // Compact the covered points, then take the least image over all relabelings.
    std::vector<int> id(n, -1);
    std::size_t covered = 0;
    for (const auto& l : chosen)
      for (PointId p : l)
        if (id[p] < 0) id[p] = static_cast<int>(covered++);
    std::vector<Line> compact;
    for (const auto& l : chosen) {
      Line c;
      for (PointId p : l) c.push_back(static_cast<PointId>(id[p]));
      compact.push_back(c);
    }
    std::vector<PointId> q(covered);
    std::iota(q.begin(), q.end(), 0u);
    std::set<Line> best;
    bool first = true;
    do {
      auto img = oracle::line_set(oracle::mapped_lines(LinearSystem(covered, compact), q));
      if (first || img < best) best = img;
      first = false;
    } while (std::next_permutation(q.begin(), q.end()));
    classes.insert({covered, best});
    if (chosen.size() == max_lines) return;
    for (std::size_t i = from; i < cand.size(); ++i) {
      bool ok = true;
      for (const auto& l : chosen) {
        std::vector<PointId> common;
        std::set_intersection(l.begin(), l.end(), cand[i].begin(), cand[i].end(),
                              std::back_inserter(common));
        ok = ok && common.size() <= 1;
      }
      if (!ok) continue;
      chosen.push_back(cand[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return classes.size();
}

const Analysis& find(const std::vector<Analysis>& corpus, const std::string& source) {
  for (const auto& a : corpus)
    if (a.instance.source == source) return a;
  FAIL("no instance " << source);
  return corpus.front();
}

}  // namespace

TEST_CASE("exhaustive_small on graphs", "[verify]") {
  CHECK(exhaustive_small(3, 3, 2, 2).size() == 4);
  CHECK(exhaustive_small(4, 6, 2, 2).size() == 11);
  CHECK(exhaustive_small(5, 7, 2, 2).size() == brute_force_class_count(5, 7, 2, 2));
}

TEST_CASE("exhaustive_small matches brute-force class counts", "[verify]") {
  CHECK(exhaustive_small(5, 4, 2, 3).size() == brute_force_class_count(5, 4, 2, 3));
  CHECK(exhaustive_small(6, 3, 2, 4).size() == brute_force_class_count(6, 3, 2, 4));
  CHECK(exhaustive_small(4, 5, 1, 2).size() == brute_force_class_count(4, 5, 1, 2));
}

TEST_CASE("exhaustive_small output is valid and duplicate-free", "[verify]") {
  auto all = exhaustive_small(6, 4, 2, 3);
  CHECK(all.front().num_lines() == 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (PointId p = 0; p < all[i].num_points(); ++p) CHECK(all[i].degree(p) > 0);
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].num_points() != all[j].num_points()) continue;
      CHECK_FALSE(oracle::isomorphic_exact(all[i], all[j]));
    }
  }
  CHECK_THROWS_AS(exhaustive_small(10, 3), Error);
  CHECK_THROWS_AS(exhaustive_small(5, 8), Error);
  CHECK_THROWS_AS(exhaustive_small(5, 3, 3, 2), Error);
}

TEST_CASE("fixture shapes", "[verify]") {
  std::vector<Analysis> corpus;
  for (auto& inst : fixture_instances()) corpus.push_back(analyze(std::move(inst)));

  auto values = [&](const std::string& s) {
    const auto& a = find(corpus, s);
    return std::pair{a.tau.value(), a.nu2.value()};
  };
  using P = std::pair<std::size_t, std::size_t>;
  CHECK(values("fixture:pi3") == P{4, 4});
  CHECK(values("fixture:pi5") == P{6, 6});
  CHECK(values("fixture:pencil-4") == P{1, 2});
  CHECK(values("fixture:sunflower-5") == P{1, 2});
  CHECK(values("fixture:point-and-double-point") == P{2, 3});
  CHECK(values("fixture:star-5-two-disjoint") == P{3, 4});
  CHECK(values("fixture:star-5-two-meeting") == P{2, 4});
  CHECK(values("fixture:triangle") == P{2, 3});
  CHECK(find(corpus, "fixture:star-5-two-disjoint").max_degree == 5);
  const auto& shape = find(corpus, "fixture:point-and-double-point");
  CHECK(is_transversal(shape.instance.system, std::vector<PointId>{0, 1}));

  for (const auto& r : {check_low_degree_packing(corpus), check_nu2_three(corpus),
                        check_nu2_four_high_degree(corpus), check_nu2_four(corpus),
                        check_odd_planes(corpus)}) {
    INFO(r.id);
    CHECK(r.passed());
  }
  for (const auto& r : check_nu2_two(corpus)) CHECK(r.passed());
}

TEST_CASE("claims flag genuine counterexamples only after re-checking", "[verify]") {
  std::vector<Analysis> corpus;
  corpus.push_back(analyze({"a", c34_explicit().system}));
  corpus.push_back(analyze({"b", LinearSystem(4, {{0, 1}, {2, 3}})}));
  // A false statement: tau equals nu2.
  auto r = detail::value_claim(
      "false", "tau = nu2", corpus, [](const Analysis&) { return true; },
      [](const Analysis&, detail::Values v) { return v.tau == v.nu2; });
  CHECK(r.instances_checked == 2);
  CHECK(r.counterexamples.empty());

  corpus.push_back(analyze({"c", LinearSystem(3, {{0, 1}, {1, 2}, {0, 2}})}));
  r = detail::value_claim(
      "false", "tau = nu2", corpus, [](const Analysis&) { return true; },
      [](const Analysis&, detail::Values v) { return v.tau == v.nu2; });
  REQUIRE(r.counterexamples.size() == 1);
  const auto& x = r.counterexamples.front();
  CHECK(x["source"] == "c");
  CHECK(x["tau"] == 2);
  CHECK(x["nu2"] == 3);
  CHECK(parse_instance(x["instance"].dump()).system == corpus.back().instance.system);
  CHECK_FALSE(r.passed());

  // A corrupted solver value is caught by re-checking, not reported.
  corpus.back().tau.members = {0};
  r = detail::value_claim(
      "false", "tau = 1", corpus, [](const Analysis& a) { return a.instance.source == "c"; },
      [](const Analysis&, detail::Values v) { return v.tau != 1; });
  CHECK(r.counterexamples.empty());
  CHECK_FALSE(r.notes.empty());

  ClaimReport empty{"x", "y", 0, {}, 0, {}};
  CHECK_FALSE(empty.passed());
}

TEST_CASE("run_all is deterministic and passes", "[verify]") {
  VerifyConfig config;
  config.random_count = 150;
  config.exhaustive_points = 6;
  config.exhaustive_lines = 5;
  auto a = run_all(config);
  auto b = run_all(config);
  CHECK(a.passed());
  CHECK(to_json(a, false) == to_json(b, false));
  for (const auto& c : a.claims) {
    INFO(c.id);
    CHECK(c.passed());
  }

  config.seed = 8;
  auto c = run_all(config);
  CHECK(c.passed());
  REQUIRE(c.claims.size() == a.claims.size());
  for (std::size_t i = 0; i < a.claims.size(); ++i) CHECK(c.claims[i].passed() == a.claims[i].passed());

  auto md = to_markdown(a);
  for (const auto& cl : a.claims) CHECK(md.find("`" + cl.id + "`") != std::string::npos);
  auto j = to_json(a);
  CHECK(j["claims"].size() == a.claims.size());
  CHECK(j.contains("corpus_seconds"));
}

TEST_CASE("fixtures-only run passes", "[verify]") {
  VerifyConfig config;
  config.random_count = 0;
  config.exhaustive_points = 0;
  auto r = run_all(config);
  CHECK(r.corpus_counts.size() == 1);
  for (const auto& c : r.claims) {
    INFO(c.id);
    CHECK(c.passed());
  }
}
