#include <catch_amalgamated.hpp>

#include <random>

#include "lsys/constructions.hpp"
#include "lsys/solvers.hpp"
#include "lsys/three_hypergraph.hpp"
#include "oracles.hpp"

using namespace lsys;

namespace {

void check_certificates(const LinearSystem& sys, const Certificate& t, const Certificate& n) {
  CHECK(t.kind == Certificate::Kind::Transversal);
  CHECK(n.kind == Certificate::Kind::TwoPacking);
  CHECK(std::is_sorted(t.members.begin(), t.members.end()));
  CHECK(std::is_sorted(n.members.begin(), n.members.end()));
  CHECK(is_transversal(sys, t.members));
  CHECK(is_two_packing(sys, n.members));
}

LinearSystem random_small(std::mt19937_64& rng) {
  std::size_t n = 6 + rng() % 7;       // 6..12 points
  std::size_t m = 3 + rng() % 8;       // 3..10 lines
  std::size_t hi = 2 + rng() % 3;      // max line size 2..4
  return oracle::random_system(rng, n, m, 2, hi);
}

}  // namespace

TEST_CASE("is_transversal and is_two_packing", "[solvers]") {
  auto c34 = c34_explicit().system;
  CHECK(is_transversal(c34, std::vector<PointId>{2, 4, 5, 7}));  // x1 x3 y1 y4
  // x1 x2 y1 y4 misses {q,x3,y3}.
  CHECK_FALSE(is_transversal(c34, std::vector<PointId>{2, 3, 5, 7}));
  CHECK_FALSE(is_transversal(c34, std::vector<PointId>{}));
  CHECK_FALSE(is_transversal(c34, std::vector<PointId>{0, 1, 2}));

  auto pi3 = projective_plane(3).system;
  for (const auto& l : pi3.lines()) CHECK(is_transversal(pi3, l));

  // {p,x2,y4} {q,x3,y3} {x1,x3,y4} {x1,x2,y3}
  CHECK(is_two_packing(c34, std::vector<LineIndex>{7, 6, 3, 5}));
  CHECK_FALSE(is_two_packing(pi3, pi3.lines_through(0)));
  auto through = pi3.lines_through(0);
  CHECK(is_two_packing(pi3, std::vector<LineIndex>{through[0], through[1]}));
  CHECK(is_two_packing(pi3, std::vector<LineIndex>{}));

  CHECK_THROWS_AS(is_transversal(c34, std::vector<PointId>{8}), Error);
  CHECK_THROWS_AS(is_two_packing(c34, std::vector<LineIndex>{8}), Error);
}

TEST_CASE("named values", "[solvers]") {
  for (const auto& f : {projective_plane(3), c34_explicit(), c_explicit()}) {
    INFO(f.name);
    auto t = transversal_number(f.system);
    auto n = two_packing_number(f.system);
    CHECK(t.value() == 4);
    CHECK(n.value() == 4);
    check_certificates(f.system, t, n);
    CHECK(brute_force_transversal(f.system) == t);
    CHECK(brute_force_two_packing(f.system) == n);
  }
  auto pi2 = projective_plane(2).system;
  CHECK(transversal_number(pi2).value() == 3);
  CHECK(two_packing_number(pi2) == brute_force_two_packing(pi2));
  // The four lines avoiding any one point.
  CHECK(two_packing_number(pi2).value() == 4);

  LinearSystem single(3, {{0, 1, 2}});
  CHECK(transversal_number(single).members == std::vector<std::uint32_t>{0});
  CHECK(two_packing_number(single).value() == 1);

  LinearSystem empty;
  CHECK(transversal_number(empty).value() == 0);
  CHECK(two_packing_number(empty).value() == 0);
  CHECK(brute_force_transversal(empty).value() == 0);
  CHECK(brute_force_two_packing(empty).value() == 0);
}

TEST_CASE("larger planes", "[solvers]") {
  for (unsigned q : {5u, 7u}) {
    auto sys = projective_plane(q).system;
    auto t = transversal_number(sys);
    auto n = two_packing_number(sys);
    CHECK(t.value() == q + 1);
    CHECK(n.value() == q + 1);
    check_certificates(sys, t, n);
  }
}

TEST_CASE("oracle size guard", "[solvers]") {
  auto pi5 = projective_plane(5).system;  // 31 points
  try {
    brute_force_transversal(pi5);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  CHECK_THROWS_AS(brute_force_two_packing(pi5), Error);
  CHECK_THROWS_AS(chromatic_number_3h(three_hypergraph(projective_plane(5).system)), Error);
}

TEST_CASE("solvers agree with exhaustive enumeration", "[solvers][property]") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 1200; ++i) {
    auto sys = random_small(rng);
    auto t = transversal_number(sys);
    auto n = two_packing_number(sys);
    check_certificates(sys, t, n);
    // Both sides return the lexicographically least optimum.
    CHECK(t == brute_force_transversal(sys));
    CHECK(n == brute_force_two_packing(sys));
  }
}

TEST_CASE("two-sided bound between tau and nu2", "[solvers][property]") {
  std::mt19937_64 rng(202);
  int asserted = 0;
  for (int i = 0; i < 1000; ++i) {
    auto sys = random_small(rng);
    std::size_t tau = transversal_number(sys).value();
    std::size_t nu = two_packing_number(sys).value();
    CHECK((nu + 1) / 2 <= tau);
    if (nu >= 2 && sys.num_lines() > nu) {
      CHECK(tau <= nu * (nu - 1) / 2);
      ++asserted;
    }
  }
  CHECK(asserted > 500);
}

TEST_CASE("nu2 equals the line count exactly when max degree is at most two",
          "[solvers][property]") {
  std::mt19937_64 rng(303);
  int low = 0;
  for (int i = 0; i < 800; ++i) {
    auto sys = random_small(rng);
    bool all = two_packing_number(sys).value() == sys.num_lines();
    CHECK(all == (sys.max_degree() <= 2));
    low += sys.max_degree() <= 2;
  }
  CHECK(low > 20);
  // A 5-cycle of 2-point lines.
  LinearSystem cycle(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(two_packing_number(cycle).value() == 5);
  LinearSystem two(4, {{0, 1}, {2, 3}});
  CHECK(two_packing_number(two).value() == 2);
}

TEST_CASE("3-hypergraph clique and chromatic numbers", "[solvers]") {
  auto pi3 = three_hypergraph(projective_plane(3).system);
  CHECK(clique_number_3h(pi3) == 4);
  CHECK(chromatic_number_3h(pi3) == 4);

  auto star = three_hypergraph(LinearSystem(4, {{0, 1}, {0, 2}, {0, 3}}));
  CHECK(clique_number_3h(star) == 2);
  CHECK(chromatic_number_3h(star) == 1);

  std::mt19937_64 rng(404);
  for (int i = 0; i < 400; ++i) {
    auto sys = oracle::random_system(rng, 6 + rng() % 6, 3 + rng() % 5, 2, 2 + rng() % 3);
    auto h = three_hypergraph(sys);
    CHECK(clique_number_3h(h) == two_packing_number(sys).value());
    CHECK(chromatic_number_3h(h) == transversal_number(sys).value());
  }
}

TEST_CASE("monotonicity under line deletion and addition", "[solvers][property]") {
  std::mt19937_64 rng(505);
  for (int i = 0; i < 400; ++i) {
    auto sys = random_small(rng);
    std::size_t tau = transversal_number(sys).value();
    std::size_t nu = two_packing_number(sys).value();

    auto del = delete_line(sys, static_cast<LineIndex>(rng() % sys.num_lines())).system;
    std::size_t tau_d = transversal_number(del).value();
    std::size_t nu_d = two_packing_number(del).value();
    CHECK(tau_d <= tau);
    CHECK(nu_d <= nu);
    CHECK(nu_d + 1 >= nu);

    // Add a random line that keeps the system linear, if one exists.
    for (int attempt = 0; attempt < 50; ++attempt) {
      std::vector<PointId> pts(sys.num_points());
      std::iota(pts.begin(), pts.end(), 0u);
      std::shuffle(pts.begin(), pts.end(), rng);
      Line extra(pts.begin(), pts.begin() + 2 + static_cast<long>(rng() % 2));
      auto lines = sys.lines();
      lines.push_back(extra);
      try {
        LinearSystem bigger(sys.num_points(), lines);
        CHECK(transversal_number(bigger).value() >= tau);
        CHECK(two_packing_number(bigger).value() >= nu);
        break;
      } catch (const Error&) {
      }
    }
  }
}

TEST_CASE("tau is one exactly when nu2 is two", "[solvers][property]") {
  std::mt19937_64 rng(606);
  int ones = 0;
  for (int i = 0; i < 1000; ++i) {
    auto sys = random_small(rng);
    if (sys.num_lines() <= 2) continue;
    bool tau1 = transversal_number(sys).value() == 1;
    bool nu2 = two_packing_number(sys).value() == 2;
    CHECK(tau1 == nu2);
    ones += tau1;
  }
  // Random draws rarely produce pencils; add some by hand.
  for (std::size_t k = 3; k <= 8; ++k) {
    std::vector<Line> lines;
    for (PointId i = 1; i <= k; ++i) lines.push_back({0, i});
    LinearSystem pencil(k + 1, lines);
    CHECK(transversal_number(pencil).value() == 1);
    CHECK(two_packing_number(pencil).value() == 2);
    ++ones;
  }
  CHECK(ones > 0);
}
