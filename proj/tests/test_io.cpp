#include <catch_amalgamated.hpp>

#include <filesystem>
#include <random>

#include "lsys/constructions.hpp"
#include "lsys/io.hpp"
#include "oracles.hpp"

using namespace lsys;

namespace {

Error error_of(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected a parse failure for: " << text);
  return Error(ErrorCode::InvalidArgument, "");
}

}  // namespace

TEST_CASE("JSON round trip", "[io]") {
  std::vector<InstanceFile> files{
      {projective_plane(3).system, "pi3", ""},
      {c34_explicit().system, "c34", "p=0 q=1 x1=2"},
      {LinearSystem(), "", ""},
      {LinearSystem(5, {{1, 2}}), "", "isolated points"},
  };
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) files.push_back({oracle::random_system(rng, 10, 6, 2, 4), "", ""});
  for (const auto& f : files) {
    auto back = parse_instance(write_instance(f));
    CHECK(back.system == f.system);
    CHECK(back.name == f.name);
    CHECK(back.comments == f.comments);
    // The compact dump parses to the same thing.
    CHECK(parse_instance(to_json(f).dump()).system == f.system);
  }
}

TEST_CASE("save and load", "[io]") {
  auto dir = std::filesystem::temp_directory_path() / "lsys_test_io";
  std::filesystem::create_directories(dir);
  auto path = (dir / "c.json").string();
  InstanceFile f{c_explicit().system, "c", "ten lines"};
  save_instance(path, f);
  auto back = load_instance(path);
  CHECK(back.system == f.system);
  CHECK(back.name == "c");
  CHECK_THROWS_AS(load_instance((dir / "missing.json").string()), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("text format", "[io]") {
  auto f = parse_instance(
      "# a triangle with a tail\n"
      "0 1\n"
      "1 2   # side\n"
      "\n"
      "0 2 3\n");
  CHECK(f.system.num_points() == 4);
  CHECK(f.system.lines() == std::vector<Line>{{0, 1}, {1, 2}, {0, 2, 3}});
  CHECK(f.comments == "a triangle with a tail\nside");

  auto g = parse_instance("points 7\n0 1\n");
  CHECK(g.system.num_points() == 7);
  CHECK(parse_instance("").system.num_lines() == 0);
  CHECK(parse_instance("points 3\n").system.num_points() == 3);
}

TEST_CASE("malformed input", "[io]") {
  auto e = error_of("{\"format_version\": 1, \"n_points\": 3,");
  CHECK(e.code() == ErrorCode::ParseError);
  CHECK(std::string(e.what()).find("byte") != std::string::npos);

  CHECK(error_of("{\"n_points\": 3, \"lines\": []}").code() == ErrorCode::ParseError);
  CHECK(error_of("{\"format_version\": 2, \"n_points\": 3, \"lines\": []}").code() ==
        ErrorCode::ParseError);
  CHECK(error_of("{\"format_version\": 1, \"n_points\": -1, \"lines\": []}").code() ==
        ErrorCode::ParseError);
  auto bad_id = error_of("{\"format_version\": 1, \"n_points\": 3, \"lines\": [[0, 1], [1, \"x\"]]}");
  CHECK(bad_id.code() == ErrorCode::ParseError);
  CHECK(std::string(bad_id.what()).find("lines[1][1]") != std::string::npos);
  CHECK(error_of("{\"format_version\": 1, \"n_points\": 3, \"lines\": [], \"name\": 4}").code() ==
        ErrorCode::ParseError);

  auto text = error_of("0 1\n1 two\n");
  CHECK(text.code() == ErrorCode::ParseError);
  CHECK(std::string(text.what()).find("line 2") != std::string::npos);
  CHECK(error_of("points\n").code() == ErrorCode::ParseError);
  CHECK(error_of("0 -1\n").code() == ErrorCode::ParseError);
}

TEST_CASE("invalid systems report the offending lines", "[io]") {
  auto e = error_of("{\"format_version\": 1, \"n_points\": 4, \"lines\": [[0,1,2],[2,3],[0,1,3]]}");
  CHECK(e.code() == ErrorCode::LinearityViolation);
  REQUIRE(e.line_pair());
  CHECK(*e.line_pair() == std::pair<std::size_t, std::size_t>{0, 2});

  CHECK(error_of("points 2\n0 2\n").code() == ErrorCode::BadPointId);
  CHECK(error_of("0 1\n1 0\n").code() == ErrorCode::DuplicateLine);
}

TEST_CASE("certificate and verdict JSON", "[io]") {
  auto c34 = c34_explicit().system;
  auto t = to_json(transversal_number(c34));
  CHECK(t["kind"] == "transversal");
  CHECK(t["value"] == 4);
  CHECK(t["members"].size() == 4);
  auto v = to_json(zykov_planar(c34));
  CHECK(v["planar"] == false);
  CHECK(v.contains("witness"));
  CHECK(to_json(zykov_planar(LinearSystem(3, {{0, 1, 2}})))["planar"] == true);
}
