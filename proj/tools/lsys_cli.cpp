// lsys: command-line front end for the linear-system library.
//
// Exit codes: 0 success, 1 invalid input file, 2 bad name or parameters,
// 3 a verified claim failed.

#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lsys/constructions.hpp"
#include "lsys/io.hpp"
#include "lsys/planarity.hpp"
#include "lsys/solvers.hpp"
#include "lsys/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kBadInput = 1, kBadParams = 2, kClaimFailed = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string symbol_comment(const lsys::NamedSystem& f) {
  std::string c;
  for (std::size_t i = 0; i < f.point_names.size(); ++i) {
    c += (i ? " " : "points: ") + f.point_names[i] + "=" + std::to_string(i);
  }
  return c;
}

std::vector<lsys::NamedSystem> construct(const std::string& name) {
  if (name.rfind("pi:", 0) == 0) {
    const std::string q = name.substr(3);
    if (q.empty() || q.size() > 4 || q.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("bad plane order `" + q + "`");
    }
    try {
      return {lsys::projective_plane(static_cast<unsigned>(std::stoul(q)))};
    } catch (const lsys::Error& e) {
      throw UsageError(e.code() == lsys::ErrorCode::NotPrime ? "order must be prime" : e.what());
    }
  }
  if (name == "c34") return {lsys::c34_explicit()};
  if (name == "c") return {lsys::c_explicit()};
  if (name == "c44") return lsys::enumerate_c44();
  throw UsageError("unknown system `" + name + "` (expected pi:q, c34, c or c44)");
}

lsys::InstanceFile to_file(const lsys::NamedSystem& f) {
  std::string name = f.name;
  if (auto q = f.provenance.find("q"); q != f.provenance.end()) name = "pi" + q->second;
  return {f.system, name, symbol_comment(f)};
}

std::string file_stem(const lsys::InstanceFile& f) { return f.name; }

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
}

void print(const json& j, const std::string& format, const std::string& text) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string join(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

int cmd_construct(const std::string& name, const std::string& out, const std::string& format) {
  auto systems = construct(name);
  std::vector<lsys::InstanceFile> files;
  for (const auto& s : systems) files.push_back(to_file(s));
  if (name == "c44") {
    if (out.empty()) {
      json arr = json::array();
      for (const auto& f : files) arr.push_back(lsys::to_json(f));
      std::cout << arr.dump(2) << "\n";
      return kOk;
    }
    fs::create_directories(out);
    for (const auto& f : files) write_file(fs::path(out) / (file_stem(f) + ".json"), lsys::write_instance(f));
    if (format != "json") std::cerr << "wrote " << files.size() << " members to " << out << "\n";
    return kOk;
  }
  const auto& f = files.front();
  if (out.empty()) {
    std::cout << lsys::write_instance(f);
  } else {
    if (fs::path(out).has_parent_path()) fs::create_directories(fs::path(out).parent_path());
    write_file(out, lsys::write_instance(f));
  }
  return kOk;
}

int cmd_solve(const std::string& in, const std::string& what, const std::string& format) {
  auto f = lsys::load_instance(in);
  json j;
  std::string text;
  if (what == "tau" || what == "both") {
    auto c = lsys::transversal_number(f.system);
    j["tau"] = lsys::to_json(c);
    text += "tau = " + std::to_string(c.value()) + "  transversal: " + join(c.members) + "\n";
  }
  if (what == "nu2" || what == "both") {
    auto c = lsys::two_packing_number(f.system);
    j["nu2"] = lsys::to_json(c);
    text += "nu2 = " + std::to_string(c.value()) + "  2-packing lines: " + join(c.members) + "\n";
  }
  print(j, format, text);
  return kOk;
}

int cmd_planarity(const std::string& in, const std::string& format) {
  auto f = lsys::load_instance(in);
  auto g = lsys::incidence_graph(f.system);
  auto v = lsys::is_planar(g);
  json j = lsys::to_json(v);
  j["verdict"] = v.planar ? "planar" : "non-planar";
  j["validated"] = lsys::validate_verdict(g, v);
  j["vertices"] = g.num_vertices();
  j["edges"] = g.num_edges();
  std::string text = std::string(v.planar ? "planar" : "non-planar") + "\n";
  if (v.witness) {
    text += std::string(v.witness->kind == lsys::KuratowskiWitness::Kind::K5 ? "K5" : "K3,3") +
            " subdivision; branch vertices: " + join(v.witness->branch_vertices) + "\n";
    for (const auto& p : v.witness->paths) text += "  path: " + join(p) + "\n";
  }
  print(j, format, text);
  return kOk;
}

int cmd_stats(const std::string& in, const std::string& format) {
  auto f = lsys::load_instance(in);
  const auto& s = f.system;
  std::map<std::size_t, std::size_t> degrees, sizes;
  for (lsys::PointId p = 0; p < s.num_points(); ++p) ++degrees[s.degree(p)];
  for (const auto& l : s.lines()) ++sizes[l.size()];
  json j{{"n_points", s.num_points()},
         {"n_lines", s.num_lines()},
         {"max_degree", s.max_degree()},
         {"X3", s.points_of_degree_at_least(3).size()},
         {"X4", s.points_of_degree_at_least(4).size()}};
  std::string text = "points " + std::to_string(s.num_points()) + ", lines " +
                     std::to_string(s.num_lines()) + ", max degree " +
                     std::to_string(s.max_degree()) + "\n|X3| = " +
                     std::to_string(s.points_of_degree_at_least(3).size()) + ", |X4| = " +
                     std::to_string(s.points_of_degree_at_least(4).size()) + "\ndegrees:";
  for (auto [d, n] : degrees) {
    j["degree_histogram"][std::to_string(d)] = n;
    text += " " + std::to_string(d) + "x" + std::to_string(n);
  }
  text += "\nline sizes:";
  for (auto [k, n] : sizes) {
    j["line_size_histogram"][std::to_string(k)] = n;
    text += " " + std::to_string(k) + "x" + std::to_string(n);
  }
  text += "\n";
  print(j, format, text);
  return kOk;
}

int cmd_verify(const lsys::VerifyConfig& config, const std::string& out, const std::string& format) {
  auto report = lsys::run_all(config);
  auto j = lsys::to_json(report);
  auto md = lsys::to_markdown(report);
  if (!out.empty()) {
    fs::create_directories(out);
    write_file(fs::path(out) / "report.json", j.dump(2) + "\n");
    write_file(fs::path(out) / "report.md", md);
    for (const auto& c : report.claims) {
      for (std::size_t i = 0; i < c.counterexamples.size(); ++i) {
        fs::create_directories(fs::path(out) / "counterexamples");
        write_file(fs::path(out) / "counterexamples" / (c.id + "-" + std::to_string(i) + ".json"),
                   c.counterexamples[i]["instance"].dump(2) + "\n");
      }
    }
  }
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (format == "markdown") {
    std::cout << md;
  } else {
    for (const auto& c : report.claims) {
      std::cout << (c.passed() ? "pass  " : "FAIL  ") << c.id << "  (" << c.instances_checked
                << " instances, " << c.counterexamples.size() << " counterexamples)\n";
    }
    for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
  }
  return report.passed() ? kOk : kClaimFailed;
}

int cmd_enumerate_c44(const std::string& out, const std::string& format) {
  auto members = lsys::enumerate_c44();
  json arr = json::array();
  std::string text;
  for (const auto& m : members) {
    arr.push_back({{"name", m.name},
                   {"n_points", m.system.num_points()},
                   {"n_lines", m.system.num_lines()},
                   {"tau", lsys::transversal_number(m.system).value()},
                   {"nu2", lsys::two_packing_number(m.system).value()}});
    text += m.name + ": " + std::to_string(m.system.num_points()) + " points, " +
            std::to_string(m.system.num_lines()) + " lines\n";
  }
  if (!out.empty()) {
    fs::create_directories(out);
    for (const auto& m : members) {
      write_file(fs::path(out) / (m.name + ".json"), lsys::write_instance(to_file(m)));
    }
  }
  print(arr, format, text);
  return kOk;
}

std::pair<std::size_t, std::size_t> parse_bounds(const std::string& s) {
  auto comma = s.find(',');
  auto digits = [](const std::string& t) {
    return !t.empty() && t.size() < 4 && t.find_first_not_of("0123456789") == std::string::npos;
  };
  if (comma == std::string::npos || !digits(s.substr(0, comma)) || !digits(s.substr(comma + 1))) {
    throw UsageError("--exhaustive expects \"P,L\"");
  }
  return {std::stoul(s.substr(0, comma)), std::stoul(s.substr(comma + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transversal and 2-packing numbers of linear systems"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text", "markdown"}))
      ->capture_default_str();

  std::string out, in, name, what = "both", exhaustive = "9,7";
  lsys::VerifyConfig config;
  bool no_fixtures = false;

  auto* construct_cmd = app.add_subcommand("construct", "Write a named system (pi:q, c34, c, c44)");
  construct_cmd->add_option("name", name, "pi:q | c34 | c | c44")->required();
  construct_cmd->add_option("--out", out, "Output file (c44: directory)");

  auto* solve_cmd = app.add_subcommand("solve", "Compute tau and/or nu2 with witnesses");
  solve_cmd->add_option("input", in, "Instance file (JSON or text)")->required();
  solve_cmd->add_option("--what", what, "tau | nu2 | both")
      ->check(CLI::IsMember({"tau", "nu2", "both"}))
      ->capture_default_str();

  auto* planarity_cmd = app.add_subcommand("planarity", "Planarity of the incidence graph");
  planarity_cmd->add_option("input", in, "Instance file")->required();

  auto* stats_cmd = app.add_subcommand("stats", "Degree and line-size statistics");
  stats_cmd->add_option("input", in, "Instance file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the claim harness");
  verify_cmd->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--random", config.random_count, "Random draws")->capture_default_str();
  verify_cmd->add_option("--exhaustive", exhaustive, "Exhaustive bounds \"P,L\" (\"0,0\" disables)")
      ->capture_default_str();
  verify_cmd->add_flag("--no-fixtures", no_fixtures, "Skip the named fixtures");
  verify_cmd->add_option("--out", out, "Directory for report.json, report.md and counterexamples");

  auto* c44_cmd = app.add_subcommand("enumerate-c44", "List the C44 family");
  c44_cmd->add_option("--out", out, "Directory for member files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadParams;
  }

  try {
    if (*construct_cmd) return cmd_construct(name, out, format);
    if (*solve_cmd) return cmd_solve(in, what, format);
    if (*planarity_cmd) return cmd_planarity(in, format);
    if (*stats_cmd) return cmd_stats(in, format);
    if (*verify_cmd) {
      auto [p, l] = parse_bounds(exhaustive);
      config.exhaustive_points = p;
      config.exhaustive_lines = p == 0 ? 0 : l;
      config.fixtures = !no_fixtures;
      return cmd_verify(config, out, format);
    }
    if (*c44_cmd) return cmd_enumerate_c44(out, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadParams;
  } catch (const lsys::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.line_pair()) {
      std::cerr << "offending lines: " << e.line_pair()->first << " and " << e.line_pair()->second
                << "\n";
    }
    bool params = e.code() == lsys::ErrorCode::TooLarge ||
                  e.code() == lsys::ErrorCode::InvalidArgument;
    return params && !*solve_cmd && !*planarity_cmd && !*stats_cmd ? kBadParams : kBadInput;
  }
  return kBadParams;
}
