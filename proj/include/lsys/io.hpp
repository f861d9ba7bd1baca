#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lsys/linear_system.hpp"
#include "lsys/planarity.hpp"
#include "lsys/solvers.hpp"

namespace lsys {

inline constexpr int kFormatVersion = 1;

/// A system as stored on disk, with its optional name and free-form comments.
struct InstanceFile {
  LinearSystem system;
  std::string name;
  std::string comments;
};

inline nlohmann::json to_json(const InstanceFile& f) {
  nlohmann::json j;
  j["format_version"] = kFormatVersion;
  if (!f.name.empty()) j["name"] = f.name;
  if (!f.comments.empty()) j["comments"] = f.comments;
  j["n_points"] = f.system.num_points();
  j["lines"] = f.system.lines();
  return j;
}

/// Single-line JSON per system line, so files diff well.
inline std::string write_instance(const InstanceFile& f) {
  std::ostringstream out;
  out << "{\n  \"format_version\": " << kFormatVersion << ",\n";
  if (!f.name.empty()) out << "  \"name\": " << nlohmann::json(f.name).dump() << ",\n";
  if (!f.comments.empty()) out << "  \"comments\": " << nlohmann::json(f.comments).dump() << ",\n";
  out << "  \"n_points\": " << f.system.num_points() << ",\n  \"lines\": [";
  const auto& lines = f.system.lines();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out << (i ? ",\n    " : "\n    ") << nlohmann::json(lines[i]).dump();
  }
  out << (lines.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

inline std::size_t json_count(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number_integer()) parse_fail(where, "expected a non-negative integer");
  if (v.get<std::int64_t>() < 0) parse_fail(where, "expected a non-negative integer");
  return v.get<std::size_t>();
}

inline InstanceFile parse_json_instance(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail("byte " + std::to_string(e.byte), e.what());
  }
  if (!j.is_object()) parse_fail("document", "expected a JSON object");
  if (!j.contains("format_version")) parse_fail("format_version", "missing");
  if (json_count(j["format_version"], "format_version") != kFormatVersion) {
    parse_fail("format_version", "unsupported version " + j["format_version"].dump());
  }
  if (!j.contains("n_points")) parse_fail("n_points", "missing");
  if (!j.contains("lines")) parse_fail("lines", "missing");
  std::size_t n = json_count(j["n_points"], "n_points");
  const auto& jl = j["lines"];
  if (!jl.is_array()) parse_fail("lines", "expected an array");
  std::vector<Line> lines;
  for (std::size_t i = 0; i < jl.size(); ++i) {
    const std::string where = "lines[" + std::to_string(i) + "]";
    if (!jl[i].is_array()) parse_fail(where, "expected an array of point ids");
    Line line;
    for (std::size_t k = 0; k < jl[i].size(); ++k) {
      std::size_t p = json_count(jl[i][k], where + "[" + std::to_string(k) + "]");
      if (p >= kMaxIds) parse_fail(where, "point id " + std::to_string(p) + " out of range");
      line.push_back(static_cast<PointId>(p));
    }
    lines.push_back(std::move(line));
  }
  InstanceFile f{LinearSystem(n, std::move(lines)), {}, {}};
  for (const char* key : {"name", "comments"}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_string()) parse_fail(key, "expected a string");
  }
  f.name = j.value("name", "");
  f.comments = j.value("comments", "");
  return f;
}

// One system line per text line; `#` starts a comment; an optional
// `points N` line fixes the point count, otherwise it is max id + 1.
inline InstanceFile parse_text_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string row;
  std::vector<Line> lines;
  std::optional<std::size_t> declared;
  std::size_t max_id_plus_one = 0;
  std::string comments;
  for (std::size_t lineno = 1; std::getline(in, row); ++lineno) {
    const std::string where = "line " + std::to_string(lineno);
    if (auto hash = row.find('#'); hash != std::string::npos) {
      std::string c = row.substr(hash + 1);
      if (!c.empty() && c.front() == ' ') c.erase(0, 1);
      comments += (comments.empty() ? "" : "\n") + c;
      row.erase(hash);
    }
    std::istringstream tokens(row);
    std::string tok;
    if (!(tokens >> tok)) continue;
    if (tok == "points") {
      std::string count;
      if (!(tokens >> count) || count.find_first_not_of("0123456789") != std::string::npos) {
        parse_fail(where, "expected `points N`");
      }
      if (declared) parse_fail(where, "repeated `points` directive");
      declared = std::stoul(count);
      if (tokens >> tok) parse_fail(where, "trailing text after `points N`");
      continue;
    }
    Line line;
    do {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos ||
          tok.size() > 6) {
        parse_fail(where, "bad point id `" + tok + "`");
      }
      auto p = std::stoul(tok);
      if (p >= kMaxIds) parse_fail(where, "point id " + tok + " out of range");
      line.push_back(static_cast<PointId>(p));
      max_id_plus_one = std::max<std::size_t>(max_id_plus_one, p + 1);
    } while (tokens >> tok);
    lines.push_back(std::move(line));
  }
  return InstanceFile{LinearSystem(declared.value_or(max_id_plus_one), std::move(lines)), {},
                      comments};
}

}  // namespace detail

/// Parses JSON when the first non-blank character is `{`, else the text
/// format. Throws ParseError with a location for syntax problems and the
/// LinearSystem errors (with the offending line pair) for invalid systems.
inline InstanceFile parse_instance(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return detail::parse_json_instance(text);
  }
  return detail::parse_text_instance(text);
}

inline InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.message(), e.line_pair());
  }
}

inline void save_instance(const std::string& path, const InstanceFile& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, path + ": cannot write");
  out << write_instance(f);
}

inline nlohmann::json to_json(const Certificate& c) {
  return {{"kind", c.kind == Certificate::Kind::Transversal ? "transversal" : "two_packing"},
          {"value", c.value()},
          {"members", c.members}};
}

inline nlohmann::json to_json(const KuratowskiWitness& w) {
  return {{"kind", w.kind == KuratowskiWitness::Kind::K5 ? "K5" : "K3,3"},
          {"branch_vertices", w.branch_vertices},
          {"paths", w.paths}};
}

inline nlohmann::json to_json(const PlanarityVerdict& v) {
  nlohmann::json j{{"planar", v.planar}};
  if (v.embedding) j["embedding"] = *v.embedding;
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

}  // namespace lsys
