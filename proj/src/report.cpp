#include "realbott/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "realbott/error.hpp"

namespace realbott {

namespace {

using Json = nlohmann::ordered_json;

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

ClassReport make_report(const Classification& c, std::int64_t elapsed_ms) {
  ClassReport r;
  r.dim = c.dim;
  r.total_matrices = c.total_matrices;
  r.elapsed_ms = elapsed_ms;
  for (const auto& cls : c.classes)
    r.classes.push_back({cls.representative.key_string(), cls.type.parts, cls.orientable, cls.member_count, cls.orbit_sizes()});
  return r;
}

std::string render_report(const ClassReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    Json classes = Json::array();
    for (const auto& c : report.classes) {
      Json entry;
      entry["rep"] = c.rep;
      entry["type"] = c.type;
      entry["orientable"] = c.orientable;
      entry["member_count"] = c.member_count;
      entry["orbit_sizes"] = c.orbit_sizes;
      classes.push_back(std::move(entry));
    }
    Json j;
    j["dim"] = report.dim;
    j["total_matrices"] = report.total_matrices;
    j["classes"] = std::move(classes);
    j["tool_version"] = report.tool_version;
    j["elapsed_ms"] = report.elapsed_ms;
    return j.dump() + "\n";
  }

  std::ostringstream out;
  out << "dim " << report.dim << ": " << report.classes.size() << " diffeomorphism classes among " << report.total_matrices
      << " Bott matrices (* = orientable)\n";
  std::size_t rep_width = 3;
  for (const auto& c : report.classes) rep_width = std::max(rep_width, c.rep.size());
  out << std::left << std::setw(5) << "#" << std::setw(12) << "type" << std::setw(static_cast<int>(rep_width) + 2) << "rep"
      << std::setw(9) << "members"
      << "orbits\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const auto& c = report.classes[i];
    const auto label = std::to_string(i + 1) + (c.orientable ? "*" : "");
    out << std::setw(5) << label << std::setw(12) << ("(" + join(c.type) + ")")
        << std::setw(static_cast<int>(rep_width) + 2) << (c.rep.empty() ? "-" : c.rep) << std::setw(9) << c.member_count
        << join(c.orbit_sizes) << "\n";
  }
  return out.str();
}

ClassReport parse_report_json(const std::string& text) {
  try {
    const auto j = Json::parse(text);
    ClassReport r;
    r.dim = j.at("dim").get<int>();
    r.total_matrices = j.at("total_matrices").get<std::uint64_t>();
    for (const auto& c : j.at("classes")) {
      r.classes.push_back({c.at("rep").get<std::string>(), c.at("type").get<std::vector<int>>(), c.at("orientable").get<bool>(),
                           c.at("member_count").get<std::uint64_t>(), c.at("orbit_sizes").get<std::vector<int>>()});
    }
    r.tool_version = j.at("tool_version").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

std::filesystem::path cache_file(const std::filesystem::path& dir, int dim) {
  return dir / ("classify-dim" + std::to_string(dim) + "-v" + kToolVersion + ".json");
}

std::optional<ClassReport> load_cached_report(const std::filesystem::path& dir, int dim) {
  std::ifstream in(cache_file(dir, dim));
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    auto r = parse_report_json(buffer.str());
    if (r.tool_version != kToolVersion || r.dim != dim) return std::nullopt;
    return r;
  } catch (const Error&) {
    return std::nullopt;
  }
}

void store_cached_report(const std::filesystem::path& dir, const ClassReport& report) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create cache directory " + dir.string() + ": " + ec.message());
  const auto path = cache_file(dir, report.dim);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp);
    out << render_report(report, ReportFormat::kJson);
    if (!out) throw Error("cannot write cache file " + tmp);
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot move cache file into place: " + ec.message());
}

}  // namespace realbott
