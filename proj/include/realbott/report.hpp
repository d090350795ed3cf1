#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "realbott/classify.hpp"

namespace realbott {

inline constexpr const char* kToolVersion = "0.1.0";

struct ClassSummary {
  std::string rep;  // canonical key string of the minimal-key member
  std::vector<int> type;
  bool orientable = false;
  std::uint64_t member_count = 0;
  std::vector<int> orbit_sizes;

  friend bool operator==(const ClassSummary&, const ClassSummary&) = default;
};

// Invariant: the member counts sum to total_matrices = 2^{n(n-1)/2}.
struct ClassReport {
  int dim = 0;
  std::uint64_t total_matrices = 0;
  std::vector<ClassSummary> classes;
  std::string tool_version = kToolVersion;
  std::int64_t elapsed_ms = 0;
};

enum class ReportFormat { kTable, kJson };

ClassReport make_report(const Classification& c, std::int64_t elapsed_ms);

// JSON is compact with keys in schema order; the table marks orientable
// classes with '*'. Output ends with a newline.
std::string render_report(const ClassReport& report, ReportFormat format);
// Throws Error on malformed input.
ClassReport parse_report_json(const std::string& text);

// classify-dim{N}-v{version}.json inside `dir`.
std::filesystem::path cache_file(const std::filesystem::path& dir, int dim);
// Empty when the file is missing, unreadable, or written by another version.
std::optional<ClassReport> load_cached_report(const std::filesystem::path& dir, int dim);
// Creates `dir` if needed. Throws Error when the file cannot be written.
void store_cached_report(const std::filesystem::path& dir, const ClassReport& report);

}  // namespace realbott
