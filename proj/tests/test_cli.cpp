#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "realbott/cli.hpp"
#include "realbott/error.hpp"
#include "realbott/report.hpp"

using namespace realbott;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = execute(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(REALBOTT_FIXTURE_DIR) + "/" + name; }

std::filesystem::path fresh_dir(const char* name) {
  const auto dir = std::filesystem::temp_directory_path() / (std::string("realbott-test-") + name);
  std::filesystem::remove_all(dir);
  return dir;
}

std::string strip_elapsed(const std::string& json) {
  return std::regex_replace(json, std::regex("\"elapsed_ms\":[0-9]+"), "\"elapsed_ms\":0");
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("classify --dim 3 --format json") {
    const auto r = run({"classify", "--dim", "3", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["dim"] == 3);
    CHECK(j["total_matrices"] == 8);
    CHECK(j["classes"].size() == 4);
    CHECK(j["tool_version"] == kToolVersion);
    std::uint64_t total = 0;
    for (const auto& c : j["classes"]) total += c["member_count"].get<std::uint64_t>();
    CHECK(total == 8);
  }

  TEST_CASE("usage and domain errors map to exit codes") {
    CHECK(run({"classify", "--dim", "0"}).code == 2);
    CHECK(run({"classify"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"classify", "--dim", "3", "--format", "xml"}).code == 2);
    CHECK(run({"cohomology", "--rank", "5"}).code == 2);
    CHECK(run({"cohomology", "--rank", "2", "--char", "1"}).code == 2);
    const auto big = run({"classify", "--dim", "6"});
    CHECK(big.code == 1);
    CHECK(big.err.find("error:") == 0);
    CHECK(run({"invariants", "--matrix", fixture("missing.txt")}).code == 1);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("malformed matrix files report the position") {
    const auto dir = fresh_dir("bad");
    std::filesystem::create_directories(dir);
    const auto path = (dir / "bad.txt").string();
    std::ofstream(path) << "2\n01\n10\n";
    const auto r = run({"invariants", "--matrix", path});
    CHECK(r.code == 1);
    CHECK(r.err.find("line 3, column 1") != std::string::npos);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("invariants of the Klein matrix") {
    const auto table = run({"invariants", "--matrix", fixture("klein.txt")});
    CHECK(table.code == 0);
    CHECK(table.out.find("type: (1,1)") != std::string::npos);
    CHECK(table.out.find("orientable: false") != std::string::npos);
    const auto json = run({"invariants", "--matrix", fixture("klein.txt"), "--format", "json"});
    CHECK(json.code == 0);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j["type"] == std::vector<int>{1, 1});
    CHECK(j["orientable"] == false);
    CHECK(j["normal_form"] == "1");
    CHECK(j["orbit_size"] == 1);
  }

  TEST_CASE("iso") {
    const auto same = run({"iso", "--a", fixture("chain3.txt"), "--b", fixture("full3.txt"), "--emit-p"});
    CHECK(same.code == 0);
    CHECK(same.out.rfind("isomorphic\nP: ", 0) == 0);
    const auto brute = run({"iso", "--a", fixture("chain3.txt"), "--b", fixture("full3.txt"), "--brute-force"});
    CHECK(brute.out == "isomorphic\n");
    const auto different = run({"iso", "--a", fixture("type21.txt"), "--b", fixture("type12.txt")});
    CHECK(different.code == 0);
    CHECK(different.out == "not isomorphic\n");
    CHECK(run({"iso", "--a", fixture("klein.txt"), "--b", fixture("type12.txt")}).out.rfind("not isomorphic", 0) == 0);
  }

  TEST_CASE("group verify") {
    const auto r = run({"group", "verify", "--matrix", fixture("klein.txt"), "--bound", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "relations: ok\nfreeness (bound 3): ok\ncocycle: ok\n");
    CHECK(run({"group"}).code == 2);
  }

  TEST_CASE("rho") {
    const auto r = run({"rho", "--a", fixture("chain3.txt"), "--b", fixture("full3.txt")});
    CHECK(r.code == 0);
    CHECK(r.out.find("det Q: 1\n") != std::string::npos);
    CHECK(r.out.find("coin identity: ok") != std::string::npos);
    CHECK(r.out.find("T isomorphism: ok") != std::string::npos);
    CHECK(r.out.find("FAILED") == std::string::npos);
    const auto none = run({"rho", "--a", fixture("type21.txt"), "--b", fixture("type12.txt")});
    CHECK(none.code == 1);
  }

  TEST_CASE("cohomology") {
    const auto one = run({"cohomology", "--rank", "3", "--char", "010"});
    CHECK(one.code == 0);
    CHECK(one.out == "char 010: H^2 = Z/2 + Z/2\n");
    const auto all = run({"cohomology", "--rank", "2"});
    CHECK(all.out == "char 00: H^2 = Z/2 + Z/2\nchar 10: H^2 = Z/2\nchar 01: H^2 = Z/2\nchar 11: H^2 = Z/2\n");
  }

  TEST_CASE("warm cache reproduces the report byte for byte apart from elapsed time") {
    const auto dir = fresh_dir("cache");
    const std::vector<std::string> args{"classify", "--dim", "4", "--format", "json", "--cache-dir", dir.string()};
    const auto cold = run(args);
    REQUIRE(cold.code == 0);
    CHECK(std::filesystem::exists(cache_file(dir, 4)));
    const auto warm = run(args);
    REQUIRE(warm.code == 0);
    CHECK(strip_elapsed(cold.out) == strip_elapsed(warm.out));
    CHECK(nlohmann::json::parse(warm.out)["classes"].size() == 12);

    // A cache written by another version is ignored and rewritten.
    auto stale = nlohmann::json::parse(warm.out);
    stale["tool_version"] = "0.0.0";
    stale["classes"] = nlohmann::json::array();
    std::ofstream(cache_file(dir, 4)) << stale.dump();
    CHECK(!load_cached_report(dir, 4).has_value());
    CHECK(strip_elapsed(run(args).out) == strip_elapsed(cold.out));
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("render_report is byte exact") {
    ClassReport report;
    report.dim = 2;
    report.total_matrices = 2;
    report.classes = {{"0", {2}, true, 1, {1}}, {"1", {1, 1}, false, 1, {1}}};
    report.elapsed_ms = 5;
    CHECK(render_report(report, ReportFormat::kJson) ==
          "{\"dim\":2,\"total_matrices\":2,\"classes\":[{\"rep\":\"0\",\"type\":[2],\"orientable\":true,\"member_count\":1,"
          "\"orbit_sizes\":[1]},{\"rep\":\"1\",\"type\":[1,1],\"orientable\":false,\"member_count\":1,\"orbit_sizes\":[1]}],"
          "\"tool_version\":\"0.1.0\",\"elapsed_ms\":5}\n");
    const auto parsed = parse_report_json(render_report(report, ReportFormat::kJson));
    CHECK(parsed.classes == report.classes);
    CHECK(parsed.elapsed_ms == 5);
    CHECK_THROWS_AS(parse_report_json("{\"dim\":2}"), Error);
  }

  TEST_CASE("table output stars the torus row") {
    const auto r = run({"classify", "--dim", "2"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line))
      if (!line.empty() && std::isdigit(static_cast<unsigned char>(line[0]))) rows.push_back(line);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].rfind("1*", 0) == 0);
    CHECK(rows[0].find("(2)") != std::string::npos);
    CHECK(rows[1].rfind("2 ", 0) == 0);
    CHECK(rows[1].find("(1,1)") != std::string::npos);
  }

  TEST_CASE("dimension 1 is the circle") {
    const auto r = run({"classify", "--dim", "1", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["classes"].size() == 1);
    CHECK(j["classes"][0]["orientable"] == true);
    CHECK(j["classes"][0]["rep"] == "");
    const auto table = run({"classify", "--dim", "1"});
    CHECK(table.out.find("1*") != std::string::npos);
  }
}
