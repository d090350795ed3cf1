#include "realbott/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "realbott/bott_matrix.hpp"
#include "realbott/classify.hpp"
#include "realbott/cohomology.hpp"
#include "realbott/error.hpp"
#include "realbott/group.hpp"
#include "realbott/report.hpp"
#include "realbott/rho.hpp"
#include "realbott/ring.hpp"

namespace realbott {

namespace {

using Json = nlohmann::ordered_json;

std::string mask_string(std::uint8_t mask, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += ((mask >> i) & 1u) ? '1' : '0';
  return s;
}

std::string vector_string(const IntVec& v, int n) {
  std::string s = "(";
  for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(v[static_cast<std::size_t>(i)]);
  return s + ")";
}

std::string permutation_string(const Permutation& p) {
  std::string s = "(";
  for (int i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p(i) + 1);
  return s + ")";
}

BottMatrix load(const std::string& path) {
  try {
    return read_matrix_file(path);
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

ReportFormat parse_format(const std::string& s) { return s == "json" ? ReportFormat::kJson : ReportFormat::kTable; }

struct ClassifyArgs {
  int dim = 0;
  std::string format = "table";
  int threads = 1;
  std::string cache_dir;
};

int run_classify(const ClassifyArgs& args, std::ostream& out) {
  std::string dir = args.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("BOTT_CACHE_DIR")) dir = env;

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  };
  std::optional<ClassReport> report;
  if (!dir.empty()) report = load_cached_report(dir, args.dim);
  if (report) {
    report->elapsed_ms = elapsed();
  } else {
    ClassifyOptions options;
    options.threads = args.threads;
    report = make_report(classify_dimension(args.dim, options), 0);
    report->elapsed_ms = elapsed();
    if (!dir.empty()) store_cached_report(dir, *report);
  }
  out << render_report(*report, parse_format(args.format));
  return kExitOk;
}

int run_invariants(const std::string& path, const std::string& format, std::ostream& out) {
  const auto a = load(path);
  const auto type = type_signature(a);
  const auto nf = normal_form(a);
  const auto orbit = permutation_orbit(nf.matrix);
  if (format == "json") {
    Json j;
    j["dim"] = a.dim();
    j["key"] = a.key_string();
    j["type"] = type.parts;
    j["orientable"] = is_orientable(a);
    j["normal_form"] = nf.matrix.key_string();
    std::vector<int> perm;
    for (int i = 0; i < nf.perm.size(); ++i) perm.push_back(nf.perm(i) + 1);
    j["permutation"] = perm;
    j["orbit_size"] = orbit.size();
    out << j.dump() << "\n";
  } else {
    out << "dim: " << a.dim() << "\n"
        << "key: " << (a.key_string().empty() ? "-" : a.key_string()) << "\n"
        << "type: " << type.to_string() << "\n"
        << "orientable: " << (is_orientable(a) ? "true" : "false") << "\n"
        << "normal form: " << (nf.matrix.key_string().empty() ? "-" : nf.matrix.key_string()) << " via permutation "
        << permutation_string(nf.perm) << "\n"
        << format_matrix(nf.matrix) << "orbit size: " << orbit.size() << "\n";
  }
  return kExitOk;
}

int run_iso(const std::string& path_a, const std::string& path_b, bool emit_p, bool brute_force, std::ostream& out) {
  const auto a = load(path_a);
  const auto b = load(path_b);
  if (a.dim() != b.dim()) {
    out << "not isomorphic (dimensions " << a.dim() << " and " << b.dim() << ")\n";
    return kExitOk;
  }
  std::optional<GeneratorMap> p;
  if (brute_force) {
    if (a.dim() > 4) throw Error("--brute-force supports dimension at most 4");
    p = bruteforce_isomorphism(a, b);
  } else {
    p = find_isomorphism_any(a, b);
  }
  out << (p ? "isomorphic" : "not isomorphic") << "\n";
  if (p && emit_p) out << "P: " << p->bit_string() << "\n";
  return kExitOk;
}

int run_group_verify(const std::string& path, int bound, std::ostream& out) {
  const auto a = load(path);
  const bool relations = commutation_relations_hold(a);
  const bool free = freeness_check(a, bound);
  bool cocycle = false;
  std::string cocycle_note;
  try {
    const auto table = extension_cocycle(a);
    cocycle = table.is_normalized();
    if (!cocycle) cocycle_note = " (not normalized)";
  } catch (const VerificationError& e) {
    cocycle_note = std::string(" (") + e.what() + ")";
  }
  out << "relations: " << (relations ? "ok" : "FAILED") << "\n"
      << "freeness (bound " << bound << "): " << (free ? "ok" : "FAILED") << "\n"
      << "cocycle: " << (cocycle ? "ok" : "FAILED") << cocycle_note << "\n";
  return relations && free && cocycle ? kExitOk : kExitDomainError;
}

int run_rho(const std::string& path_a, const std::string& path_b, std::ostream& out) {
  const auto a = normal_form(load(path_a)).matrix;
  const auto b = normal_form(load(path_b)).matrix;
  if (a.dim() != b.dim()) throw Error("matrices have different dimensions");
  const auto p = find_isomorphism(a, b);
  if (!p) throw Error("cohomology rings are not isomorphic; no monomorphism to build");
  const auto rho = build_rho(a, b, *p);
  const auto check = check_extension_identities(rho);
  const int n = a.dim();

  out << "A (normal form): " << (a.key_string().empty() ? "-" : a.key_string()) << "\n"
      << "B (normal form, relabeled " << permutation_string(rho.relabel) << "): " << (rho.b.key_string().empty() ? "-" : rho.b.key_string())
      << "\n"
      << "P: " << rho.p.bit_string() << "\n";
  for (int r = 0; r < n; ++r) out << "rho(t" << r + 1 << ") = " << to_string(rho.images[static_cast<std::size_t>(r)]) << "\n";
  out << "Q:\n" << rho.q.to_string() << "det Q: " << rho.det_q << "\n";
  out << "lambda:\n";
  for (std::size_t alpha = 0; alpha < rho.lambda.size(); ++alpha)
    out << "  " << mask_string(static_cast<std::uint8_t>(alpha), n) << " -> " << vector_string(rho.lambda[alpha], n) << "  rho_bar "
        << mask_string(rho.rho_bar[alpha], n) << "\n";
  auto verdict = [](bool ok) { return ok ? "ok" : "FAILED"; };
  out << "coin identity: " << verdict(check.coin) << "\n"
      << "Q commutation: " << verdict(check.commutation) << "\n"
      << "adj(Q) identities: " << verdict(check.q_tilde) << "\n"
      << "coboundary identity: " << verdict(check.coboundary_identity) << "\n"
      << "rho homomorphism: " << verdict(check.homomorphism) << "\n"
      << "T isomorphism: " << verdict(check.t_isomorphism) << "\n";
  for (const auto& f : check.failures) out << "  " << f << "\n";
  return check.all() ? kExitOk : kExitDomainError;
}

int run_cohomology(int rank, const std::string& char_mask, std::ostream& out) {
  std::vector<std::uint8_t> masks;
  if (!char_mask.empty()) {
    if (static_cast<int>(char_mask.size()) != rank || char_mask.find_first_not_of("01") != std::string::npos)
      throw CLI::ValidationError("--char", "MASK must be a string of " + std::to_string(rank) + " characters from {0,1}");
    std::uint8_t m = 0;
    for (int i = 0; i < rank; ++i)
      if (char_mask[static_cast<std::size_t>(i)] == '1') m = static_cast<std::uint8_t>(m | (1u << i));
    masks.push_back(m);
  } else {
    for (unsigned m = 0; m < (1u << rank); ++m) masks.push_back(static_cast<std::uint8_t>(m));
  }
  for (auto m : masks) {
    const auto h = h2_of_character(rank, {rank, m}, true);
    out << "char " << mask_string(m, rank) << ": H^2 = " << h.to_string() << "\n";
  }
  return kExitOk;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Real Bott manifolds: classification and fundamental-group verification", "realbott"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  ClassifyArgs classify;
  auto* cmd_classify = app.add_subcommand("classify", "Partition all Bott matrices of one dimension into diffeomorphism classes");
  cmd_classify->add_option("--dim", classify.dim, "Dimension n")->required()->check(CLI::PositiveNumber);
  cmd_classify->add_option("--format", classify.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  cmd_classify->add_option("--threads", classify.threads, "Worker threads (0 = auto)")->check(CLI::NonNegativeNumber);
  cmd_classify->add_option("--cache-dir", classify.cache_dir, "Result cache directory (default: $BOTT_CACHE_DIR)");

  std::string matrix_path, format = "table";
  auto* cmd_invariants = app.add_subcommand("invariants", "Type, orientability, normal form and orbit size of one matrix");
  cmd_invariants->add_option("--matrix", matrix_path, "Matrix file")->required();
  cmd_invariants->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));

  std::string path_a, path_b;
  bool emit_p = false, brute_force = false;
  auto* cmd_iso = app.add_subcommand("iso", "Decide whether two cohomology rings are isomorphic");
  cmd_iso->add_option("--a", path_a, "First matrix file")->required();
  cmd_iso->add_option("--b", path_b, "Second matrix file")->required();
  cmd_iso->add_flag("--emit-p", emit_p, "Print the witness P row-major");
  cmd_iso->add_flag("--brute-force", brute_force, "Search all of GL(n, Z/2) (n <= 4)");

  int bound = 2;
  auto* cmd_group = app.add_subcommand("group", "Fundamental group checks");
  cmd_group->require_subcommand(1);
  auto* cmd_verify = cmd_group->add_subcommand("verify", "Relations, freeness and extension cocycle");
  cmd_verify->add_option("--matrix", matrix_path, "Matrix file")->required();
  cmd_verify->add_option("--bound", bound, "Exponent bound for the freeness check")->check(CLI::PositiveNumber);

  auto* cmd_rho = app.add_subcommand("rho", "Build the monomorphism rho from a ring isomorphism and check the extension identities");
  cmd_rho->add_option("--a", path_a, "First matrix file")->required();
  cmd_rho->add_option("--b", path_b, "Second matrix file")->required();

  int rank = 0;
  std::string char_mask;
  auto* cmd_cohomology = app.add_subcommand("cohomology", "H^2 of (Z_2)^n with sign-character coefficients");
  cmd_cohomology->add_option("--rank", rank, "Rank n of (Z_2)^n")->required()->check(CLI::Range(1, 4));
  cmd_cohomology->add_option("--char", char_mask, "Character as n bits; bit i set means generator i+1 acts by -1");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*cmd_classify) return run_classify(classify, out);
    if (*cmd_invariants) return run_invariants(matrix_path, format, out);
    if (*cmd_iso) return run_iso(path_a, path_b, emit_p, brute_force, out);
    if (*cmd_verify) return run_group_verify(matrix_path, bound, out);
    if (*cmd_rho) return run_rho(path_a, path_b, out);
    if (*cmd_cohomology) return run_cohomology(rank, char_mask, out);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace realbott
