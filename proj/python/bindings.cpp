#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "realbott/bott_matrix.hpp"
#include "realbott/classify.hpp"
#include "realbott/cli.hpp"
#include "realbott/cohomology.hpp"
#include "realbott/error.hpp"
#include "realbott/group.hpp"
#include "realbott/report.hpp"
#include "realbott/rho.hpp"
#include "realbott/ring.hpp"

namespace py = pybind11;
using namespace realbott;

namespace {

GeneratorMap to_map(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  GeneratorMap p(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) throw std::invalid_argument("P must be square");
    for (int j = 0; j < n; ++j) p.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] & 1);
  }
  return p;
}

std::vector<std::vector<int>> from_map(const GeneratorMap& p) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(p.dim()));
  for (int i = 0; i < p.dim(); ++i)
    for (int j = 0; j < p.dim(); ++j) rows[static_cast<std::size_t>(i)].push_back(p.entry(i, j) ? 1 : 0);
  return rows;
}

GroupWord to_word(const BottMatrix& a, const std::vector<std::int64_t>& e) {
  if (static_cast<int>(e.size()) != a.dim()) throw std::invalid_argument("word length must equal the dimension");
  return make_word(e);
}

std::vector<std::int64_t> from_word(const GroupWord& w) {
  return {w.exponents.begin(), w.exponents.begin() + w.n};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Real Bott manifolds: cohomology-ring classification and fundamental-group checks";
  m.attr("__version__") = kToolVersion;

  py::register_exception<Error>(m, "RealBottError", PyExc_ValueError);

  py::class_<BottMatrix>(m, "BottMatrix")
      .def(py::init<int>(), py::arg("n"))
      .def_static("from_rows", &BottMatrix::from_rows, py::arg("rows"))
      .def_static("from_key", [](int n, const std::string& key) { return BottMatrix::from_key_string(n, key); }, py::arg("n"),
                  py::arg("key"))
      .def_static("parse", [](const std::string& text) { return parse_matrix(text); }, py::arg("text"))
      .def_property_readonly("dim", &BottMatrix::dim)
      .def_property_readonly("key", &BottMatrix::key_string)
      .def("entry", &BottMatrix::entry, py::arg("i"), py::arg("j"))
      .def("format", [](const BottMatrix& a) { return format_matrix(a); })
      .def("__eq__", [](const BottMatrix& a, const BottMatrix& b) { return a == b; })
      .def("__hash__", [](const BottMatrix& a) { return py::hash(py::make_tuple(a.dim(), a.key())); })
      .def("__repr__", [](const BottMatrix& a) { return "BottMatrix(" + std::to_string(a.dim()) + ", '" + a.key_string() + "')"; });

  m.def("is_orientable", &is_orientable, py::arg("a"));
  m.def("type_signature", [](const BottMatrix& a) { return type_signature(a).parts; }, py::arg("a"));
  m.def("normal_form", [](const BottMatrix& a) {
    auto nf = normal_form(a);
    return py::make_tuple(nf.matrix, nf.perm.image());
  }, py::arg("a"), "Returns (matrix, permutation) with 0-based permutation images.");
  m.def("is_normal_form", &is_normal_form, py::arg("a"));
  m.def("permutation_orbit", &permutation_orbit, py::arg("a"));
  m.def("enumerate_all", [](int n) {
    std::vector<BottMatrix> all;
    for (auto a : enumerate_all(n)) all.push_back(a);
    return all;
  }, py::arg("n"));

  m.def("is_isomorphism", [](const BottMatrix& a, const BottMatrix& b, const std::vector<std::vector<int>>& p) {
    return is_isomorphism(a, b, to_map(p));
  }, py::arg("a"), py::arg("b"), py::arg("p"));
  m.def("find_isomorphism", [](const BottMatrix& a, const BottMatrix& b) -> std::optional<std::vector<std::vector<int>>> {
    auto p = find_isomorphism_any(a, b);
    if (!p) return std::nullopt;
    return from_map(*p);
  }, py::arg("a"), py::arg("b"), "Witness P (rows) for any two matrices, or None.");
  m.def("isomorphism_necessary_conditions", [](const BottMatrix& a, const BottMatrix& b, const std::vector<std::vector<int>>& p) {
    return isomorphism_necessary_conditions(a, b, to_map(p));
  }, py::arg("a"), py::arg("b"), py::arg("p"));

  m.def("classify", [](int n, int threads) {
    ClassifyOptions options;
    options.threads = threads;
    const auto report = make_report(classify_dimension(n, options), 0);
    py::list classes;
    for (const auto& c : report.classes) {
      py::dict d;
      d["rep"] = c.rep;
      d["type"] = c.type;
      d["orientable"] = c.orientable;
      d["member_count"] = c.member_count;
      d["orbit_sizes"] = c.orbit_sizes;
      classes.append(d);
    }
    return classes;
  }, py::arg("n"), py::arg("threads") = 1);

  m.def("word_multiply", [](const BottMatrix& a, const std::vector<std::int64_t>& p, const std::vector<std::int64_t>& q) {
    return from_word(word_multiply(a, to_word(a, p), to_word(a, q)));
  }, py::arg("a"), py::arg("p"), py::arg("q"));
  m.def("evaluate", [](const BottMatrix& a, const std::vector<std::int64_t>& w) {
    const auto motion = evaluate(a, to_word(a, w));
    std::vector<int> signs;
    std::vector<std::int64_t> t2;
    for (int k = 0; k < a.dim(); ++k) {
      signs.push_back(motion.sign(k));
      t2.push_back(motion.translation2[static_cast<std::size_t>(k)]);
    }
    return py::make_tuple(signs, t2);
  }, py::arg("a"), py::arg("word"), "Returns (signs, doubled translation).");
  m.def("commutation_relations_hold", &commutation_relations_hold, py::arg("a"));
  m.def("freeness_check", &freeness_check, py::arg("a"), py::arg("bound"));
  m.def("extension_cocycle", [](const BottMatrix& a) {
    const auto table = extension_cocycle(a);
    py::dict f;
    const auto order = table.group_order();
    for (std::size_t x = 0; x < order; ++x)
      for (std::size_t y = 0; y < order; ++y) {
        const auto& v = table.f(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y));
        f[py::make_tuple(x, y)] = std::vector<std::int64_t>(v.begin(), v.begin() + a.dim());
      }
    return f;
  }, py::arg("a"), "f(alpha, beta) keyed by bit masks.");

  m.def("rho_check", [](const BottMatrix& a, const BottMatrix& b) {
    const auto na = normal_form(a).matrix;
    const auto nb = normal_form(b).matrix;
    const auto p = find_isomorphism(na, nb);
    if (!p) throw Error("cohomology rings are not isomorphic");
    const auto rho = build_rho(na, nb, *p);
    const auto check = check_extension_identities(rho);
    py::dict d;
    d["det_q"] = rho.det_q;
    d["p"] = from_map(rho.p);
    d["coin"] = check.coin;
    d["t_isomorphism"] = check.t_isomorphism;
    d["ok"] = check.all();
    return d;
  }, py::arg("a"), py::arg("b"), "Builds rho on the normal forms and checks the extension identities.");

  m.def("h2_of_character", [](int n, unsigned mask) {
    const auto h = h2_of_character(n, {n, static_cast<std::uint8_t>(mask)}, n == 4);
    return py::make_tuple(h.free_rank, h.torsion);
  }, py::arg("n"), py::arg("mask"), "Returns (free rank, torsion invariant factors).");
  m.def("verify_appendix", &verify_appendix, py::arg("n"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = execute(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line interface in-process; returns (exit code, stdout, stderr).");
}
