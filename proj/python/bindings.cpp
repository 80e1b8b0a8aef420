#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rigidroots/errors.hpp"
#include "rigidroots/lattice_words.hpp"
#include "rigidroots/report.hpp"
#include "rigidroots/verification.hpp"

namespace py = pybind11;
using namespace rigid;

namespace {

// JSON crosses the boundary as text; the Python side parses it.
std::string trace_json(std::int64_t a, std::int64_t b, int m) { return nlohmann::json(reduce({a, b}, m)).dump(); }

std::string check_json(int m, std::int64_t bound, unsigned threads) {
  VerificationReport r;
  {
    py::gil_scoped_release release;
    r = run_check(m, bound, threads);
  }
  return nlohmann::json(r).dump();
}

std::vector<std::string> root(std::int64_t a, std::int64_t b, int m) {
  const RootVector r = CoxeterGroup(CoxeterPresentation::w(m)).reflection_root(crossing_word({a, b}));
  std::vector<std::string> out;
  for (const auto& c : r) out.push_back(c.to_poly_string());
  return out;
}

std::vector<std::string> symbolic_root(std::int64_t a, std::int64_t b) {
  std::vector<std::string> out;
  for (const auto& p : reflection_root_symbolic(crossing_word({a, b}))) out.push_back(p.to_string());
  return out;
}

bool same_element(int m, const std::string& u, const std::string& v) {
  const CoxeterGroup g(CoxeterPresentation::w(m));
  return g.eval_word(Word::parse(u)) == g.eval_word(Word::parse(v));
}

std::vector<std::pair<std::string, bool>> lemmas(int m, int depth) {
  LemmaOptions opts;
  opts.depth = depth;
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& r : run_lemmas(m, opts)) out.emplace_back(r.name, r.ok());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Rigid reflections of W(m) and reduced roots of H(m)";
  py::register_exception<UsageError>(mod, "UsageError", PyExc_ValueError);
  py::register_exception<InvariantError>(mod, "InvariantError", PyExc_RuntimeError);

  mod.def("crossing_word", [](std::int64_t a, std::int64_t b) { return crossing_word({a, b}).to_string(); },
          py::arg("a"), py::arg("b"));
  mod.def("dyck_word", [](std::int64_t a, std::int64_t b) { return dyck_word(a, b).to_string(); }, py::arg("a1"),
          py::arg("a2"));
  mod.def("q_form", [](std::int64_t a, std::int64_t b, int m) { return q_form({a, b}, m); }, py::arg("a"),
          py::arg("b"), py::arg("m"));
  mod.def("classify", [](std::int64_t a, std::int64_t b, int m) {
        const RootClass c = classify({a, b}, m);
        return std::make_pair(to_string(c.kind), c.reduced);
      }, py::arg("a"), py::arg("b"), py::arg("m"));
  mod.def("reduced_roots", [](int m, std::int64_t bound) {
        std::vector<std::pair<std::int64_t, std::int64_t>> out;
        for (const auto& v : enumerate_reduced_positive(m, bound)) out.emplace_back(v.a, v.b);
        return out;
      }, py::arg("m"), py::arg("bound"));
  mod.def("reduce_json", &trace_json, py::arg("a"), py::arg("b"), py::arg("m"));
  mod.def("root", &root, py::arg("a"), py::arg("b"), py::arg("m"));
  mod.def("symbolic_root", &symbolic_root, py::arg("a"), py::arg("b"));
  mod.def("same_element", &same_element, py::arg("m"), py::arg("u"), py::arg("v"));
  mod.def("check_json", &check_json, py::arg("m"), py::arg("bound"), py::arg("threads") = 0);
  mod.def("lemmas", &lemmas, py::arg("m"), py::arg("depth") = 6);
  mod.def("svg", [](std::int64_t a, std::int64_t b) { return crossing_svg({a, b}); }, py::arg("a"), py::arg("b"));
}
