#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superstring/atsp.hpp"
#include "superstring/bounds.hpp"
#include "superstring/campaign.hpp"
#include "superstring/errors.hpp"
#include "superstring/pipeline.hpp"
#include "superstring/report.hpp"
#include "superstring/words.hpp"

namespace py = pybind11;
using namespace superstring;

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

PathSolverKind path_kind(const std::string& name) {
  if (name == "exact") return PathSolverKind::Exact;
  if (name == "half") return PathSolverKind::CycleCoverHalf;
  if (name == "greedy") return PathSolverKind::Greedy;
  throw std::invalid_argument("unknown path solver: " + name);
}

py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict nice_dict(const NiceWord& w) {
  py::dict d;
  d["word"] = w.word;
  d["kind"] = w.kind == RotationKind::MaxRotation ? "max" : "min";
  d["pmax"] = std::string(w.pmax());
  d["pmin"] = std::string(w.pmin());
  d["alpha"] = w.alpha;
  d["degenerate"] = w.degenerate;
  return d;
}

// Order is reported as positions in `strings`, before normalization.
py::dict solve(const std::vector<Text>& strings, const std::string& algo,
               const std::string& path_solver, std::size_t exact_limit) {
  Normalization norm = normalize_strings(strings);
  if (norm.survivors.empty()) throw std::invalid_argument("empty input");
  const Instance inst{norm.survivors, {}};
  const PathSolver ps = make_path_solver(path_kind(path_solver), exact_limit);
  Solution s;
  if (algo == "combined") s = solve_combined(inst, ps);
  else if (algo == "s1") s = solve_s1(inst, ps);
  else if (algo == "s2") s = solve_s2(inst);
  else if (algo == "greedy") s = greedy_superstring(inst);
  else if (algo == "exact") s = exact_superstring(inst, exact_limit);
  else throw std::invalid_argument("unknown algorithm: " + algo);

  std::vector<std::size_t> order;
  for (std::size_t i : s.order) order.push_back(norm.survivor_indices[i]);
  py::dict d;
  d["algo"] = algo;
  d["superstring"] = s.text;
  d["length"] = s.length;
  d["overlap"] = s.total_overlap;
  d["order"] = order;
  return d;
}

py::dict max_path(const Matrix& rows, const std::string& solver) {
  const WeightMatrix m = WeightMatrix::from_rows(rows);
  const PathSolution p = make_path_solver(path_kind(solver))(m);
  py::dict d;
  d["order"] = p.order;
  d["weight"] = p.weight;
  d["solver"] = std::string(to_string(p.solver));
  return d;
}

Matrix rows(const WeightMatrix& m) {
  Matrix out(m.size(), std::vector<std::int64_t>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m(i, j);
  return out;
}

std::vector<Text> texts(const CycleFixture& f) {
  std::vector<Text> out;
  for (const auto& n : f.nodes) out.push_back(n.text);
  return out;
}

py::object verify(const std::string& suite, std::size_t trials, std::uint64_t seed,
                  std::size_t workers) {
  CampaignOptions opts;
  opts.trials = trials;
  opts.seed = seed;
  opts.workers = workers;
  CampaignResult r;
  {
    py::gil_scoped_release release;
    if (suite == "pairs") r = run_pair_campaign(opts);
    else if (suite == "cycles") r = run_cycle_campaign(opts);
    else if (suite == "tight") r = run_tight_campaign();
    else throw std::invalid_argument("unknown suite: " + suite);
  }
  return to_python(to_json(r, false));
}

}  // namespace

PYBIND11_MODULE(pysuperstring, m) {
  m.doc() = "Shortest common superstring approximations and bound verification";

  py::register_exception<SolverLimitExceeded>(m, "SolverLimitExceeded", PyExc_RuntimeError);
  py::register_exception<DegenerateInstance>(m, "DegenerateInstance", PyExc_ValueError);

  m.def("nice_rotation", [](const std::string& w) { return nice_dict(nice_rotation(w)); },
        py::arg("word"));
  m.def("overlap", [](const std::string& u, const std::string& v) { return Text(overlap(u, v)); },
        py::arg("u"), py::arg("v"));
  m.def("normalize", [](const std::vector<Text>& s) { return normalize_strings(s).survivors; },
        py::arg("strings"));
  m.def("overlap_matrix", [](const std::vector<Text>& s) { return rows(overlap_matrix(s)); },
        py::arg("strings"));
  m.def("solve", &solve, py::arg("strings"), py::arg("algo") = "combined",
        py::arg("path_solver") = "exact", py::arg("exact_limit") = kDefaultExactLimit);
  m.def("validate", [](const std::vector<Text>& s, const std::string& text) {
    return validate_superstring(Instance{s, {}}, text);
  }, py::arg("strings"), py::arg("text"));
  m.def("max_path", &max_path, py::arg("matrix"), py::arg("solver") = "exact");
  m.def("gen_tight2", [](int k) { return texts(gen_tight_2cycle(k)); }, py::arg("k"));
  m.def("gen_tight3", [](int n) { return texts(gen_tight_3cycle(n)); }, py::arg("n"));
  m.def("gen_greedy", [](int n) { return gen_greedy_path(n).instance.strings; }, py::arg("n"));
  m.def("verify", &verify, py::arg("suite") = "tight", py::arg("trials") = 10000,
        py::arg("seed") = 1, py::arg("workers") = 1);
}
