#include "superstring/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "superstring/campaign.hpp"
#include "superstring/errors.hpp"
#include "superstring/instance_io.hpp"
#include "superstring/pipeline.hpp"
#include "superstring/report.hpp"

namespace superstring {

namespace {

struct Failure {
  int code;
  std::string message;
};

struct Loaded {
  Instance inst;
  std::vector<std::size_t> input_index;  // instance index -> position in the file
};

Loaded load(const std::string& path, std::ostream& err) {
  std::vector<Text> raw;
  try {
    raw = read_strings_file(path);
  } catch (const InputError& e) {
    throw Failure{kExitInput, e.what()};
  }
  Normalization norm = normalize_strings(raw);
  if (norm.survivors.empty()) throw Failure{kExitInput, "empty instance: " + path};
  if (!norm.removed.empty()) {
    err << "warning: dropped " << norm.removed.size()
        << " duplicate or contained string(s)\n";
  }
  if (norm.survivors.size() == 1) err << "warning: a single string remains after normalization\n";
  Loaded l;
  l.inst.strings = std::move(norm.survivors);
  l.input_index = std::move(norm.survivor_indices);
  return l;
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Failure{kExitInput, "cannot write " + path};
  out << j.dump(2) << '\n';
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s.push_back(' ');
    s += a;
  }
  return s;
}

Json base_report(const std::vector<std::string>& args) {
  return Json{{"command", join(args)}, {"seed", nullptr}, {"timestamp", utc_timestamp()}};
}

const std::map<std::string, PathSolverKind> kPathSolvers{
    {"exact", PathSolverKind::Exact},
    {"half", PathSolverKind::CycleCoverHalf},
    {"greedy", PathSolverKind::Greedy}};

struct Timed {
  Solution solution;
  double ms = 0;
};

template <typename F>
Timed timed(F f) {
  const auto t0 = std::chrono::steady_clock::now();
  Timed t{f(), 0};
  t.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return t;
}

Solution run_algorithm(const std::string& algo, const Instance& inst, PathSolverKind kind,
                       std::size_t limit) {
  if (inst.size() == 1) {
    Solution s = merge_order(inst, std::vector<std::size_t>{0});
    s.algorithm = algo;
    return s;
  }
  const PathSolver path = make_path_solver(kind, limit);
  if (algo == "combined") return solve_combined(inst, path);
  if (algo == "s1") return solve_s1(inst, path);
  if (algo == "s2") return solve_s2(inst);
  if (algo == "greedy") return greedy_superstring(inst);
  return exact_superstring(inst, limit);
}

// Revalidates and maps the order back to input positions.
Solution checked(Solution s, const Loaded& l) {
  if (!validate_superstring(l.inst, s.text) ||
      s.length != static_cast<std::int64_t>(s.text.size())) {
    throw Failure{kExitValidation, "internal error: " + s.algorithm +
                                       " output is not a superstring of the input"};
  }
  for (auto& i : s.order) i = l.input_index[i];
  return s;
}

void warn_exact_limit(std::size_t limit, std::ostream& err) {
  if (limit > kDefaultExactLimit) {
    err << "warning: exact limit " << limit << " above " << kDefaultExactLimit
        << "; the exact solver allocates n * 2^n table entries\n";
  }
}

std::string format_ratio(Rational r) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3)
    << static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
  return s.str();
}

// solve ------------------------------------------------------------------------

struct SolveArgs {
  std::string input, algo = "combined", path_solver = "exact", json;
  std::size_t exact_limit = kDefaultExactLimit;
  bool timings = false;
};

int cmd_solve(const SolveArgs& a, const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err) {
  warn_exact_limit(a.exact_limit, err);
  const Loaded l = load(a.input, err);
  Timed t;
  try {
    t = timed([&] {
      return run_algorithm(a.algo, l.inst, kPathSolvers.at(a.path_solver), a.exact_limit);
    });
  } catch (const SolverLimitExceeded& e) {
    throw Failure{kExitSolverLimit, e.what()};
  }
  const Solution s = checked(std::move(t.solution), l);

  out << s.text << '\n';
  out << "algo " << s.algorithm << "  length " << s.length << "  overlap " << s.total_overlap
      << "  n " << l.inst.size();
  if (a.timings) out << "  ms " << std::fixed << std::setprecision(3) << t.ms;
  out << '\n';

  if (!a.json.empty()) {
    Json j = base_report(args);
    j["instance"] = instance_summary(l.inst);
    j["results"] = Json::array({to_json(s, a.timings ? std::optional(t.ms) : std::nullopt)});
    write_json(a.json, j);
  }
  return kExitOk;
}

// compare ----------------------------------------------------------------------

struct CompareArgs {
  std::string input, path_solver = "exact", json;
  std::size_t exact_limit = kDefaultExactLimit;
  bool timings = false;
};

int cmd_compare(const CompareArgs& a, const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  warn_exact_limit(a.exact_limit, err);
  const Loaded l = load(a.input, err);
  std::vector<Timed> rows;
  for (const std::string algo : {"combined", "s1", "s2", "greedy", "exact"}) {
    try {
      Timed t = timed([&] {
        return run_algorithm(algo, l.inst, kPathSolvers.at(a.path_solver), a.exact_limit);
      });
      t.solution = checked(std::move(t.solution), l);
      rows.push_back(std::move(t));
    } catch (const SolverLimitExceeded& e) {
      err << "warning: skipping " << algo << ": " << e.what() << '\n';
    }
  }

  std::int64_t best = rows.front().solution.length;
  for (const auto& r : rows) best = std::min(best, r.solution.length);

  out << std::left << std::setw(10) << "algo" << std::setw(10) << "length" << std::setw(10)
      << "overlap" << "ratio";
  if (a.timings) out << "      ms";
  out << '\n';
  for (const auto& r : rows) {
    const Solution& s = r.solution;
    out << std::left << std::setw(10) << s.algorithm << std::setw(10) << s.length << std::setw(10)
        << s.total_overlap << format_ratio(Rational(s.length, best));
    if (a.timings) out << "  " << std::fixed << std::setprecision(3) << r.ms;
    out << '\n';
  }

  if (!a.json.empty()) {
    Json j = base_report(args);
    j["instance"] = instance_summary(l.inst);
    Json results = Json::array();
    for (const auto& r : rows) {
      Json row = to_json(r.solution, a.timings ? std::optional(r.ms) : std::nullopt);
      row["ratio"] = to_string(Rational(r.solution.length, best));
      results.push_back(std::move(row));
    }
    j["results"] = std::move(results);
    write_json(a.json, j);
  }
  return kExitOk;
}

// verify -----------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all", json;
  std::size_t trials = 10000, workers = 1;
  std::uint64_t seed = 1;
  bool full_reports = false;
};

int cmd_verify(const VerifyArgs& a, const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CampaignOptions opts;
  opts.seed = a.seed;
  opts.trials = a.trials;
  opts.workers = a.workers;
  opts.keep_reports = a.full_reports;

  std::vector<CampaignResult> results;
  if (a.suite == "pairs" || a.suite == "all") results.push_back(run_pair_campaign(opts));
  if (a.suite == "cycles" || a.suite == "all") results.push_back(run_cycle_campaign(opts));
  if (a.suite == "tight" || a.suite == "all") {
    results.push_back(run_tight_campaign(64, a.full_reports));
  }

  CampaignResult total;
  for (const auto& r : results) {
    total.merge(r);
    out << std::left << std::setw(8) << r.suite << " run " << r.run << "  held " << r.held
        << "  failed " << r.failed << "  not applicable " << r.skipped << '\n';
    for (const auto& [id, t] : r.tallies) {
      out << "  " << std::left << std::setw(40) << id << " run " << std::setw(8) << t.run
          << " failed " << t.failed << '\n';
    }
  }
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < total.violations.size() && i < kShown; ++i) {
    const BoundReport& v = total.violations[i];
    err << "violation: " << v.check << "  lhs " << to_string(v.lhs)
        << (v.strict ? " < " : " <= ") << to_string(v.rhs) << "  fails  " << v.inputs << '\n';
  }
  if (total.violations.size() > kShown) {
    err << "... " << total.violations.size() - kShown << " more violation(s)\n";
  }

  if (!a.json.empty()) {
    Json j = base_report(args);
    j["seed"] = a.seed;
    j["instance"] = nullptr;
    j["results"] = Json::array();
    Json violations = Json::array();
    for (const auto& v : total.violations) violations.push_back(to_json(v));
    j["verification"] = Json{{"run", total.run},
                             {"held", total.held},
                             {"failed", total.failed},
                             {"violations", std::move(violations)}};
    Json suites = Json::array();
    for (const auto& r : results) {
      Json s = to_json(r, a.full_reports);
      s.erase("violations");
      suites.push_back(std::move(s));
    }
    j["suites"] = std::move(suites);
    write_json(a.json, j);
  }
  return total.ok() ? kExitOk : kExitViolations;
}

// gen --------------------------------------------------------------------------

struct GenArgs {
  std::string family, output;
  int k = 1, n = 0;
  std::uint64_t seed = 1;
  std::size_t alphabet = 2, min_len = 3, max_len = 12;
};

Json edge(std::size_t from, std::size_t to, std::int64_t o) {
  return Json{{"from", from}, {"to", to}, {"overlap", o}};
}

Json fixture_sidecar(const std::string& family, int param, const CycleFixture& f,
                     const TightForms& forms) {
  Json words = Json::array(), strings = Json::array(), edges = Json::array();
  for (const auto& node : f.nodes) {
    words.push_back(node.word.word);
    strings.push_back(node.text);
  }
  for (std::size_t t = 0; t < f.order.size(); ++t) {
    edges.push_back(edge(f.order[t], f.order[(t + 1) % f.order.size()], forms.overlaps[t]));
  }
  return Json{{"family", family},        {"param", param}, {"strings", strings},
              {"words", words},          {"periods", forms.periods},
              {"overlaps", edges},       {"M", forms.M},   {"O", forms.O},
              {"L", forms.L},            {"gap", forms.gap}};
}

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<Text> strings;
  std::optional<Json> sidecar;
  std::string comment;
  if (a.family == "tight2" || a.family == "tight3") {
    const bool two = a.family == "tight2";
    const int p = two ? a.k : (a.n > 0 ? a.n : 1);
    if (p < 1) throw Failure{kExitUsage, "parameter must be at least 1"};
    const CycleFixture f = two ? gen_tight_2cycle(p) : gen_tight_3cycle(p);
    for (const auto& node : f.nodes) strings.push_back(node.text);
    sidecar = fixture_sidecar(a.family, p, f, two ? tight_2cycle_forms(p) : tight_3cycle_forms(p));
    comment = a.family + " param " + std::to_string(p);
  } else if (a.family == "greedy") {
    if (a.n < 4) throw Failure{kExitUsage, "greedy family needs -n >= 4"};
    const GreedyPathFamily fam = gen_greedy_path(a.n);
    strings = fam.instance.strings;
    Json edges = Json::array();
    for (std::size_t t = 0; t < fam.expected.size(); ++t) {
      const std::size_t from = strings.size() - 1 - t;
      edges.push_back(edge(from, from - 1, fam.expected[t]));
    }
    sidecar = Json{{"family", "greedy"},         {"param", a.n},
                   {"strings", strings},         {"overlaps", edges},
                   {"total", fam.expected_total}, {"period_sum", fam.period_sum}};
    comment = "greedy path x_3..x_" + std::to_string(a.n);
  } else {
    if (a.n < 1) throw Failure{kExitUsage, "random family needs -n >= 1"};
    Rng rng = trial_rng(a.seed, 0, 0x67656e);
    strings = random_strings(rng, static_cast<std::size_t>(a.n), a.alphabet, a.min_len, a.max_len);
    comment = "random n " + std::to_string(a.n) + " seed " + std::to_string(a.seed);
  }

  if (a.output.empty()) {
    write_strings(out, strings, comment);
    return kExitOk;
  }
  try {
    write_strings_file(a.output, strings, comment);
  } catch (const InputError& e) {
    throw Failure{kExitInput, e.what()};
  }
  if (sidecar) write_json(a.output + ".expected.json", *sidecar);
  err << "wrote " << strings.size() << " string(s) to " << a.output << '\n';
  return kExitOk;
}

// inspect ----------------------------------------------------------------------

int cmd_inspect(const std::string& input, const std::string& json,
                const std::vector<std::string>& args, std::ostream& out) {
  std::vector<Text> raw;
  try {
    raw = read_strings_file(input);
  } catch (const InputError& e) {
    throw Failure{kExitInput, e.what()};
  }
  if (raw.empty()) throw Failure{kExitInput, "empty instance: " + input};
  const WeightMatrix m = overlap_matrix(raw);
  out << "n " << raw.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
  if (!json.empty()) {
    Json j = base_report(args);
    Instance inst{raw, {}};
    j["instance"] = instance_summary(inst);
    j["overlaps"] = to_json(m);
    write_json(json, j);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shortest-superstring approximation and overlap-bound verification", "superstring"};
  app.require_subcommand(1);

  const std::vector<std::string> algos{"combined", "s1", "s2", "greedy", "exact"};
  const std::vector<std::string> path_solvers{"exact", "half", "greedy"};

  SolveArgs solve;
  auto* sc = app.add_subcommand("solve", "Compute a superstring of the strings in a file");
  sc->add_option("input", solve.input, "Instance file")->required();
  sc->add_option("--algo", solve.algo)->check(CLI::IsMember(algos));
  sc->add_option("--path-solver", solve.path_solver)->check(CLI::IsMember(path_solvers));
  sc->add_option("--json", solve.json, "Write a JSON report");
  sc->add_option("--exact-limit", solve.exact_limit, "Largest n for the exact solvers");
  sc->add_flag("--timings", solve.timings, "Report wall time");

  CompareArgs compare;
  auto* cc = app.add_subcommand("compare", "Run every algorithm on one instance");
  cc->add_option("input", compare.input, "Instance file")->required();
  cc->add_option("--path-solver", compare.path_solver)->check(CLI::IsMember(path_solvers));
  cc->add_option("--json", compare.json, "Write a JSON report");
  cc->add_option("--exact-limit", compare.exact_limit, "Largest n for the exact solvers");
  cc->add_flag("--timings", compare.timings, "Report wall time");

  VerifyArgs verify;
  auto* vc = app.add_subcommand("verify", "Run the bound verification campaigns");
  vc->add_option("--suite", verify.suite)
      ->check(CLI::IsMember({"pairs", "cycles", "tight", "all"}));
  vc->add_option("--trials", verify.trials)->check(CLI::PositiveNumber);
  vc->add_option("--seed", verify.seed);
  vc->add_option("--workers", verify.workers)->check(CLI::Range(1, 256));
  vc->add_option("--json", verify.json, "Write a JSON report");
  vc->add_flag("--full-reports", verify.full_reports, "Include every applicable report in JSON");

  GenArgs gen;
  auto* gc = app.add_subcommand("gen", "Write a generated instance");
  gc->add_option("--family", gen.family)
      ->required()
      ->check(CLI::IsMember({"tight2", "tight3", "greedy", "random"}));
  gc->add_option("-k", gen.k, "tight2 parameter");
  gc->add_option("-n", gen.n, "tight3 parameter, greedy size or random string count");
  gc->add_option("--seed", gen.seed);
  gc->add_option("--alphabet", gen.alphabet)->check(CLI::Range(1, 26));
  gc->add_option("--min-len", gen.min_len)->check(CLI::PositiveNumber);
  gc->add_option("--max-len", gen.max_len)->check(CLI::PositiveNumber);
  gc->add_option("output,-o,--output", gen.output, "Output file (stdout if omitted)");

  std::string inspect_input, inspect_json;
  auto* ic = app.add_subcommand("inspect", "Print the overlap matrix of a file, unnormalized");
  ic->add_option("input", inspect_input, "Instance file")->required();
  ic->add_option("--json", inspect_json, "Write a JSON report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (sc->parsed()) return cmd_solve(solve, args, out, err);
    if (cc->parsed()) return cmd_compare(compare, args, out, err);
    if (vc->parsed()) return cmd_verify(verify, args, out, err);
    if (gc->parsed()) return cmd_gen(gen, out, err);
    return cmd_inspect(inspect_input, inspect_json, args, out);
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  }
}

}  // namespace superstring
