#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "oracles.hpp"
#include "superstring/atsp.hpp"
#include "superstring/bounds.hpp"
#include "superstring/campaign.hpp"
#include "superstring/cli.hpp"
#include "superstring/pipeline.hpp"
#include "superstring/words.hpp"

using namespace superstring;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure only; later ones are counted.
struct Failures {
  std::size_t count = 0;
  std::string first;
  void add(const std::string& what) {
    if (count++ == 0) first = what;
  }
  Outcome outcome(const std::string& ok_detail) const {
    if (count == 0) return {true, ok_detail};
    return {false, std::to_string(count) + " failure(s), first: " + first};
  }
};

int run_criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_s > 0 && secs > budget_s) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(static_cast<int>(budget_s)) + " s budget)";
  }
  std::printf("criterion %d %s: %s  %.2fs  %s\n", id, name, o.pass ? "PASS" : "FAIL", secs,
              o.detail.c_str());
  std::fflush(stdout);
  return o.pass ? 0 : 1;
}

Outcome tight_two() {
  Failures f;
  for (int k = 1; k <= 64; ++k) {
    const CycleQuantities q = cycle_quantities(gen_tight_2cycle(k));
    const std::string at = "k=" + std::to_string(k);
    if (q.overlaps != std::vector<std::int64_t>{4 * k + 5, 3 * k + 4}) f.add(at + " overlaps");
    if (q.L != 5 * k + 8) f.add(at + " L");
    if (11 * q.L - (2 * q.M + 7 * q.O) != 17) f.add(at + " gap");
  }
  return f.outcome("k=1..64 exact");
}

Outcome tight_three() {
  Failures f;
  for (int n = 1; n <= 64; ++n) {
    const CycleQuantities q = cycle_quantities(gen_tight_3cycle(n));
    const std::string at = "n=" + std::to_string(n);
    if (q.overlaps != std::vector<std::int64_t>{8 * n + 12, 6 * n + 8, 5 * n + 7})
      f.add(at + " overlaps");
    if (11 * q.L - (2 * q.M + 7 * q.O) != 28) f.add(at + " gap");
  }
  return f.outcome("n=1..64 exact");
}

Outcome greedy_path() {
  Failures f;
  const GreedyPathFamily fam = gen_greedy_path(40);
  const auto& x = fam.nodes;
  std::int64_t total = 0, periods = 0;
  for (std::size_t t = 0; t + 1 < x.size(); ++t) {
    const auto i = static_cast<std::int64_t>(t) + 3;
    const auto o = static_cast<std::int64_t>(oracle::overlap(x[t + 1].text, x[t].text));
    if (o != 3 * i / 2) f.add("o(" + std::to_string(i + 1) + "," + std::to_string(i) + ")");
    total += o;
  }
  for (const auto& node : x) periods += static_cast<std::int64_t>(node.word.length());
  if (total * 100 <= 140 * periods) f.add("ratio");
  char buf[64];
  std::snprintf(buf, sizeof buf, "ratio %lld/%lld = %.4f", static_cast<long long>(total),
                static_cast<long long>(periods), static_cast<double>(total) / periods);
  return f.outcome(buf);
}

std::string tally_line(const CampaignResult& r) {
  std::size_t applicable = 0;
  for (const auto& [id, t] : r.tallies) applicable += t.run;
  return std::to_string(r.trials) + " trials, " + std::to_string(applicable) + " checks applied, " +
         std::to_string(r.failed) + " violations";
}

Outcome main_theorem() {
  CampaignOptions opts;
  opts.seed = 20240101;
  opts.trials = 10000;
  const CampaignResult r = run_instance_campaign(opts);
  Failures f;
  for (const char* id : {"cycle_main", "cycle_weak"}) {
    const auto it = r.tallies.find(id);
    if (it == r.tallies.end() || it->second.run == 0) f.add(std::string(id) + " never applied");
  }
  for (const auto& v : r.violations) f.add(v.check + " " + v.inputs);
  return f.outcome(tally_line(r));
}

Outcome pair_lemmas() {
  CampaignOptions opts;
  opts.seed = 20240102;
  opts.trials = 10000;
  const CampaignResult r = run_pair_campaign(opts);
  Failures f;
  for (const auto& v : r.violations) f.add(v.check + " " + v.inputs);
  return f.outcome(tally_line(r));
}

Outcome oracle_equivalence() {
  Failures f;
  auto compare_word = [&](const Text& w) {
    if (minimal_rotation_index(w) != oracle::min_rotation_index(w)) f.add("min rotation " + w);
    if (maximal_rotation_index(w) != oracle::max_rotation_index(w)) f.add("max rotation " + w);
    if (min_period(w) != oracle::period(w)) f.add("period " + w);
    if (longest_border(w).size() != oracle::border(w)) f.add("border " + w);
    const bool prim = is_primitive(w);
    if (prim != oracle::is_primitive(w)) f.add("primitive " + w);
    if (prim && w.size() > 1) {
      const NiceWord n = nice_rotation(w);
      const oracle::Nice o = oracle::nice(w);
      if (n.word != o.word || static_cast<std::size_t>(n.alpha) != o.alpha) f.add("nice " + w);
    }
  };
  std::size_t words = 0;
  for (std::size_t len = 1; len <= 12; ++len) {
    for (const Text& w : oracle::all_strings(len)) {
      compare_word(w);
      ++words;
    }
  }
  std::vector<Text> small;
  for (std::size_t len = 1; len <= 6; ++len)
    for (Text& w : oracle::all_strings(len)) small.push_back(std::move(w));
  for (const Text& u : small)
    for (const Text& v : small)
      if (overlap(u, v).size() != oracle::overlap(u, v)) f.add("overlap " + u + "," + v);

  std::mt19937_64 rng(606);
  for (int t = 0; t < 10000; ++t) {
    const int alphabet = 2 + t % 2;
    const Text w = oracle::random_text(rng, 13, 40, alphabet);
    const Text v = oracle::random_text(rng, 13, 40, alphabet);
    compare_word(w);
    if (overlap(w, v).size() != oracle::overlap(w, v)) f.add("overlap " + w + "," + v);
    const Text tail = w.substr(w.size() / 2) + v;
    if (overlap(w, tail).size() != oracle::overlap(w, tail)) f.add("overlap " + w + "," + tail);
  }

  std::size_t matrices = 0;
  for (int t = 0; t < 3000; ++t) {
    const std::size_t n = 1 + t % 8;
    oracle::Matrix rows(n, std::vector<std::int64_t>(n));
    std::uniform_int_distribution<std::int64_t> w(0, t % 3 == 0 ? 2 : 30);
    for (auto& row : rows)
      for (auto& x : row) x = w(rng);
    const PathSolution p = exact_max_path(WeightMatrix::from_rows(rows));
    if (p.weight != oracle::max_path_weight(rows) || p.order != oracle::first_max_path(rows))
      f.add("held-karp n=" + std::to_string(n));
    ++matrices;
  }
  return f.outcome(std::to_string(words) + " exhaustive words, 10000 random, " +
                   std::to_string(matrices) + " matrices");
}

// Fuzz set shared by criteria 7 and 8.
std::vector<Instance> fuzz_instances() {
  std::mt19937_64 rng(707);
  std::vector<Instance> out;
  while (out.size() < 1000) {
    std::uniform_int_distribution<std::size_t> count(2, 10);
    const std::size_t n = count(rng);
    const int alphabet = 2 + static_cast<int>(out.size() % 2);
    std::vector<Text> raw;
    for (std::size_t i = 0; i < n; ++i) raw.push_back(oracle::random_text(rng, 1, 12, alphabet));
    auto s = oracle::normalize(raw);
    if (s.size() >= 2) out.push_back(Instance{std::move(s), {}});
  }
  return out;
}

Outcome end_to_end(const std::vector<Instance>& set) {
  Failures f;
  const PathSolver exact = make_path_solver(PathSolverKind::Exact);
  std::size_t brute = 0;
  for (std::size_t t = 0; t < set.size(); ++t) {
    const Instance& inst = set[t];
    const std::string at = "instance " + std::to_string(t);
    const Solution best = exact_superstring(inst);
    const std::int64_t opt = best.length;
    if (inst.size() <= 7) {
      ++brute;
      if (static_cast<std::size_t>(opt) != oracle::shortest_superstring_length(inst.strings))
        f.add(at + " OPT mismatch");
    }
    const Solution s1 = solve_s1(inst, exact);
    const Solution s2 = solve_s2(inst);
    const Solution s0 = solve_combined(inst, exact);
    const Solution g = greedy_superstring(inst);
    for (const Solution* s : {&best, &s1, &s2, &s0, &g})
      if (!oracle::contains_all(s->text, inst.strings)) f.add(at + " invalid " + s->algorithm);
    if (s1.length > 2 * opt) f.add(at + " S1 > 2 OPT");
    if (s0.length > s1.length) f.add(at + " S0 > S1");
    if (s0.length > s2.length) f.add(at + " S0 > S2");
    if (2 * g.length > 7 * opt) f.add(at + " greedy > 3.5 OPT");
  }
  return f.outcome(std::to_string(set.size()) + " instances, OPT brute-checked on " +
                   std::to_string(brute));
}

Outcome half_floor(const std::vector<Instance>& set) {
  Failures f;
  for (std::size_t t = 0; t < set.size(); ++t) {
    const WeightMatrix m = overlap_matrix(set[t].strings);
    const std::int64_t best = exact_max_path(m).weight;
    for (const PathSolution& p : {cycle_cover_path(m), greedy_max_path(m)}) {
      if (2 * p.weight < best || path_weight(m, p.order) != p.weight)
        f.add("instance " + std::to_string(t) + " " + std::string(to_string(p.solver)));
    }
  }
  return f.outcome(std::to_string(set.size()) + " instances, both solvers");
}

Outcome cli_determinism() {
  Failures f;
  const fs::path dir = fs::temp_directory_path() / "superstring-acceptance";
  fs::create_directories(dir);
  const std::string input = (dir / "in.txt").string();
  {
    std::ostringstream out, err;
    run_cli({"gen", "--family", "random", "-n", "9", "--seed", "17", input}, out, err);
  }
  const std::string tight = (dir / "tight3.txt").string();
  {
    std::ostringstream out, err;
    run_cli({"gen", "--family", "tight3", "-n", "4", tight}, out, err);
  }
  const std::vector<std::vector<std::string>> commands{
      {"solve", input},
      {"solve", input, "--algo", "s2", "--path-solver", "greedy"},
      {"compare", input},
      {"compare", tight, "--path-solver", "half"},
      {"inspect", tight},
      {"verify", "--suite", "all", "--trials", "300", "--seed", "9", "--workers", "3"},
      {"verify", "--suite", "pairs", "--trials", "200", "--seed", "4", "--full-reports"},
  };
  auto run = [&](std::vector<std::string> args, const std::string& path) {
    args.insert(args.end(), {"--json", path});
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    std::ifstream in(path);
    nlohmann::json j = nlohmann::json::parse(in);
    j.erase("timestamp");
    return std::make_pair(code, j.dump());
  };
  for (const auto& cmd : commands) {
    const auto a = run(cmd, (dir / "out.json").string());
    const auto b = run(cmd, (dir / "out.json").string());
    if (a != b) f.add(cmd[0] + " " + (cmd.size() > 1 ? cmd[1] : ""));
  }
  std::ostringstream g1, g2, e;
  run_cli({"gen", "--family", "random", "-n", "12", "--seed", "8"}, g1, e);
  run_cli({"gen", "--family", "random", "-n", "12", "--seed", "8"}, g2, e);
  if (g1.str() != g2.str()) f.add("gen random");
  fs::remove_all(dir);
  return f.outcome(std::to_string(commands.size() + 1) + " commands repeated");
}

}  // namespace

int main() {
  int failed = 0;
  failed += run_criterion(1, "tight 2-cycle exactness", 1, tight_two);
  failed += run_criterion(2, "tight 3-cycle exactness", 1, tight_three);
  failed += run_criterion(3, "greedy path example", 1, greedy_path);
  failed += run_criterion(4, "main theorem fuzz", 60, main_theorem);
  failed += run_criterion(5, "pair lemma fuzz", 60, pair_lemmas);
  failed += run_criterion(6, "oracle equivalence", 120, oracle_equivalence);
  const std::vector<Instance> set = fuzz_instances();
  failed += run_criterion(7, "end-to-end ratios", 120, [&] { return end_to_end(set); });
  failed += run_criterion(8, "approximation-solver floor", 0, [&] { return half_floor(set); });
  failed += run_criterion(9, "CLI determinism", 0, cli_determinism);
  std::printf("%d of 9 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
