#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "superstring/atsp.hpp"
#include "superstring/bounds.hpp"
#include "superstring/errors.hpp"

using namespace superstring;

namespace {

using Order = std::vector<std::size_t>;

WeightMatrix from(const oracle::Matrix& rows) { return WeightMatrix::from_rows(rows); }

bool is_permutation_of(const Order& order, std::size_t n) {
  Order sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) return false;
  return sorted.size() == n;
}

}  // namespace

TEST_CASE("exact path on documented examples") {
  const PathSolution two = exact_max_path(from({{0, 5}, {3, 0}}));
  CHECK(two.order == Order{0, 1});
  CHECK(two.weight == 5);
  CHECK(two.solver == PathSolverKind::Exact);
  CHECK(two.ratio_guarantee == Rational(1));

  const auto abc = from(oracle::overlap_matrix({"abc", "bcd", "cde"}));
  const PathSolution three = exact_max_path(abc);
  CHECK(three.order == Order{0, 1, 2});
  CHECK(three.weight == 4);

  const PathSolution one = exact_max_path(WeightMatrix(1, MatrixKind::Overlap));
  CHECK(one.order == Order{0});
  CHECK(one.weight == 0);

  CHECK(exact_max_path(WeightMatrix()).order.empty());
  CHECK_THROWS_AS(exact_max_path(WeightMatrix(5, MatrixKind::Overlap), 4), SolverLimitExceeded);
  CHECK_THROWS_WITH(exact_max_path(WeightMatrix(5, MatrixKind::Overlap), 4),
                    "exact solver limit: n=5 exceeds 4");
}

TEST_CASE("cycle-cover path on documented examples") {
  const PathSolution two = cycle_cover_path(from({{0, 5}, {3, 0}}));
  CHECK(two.order == Order{0, 1});
  CHECK(two.weight == 5);
  CHECK(two.ratio_guarantee == Rational(1, 2));

  const PathSolution zero = cycle_cover_path(WeightMatrix(3, MatrixKind::Overlap));
  CHECK(zero.weight == 0);
  CHECK(is_permutation_of(zero.order, 3));

  const CycleFixture f = gen_tight_2cycle(1);
  const PathSolution tight =
      cycle_cover_path(from(oracle::overlap_matrix({f.nodes[0].text, f.nodes[1].text})));
  CHECK(tight.order == Order{0, 1});
  CHECK(tight.weight == 9);

  // Self-loops never enter the cover.
  const PathSolution loops = cycle_cover_path(from({{9, 1}, {2, 9}}));
  CHECK(loops.order == Order{1, 0});
  CHECK(loops.weight == 2);
}

TEST_CASE("greedy path on documented examples") {
  CHECK(greedy_max_path(from({{0, 5}, {3, 0}})).order == Order{0, 1});
  const PathSolution three = greedy_max_path(from(oracle::overlap_matrix({"abc", "bcd", "cde"})));
  CHECK(three.order == Order{0, 1, 2});
  CHECK(three.weight == 4);
  CHECK(three.solver == PathSolverKind::Greedy);

  oracle::Matrix uniform(5, std::vector<std::int64_t>(5, 3));
  const PathSolution u = greedy_max_path(from(uniform));
  CHECK(u.weight == 12);
  CHECK(is_permutation_of(u.order, 5));
}

TEST_CASE("Held-Karp matches permutation enumeration") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 4000; ++t) {
    const std::size_t n = 1 + t % 8;
    oracle::Matrix rows(n, std::vector<std::int64_t>(n));
    std::uniform_int_distribution<std::int64_t> w(0, t % 3 == 0 ? 2 : 30);
    for (auto& row : rows)
      for (auto& x : row) x = w(rng);
    const PathSolution p = exact_max_path(from(rows));
    REQUIRE(p.weight == oracle::max_path_weight(rows));
    REQUIRE(p.order == oracle::first_max_path(rows));
    REQUIRE(path_weight(from(rows), p.order) == p.weight);
  }
}

TEST_CASE("half-approximate solvers on overlap matrices") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 10000; ++t) {
    const std::size_t n = 2 + t % 7;
    std::vector<std::string> s;
    for (std::size_t i = 0; i < n; ++i) s.push_back(oracle::random_text(rng, 1, 10, 2 + t % 2));
    s = oracle::normalize(s);
    const auto rows = oracle::overlap_matrix(s);
    const WeightMatrix m = from(rows);
    const std::int64_t best = exact_max_path(m).weight;
    for (const PathSolution& p : {cycle_cover_path(m), greedy_max_path(m)}) {
      INFO("solver " << to_string(p.solver));
      REQUIRE(is_permutation_of(p.order, s.size()));
      REQUIRE(p.weight == path_weight(m, p.order));
      REQUIRE(p.weight <= best);
      REQUIRE(2 * p.weight >= best);
    }
  }
}

TEST_CASE("cycle-cover path keeps half of arbitrary matrices") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 10000; ++t) {
    const std::size_t n = 1 + t % 8;
    oracle::Matrix rows(n, std::vector<std::int64_t>(n));
    std::uniform_int_distribution<std::int64_t> w(0, 25);
    for (auto& row : rows)
      for (auto& x : row) x = w(rng);
    const WeightMatrix m = from(rows);
    const PathSolution p = cycle_cover_path(m);
    REQUIRE(is_permutation_of(p.order, n));
    REQUIRE(2 * p.weight >= exact_max_path(m).weight);
  }
}

TEST_CASE("solver factory and determinism") {
  const auto rows = oracle::overlap_matrix({"abc", "bcd", "cde", "eab"});
  const WeightMatrix m = from(rows);
  for (auto kind : {PathSolverKind::Exact, PathSolverKind::CycleCoverHalf, PathSolverKind::Greedy}) {
    const PathSolver solver = make_path_solver(kind);
    const PathSolution a = solver(m), b = solver(m);
    CHECK(a.order == b.order);
    CHECK(a.solver == kind);
  }
  CHECK_THROWS_AS(make_path_solver(PathSolverKind::External), std::invalid_argument);
  CHECK_THROWS_AS(make_path_solver(PathSolverKind::Exact, 2)(m), SolverLimitExceeded);
  CHECK(to_string(PathSolverKind::CycleCoverHalf) == "half");
}
