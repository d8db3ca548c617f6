#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "superstring/bounds.hpp"
#include "superstring/errors.hpp"
#include "superstring/graph.hpp"
#include "superstring/pipeline.hpp"

using namespace superstring;

namespace {

std::vector<Text> texts(std::initializer_list<const char*> list) {
  return {list.begin(), list.end()};
}

oracle::Matrix rows_of(const WeightMatrix& m) {
  oracle::Matrix out(m.size(), std::vector<std::int64_t>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m(i, j);
  return out;
}

std::int64_t cover_weight(const CycleCover& c, const WeightMatrix& m) {
  std::int64_t w = 0;
  for (std::size_t i = 0; i < c.perm.size(); ++i) w += m(i, c.perm[i]);
  return w;
}

}  // namespace

TEST_CASE("normalize removes duplicates and contained strings") {
  const auto a = texts({"ab", "ab", "ba"});
  CHECK(normalize(a).strings == texts({"ab", "ba"}));

  const auto b = texts({"abc", "b", "abc"});
  const Normalization nb = normalize_strings(b);
  CHECK(nb.survivors == texts({"abc"}));
  CHECK(nb.removed.size() == 2);
  CHECK_THROWS_WITH_AS(normalize(b), "degenerate instance", DegenerateInstance);

  const auto c = texts({"abc", "bcd", "cde"});
  CHECK(normalize(c).strings == c);

  const auto d = texts({"b", "ab", "ab", "cab", "x"});
  const Normalization nd = normalize_strings(d);
  CHECK(nd.survivors == texts({"cab", "x"}));
  CHECK(nd.survivor_indices == std::vector<std::size_t>{3, 4});

  CHECK_THROWS_AS(normalize(std::vector<Text>{}), std::invalid_argument);
}

TEST_CASE("normalize agrees with the oracle") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 2000; ++t) {
    std::vector<Text> raw;
    const std::size_t n = 1 + t % 8;
    for (std::size_t i = 0; i < n; ++i) raw.push_back(oracle::random_text(rng, 1, 5, 2));
    REQUIRE(normalize_strings(raw).survivors == oracle::normalize(raw));
  }
}

TEST_CASE("overlap and prefix matrices") {
  const auto m = build_matrices(Instance{texts({"ab", "ba"}), {}});
  CHECK(m.overlap == WeightMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(m.prefix == WeightMatrix::from_rows({{2, 1}, {1, 2}}, MatrixKind::Prefix));

  const auto n = build_matrices(Instance{texts({"aa", "bb"}), {}});
  CHECK(n.overlap == WeightMatrix::from_rows({{1, 0}, {0, 1}}));
  CHECK(n.prefix == WeightMatrix::from_rows({{1, 2}, {2, 1}}, MatrixKind::Prefix));

  const auto o = overlap_matrix(texts({"abc", "bcd", "cde"}));
  CHECK(o(0, 1) == 2);
  CHECK(o(1, 2) == 2);
  CHECK(o(0, 2) == 1);
  CHECK(o(1, 0) == 0);
  CHECK(o(2, 0) == 0);
  CHECK(o(2, 1) == 0);

  CHECK_THROWS_AS(WeightMatrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
  CHECK(o.without_self_loops()(0, 0) == 0);
  CHECK(o.without_self_loops()(0, 1) == 2);
}

TEST_CASE("matrix duality on random instances") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 500; ++t) {
    std::vector<Text> raw;
    for (int i = 0; i < 6; ++i) raw.push_back(oracle::random_text(rng, 1, 10, 2 + t % 2));
    const auto s = oracle::normalize(raw);
    const auto m = build_matrices(Instance{s, {}});
    const auto ov = oracle::overlap_matrix(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        REQUIRE(m.overlap(i, j) == ov[i][j]);
        REQUIRE(m.overlap(i, j) + m.prefix(i, j) == static_cast<std::int64_t>(s[i].size()));
        REQUIRE(m.prefix(i, j) >= 0);
      }
    }
  }
}

TEST_CASE("cycle covers on documented examples") {
  const auto ab = build_matrices(Instance{texts({"ab", "ba"}), {}});
  const CycleCover minc = min_cycle_cover(ab.prefix);
  CHECK(minc.total_weight == 2);
  CHECK(minc.cycles == std::vector<std::vector<std::size_t>>{{0, 1}});
  const CycleCover maxc = max_cycle_cover(ab.overlap);
  CHECK(maxc.total_weight == 2);
  CHECK(maxc.cycles.size() == 1);

  const CycleCover id = min_cycle_cover(WeightMatrix::from_rows({{0, 9}, {9, 0}}));
  CHECK(id.total_weight == 0);
  CHECK(id.perm == std::vector<std::size_t>{0, 1});

  const auto abc = build_matrices(Instance{texts({"abc", "bcd", "cde"}), {}});
  const CycleCover c3 = min_cycle_cover(abc.prefix);
  CHECK(c3.total_weight == oracle::cycle_cover_weight(rows_of(abc.prefix), false));
  CHECK(c3.total_weight == 5);

  const CycleCover zero = max_cycle_cover(WeightMatrix(4, MatrixKind::Overlap));
  CHECK(zero.total_weight == 0);
  CHECK(zero.perm == std::vector<std::size_t>{0, 1, 2, 3});

  const CycleFixture f = gen_tight_2cycle(1);
  const WeightMatrix tight = overlap_matrix(std::vector<Text>{f.nodes[0].text, f.nodes[1].text});
  const CycleCover tc = max_cycle_cover(tight);
  CHECK(tc.total_weight == 16);
  CHECK(tc.cycles == std::vector<std::vector<std::size_t>>{{0, 1}});
}

TEST_CASE("assignment covers match permutation enumeration") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 3000; ++t) {
    const std::size_t n = 1 + t % 7;
    WeightMatrix m(n, MatrixKind::Prefix);
    std::uniform_int_distribution<std::int64_t> w(0, t % 2 ? 3 : 40);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = w(rng);
    const auto rows = rows_of(m);
    const CycleCover lo = min_cycle_cover(m);
    const CycleCover hi = max_cycle_cover(m);
    REQUIRE(lo.total_weight == oracle::cycle_cover_weight(rows, false));
    REQUIRE(hi.total_weight == oracle::cycle_cover_weight(rows, true));
    REQUIRE(cover_weight(lo, m) == lo.total_weight);
    REQUIRE(cover_weight(hi, m) == hi.total_weight);

    std::vector<bool> seen(n, false);
    for (const auto& cycle : lo.cycles) {
      REQUIRE(cycle.front() == *std::min_element(cycle.begin(), cycle.end()));
      for (std::size_t t2 = 0; t2 < cycle.size(); ++t2) {
        REQUIRE_FALSE(seen[cycle[t2]]);
        seen[cycle[t2]] = true;
        REQUIRE(lo.perm[cycle[t2]] == cycle[(t2 + 1) % cycle.size()]);
      }
    }
    REQUIRE(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  }
}

TEST_CASE("prefix and overlap covers are dual") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 1000; ++t) {
    std::vector<Text> raw;
    for (int i = 0; i < 7; ++i) raw.push_back(oracle::random_text(rng, 1, 9, 2));
    const Instance inst{oracle::normalize(raw), {}};
    const auto m = build_matrices(inst);
    REQUIRE(min_cycle_cover(m.prefix).total_weight ==
            inst.total_length() - max_cycle_cover(m.overlap).total_weight);
  }
}

TEST_CASE("cycle strings of a minimum cover are primitive and non-equivalent") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 3000; ++t) {
    std::vector<Text> raw;
    for (int i = 0; i < 8; ++i) raw.push_back(oracle::random_text(rng, 1, 12, 2 + t % 2));
    const Instance inst{oracle::normalize(raw), {}};
    const CycleCover c = min_cycle_cover(prefix_matrix(inst.strings));
    std::vector<Text> s;
    for (const auto& cycle : c.cycles) {
      s.push_back(cycle_string(inst, cycle));
      INFO("s(C) = " << s.back());
      REQUIRE(oracle::is_primitive(s.back()));
    }
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) REQUIRE_FALSE(oracle::equivalent(s[i], s[j]));
  }
}

TEST_CASE("cycle statistics") {
  const CycleFixture f2 = gen_tight_2cycle(1);
  const WeightMatrix m2 = overlap_matrix(std::vector<Text>{f2.nodes[0].text, f2.nodes[1].text});
  const CycleCover c2 = max_cycle_cover(m2.without_self_loops());
  const std::vector<std::int64_t> l2{8, 5};
  const auto s2 = cycle_stats(c2, m2, l2);
  REQUIRE(s2.size() == 1);
  CHECK(s2[0].M == 7);
  CHECK(s2[0].O == 16);
  CHECK(s2[0].L == 13);
  CHECK(s2[0].delta_O == Rational(7, 2));

  const CycleFixture f3 = gen_tight_3cycle(1);
  std::vector<Text> x3;
  for (const auto& node : f3.nodes) x3.push_back(node.text);
  const WeightMatrix m3 = overlap_matrix(x3);
  CycleCover c3;
  c3.perm = {1, 2, 0};
  c3.cycles = {{0, 1, 2}};
  const std::vector<std::int64_t> l3{16, 13, 5};
  const auto s3 = cycle_stats(c3, m3, l3);
  CHECK(s3[0].M == 12);
  CHECK(s3[0].O == 46);
  CHECK(s3[0].L == 34);

  CycleCover one;
  one.perm = {0};
  one.cycles = {{0}};
  const auto s1 = cycle_stats(one, WeightMatrix(1, MatrixKind::Overlap),
                              std::vector<std::int64_t>{4});
  CHECK(s1[0].M == 0);
  CHECK(s1[0].O == 0);
  CHECK(s1[0].delta_O == Rational(6));

  CHECK_THROWS_AS(cycle_stats(one, m3, std::vector<std::int64_t>{4}), std::invalid_argument);
  CHECK_THROWS_AS(permutation_cycles(std::vector<std::size_t>{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(permutation_cycles(std::vector<std::size_t>{5}), std::invalid_argument);
}
