#pragma once

// Shortest-superstring solvers: the cycle-cover / representative reduction
// to Max-ATSP-Path (S1, S2 and the better-of-two combiner), classic greedy
// merging and an exact solver for small instances.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "superstring/atsp.hpp"
#include "superstring/graph.hpp"
#include "superstring/words.hpp"

namespace superstring {

struct Solution {
  std::vector<std::size_t> order;  // instance indices
  Text text;
  std::int64_t length = 0;
  std::int64_t total_overlap = 0;  // sum of input lengths minus `length`
  std::string algorithm;
};

/// One cycle of the minimum prefix-graph cycle cover, condensed into a
/// w(C)-string that contains every member.
struct Representative {
  Text text;
  NiceWord nice;                     // nice rotation of s(C)
  std::int64_t l = 0;                // |w(C)|, the cycle's prefix-graph weight
  std::vector<std::size_t> members;  // instance indices in cycle order
};

/// <s_{o1}, ..., s_{ok}>: consecutive strings glued along their overlaps.
/// Throws std::invalid_argument if `order` is not a permutation of the
/// instance indices.
Solution merge_order(const Instance& inst, std::span<const std::size_t> order);

/// Same gluing over arbitrary texts, in the given order.
Text merge_texts(std::span<const Text> texts, std::span<const std::size_t> order);

/// s(C): pref(s_1, s_2) pref(s_2, s_3) ... pref(s_k, s_1).
Text cycle_string(const Instance& inst, std::span<const std::size_t> cycle);

/// R(C) = shortest prefix of w(C)^inf containing every member of the cycle.
Representative representative(const Instance& inst, std::span<const std::size_t> cycle);

/// Representatives of every cycle of the minimum prefix-graph cycle cover.
std::vector<Representative> representatives(const Instance& inst);

/// The maximum cycle cover in the overlap graph of the representatives
/// (self-loops weigh zero) together with per-cycle M, O, L statistics.
struct RepresentativeCover {
  std::vector<Representative> reps;
  WeightMatrix overlaps;  // overlap matrix of the representatives, zero diagonal
  CycleCover cover;
  std::vector<CycleStats> stats;
};
RepresentativeCover representative_cover(const Instance& inst);

/// S1: representatives merged along the path returned by `path_solver`.
Solution solve_s1(const Instance& inst, const PathSolver& path_solver);
/// S2: the same reduction with the cycle-cover 1/2-approximate path.
Solution solve_s2(const Instance& inst);
/// S0: the shorter of S1 and S2 (S1 on ties).
Solution solve_combined(const Instance& inst, const PathSolver& path_solver);

/// Merge the pair with the largest overlap until one string remains.
Solution greedy_superstring(const Instance& inst);

/// Optimal superstring through an exact maximum-overlap path.
Solution exact_superstring(const Instance& inst, std::size_t limit = kDefaultExactLimit);

bool validate_superstring(const Instance& inst, std::string_view text);

}  // namespace superstring
