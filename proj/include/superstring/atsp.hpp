#pragma once

// Max-ATSP-Path solvers: maximum-weight Hamiltonian path in a complete
// directed graph. Self-loops never appear on a path, so every solver ignores
// the diagonal.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "superstring/graph.hpp"
#include "superstring/rational.hpp"

namespace superstring {

inline constexpr std::size_t kDefaultExactLimit = 16;

/// `External` tags solutions produced by a caller-supplied solver plugged in
/// through `PathSolver` (e.g. a 2/3-approximation).
enum class PathSolverKind { Exact, CycleCoverHalf, Greedy, External };

std::string_view to_string(PathSolverKind kind);

struct PathSolution {
  std::vector<std::size_t> order;
  std::int64_t weight = 0;
  PathSolverKind solver = PathSolverKind::Exact;
  Rational ratio_guarantee{1};
};

using PathSolver = std::function<PathSolution(const WeightMatrix&)>;

/// Sum of consecutive edge weights along `order`.
std::int64_t path_weight(const WeightMatrix& m, std::span<const std::size_t> order);

/// Held-Karp over subsets, O(2^n n^2). Among optimal paths returns the
/// lexicographically smallest order. Throws SolverLimitExceeded when
/// n > limit.
PathSolution exact_max_path(const WeightMatrix& m, std::size_t limit = kDefaultExactLimit);

/// Maximum cycle cover (self-loops weigh 0), drop the first lightest edge of
/// each cycle walking from its smallest node, join the resulting paths by
/// ascending smallest node.
PathSolution cycle_cover_path(const WeightMatrix& m);

/// Repeatedly take the heaviest edge that keeps in/out degree <= 1 and closes
/// no cycle; ties go to the smallest (i, j). The 1/2 guarantee holds on
/// overlap matrices; on arbitrary matrices greedy is only a 1/3-approximation.
PathSolution greedy_max_path(const WeightMatrix& m);

PathSolver make_path_solver(PathSolverKind kind, std::size_t exact_limit = kDefaultExactLimit);

}  // namespace superstring
