#pragma once

// Overlap and prefix (distance) graphs, exact cycle covers and per-cycle
// statistics.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "superstring/rational.hpp"
#include "superstring/words.hpp"

namespace superstring {

/// A normalized set of strings: at least two, pairwise distinct, none a
/// substring of another.
struct Instance {
  std::vector<Text> strings;
  std::vector<std::string> labels;  // optional, parallel to `strings` when set

  std::size_t size() const { return strings.size(); }
  std::int64_t total_length() const;
};

struct Removal {
  enum class Reason { Duplicate, Substring };
  std::size_t input_index;   // position in the raw list
  Reason reason;
  std::size_t witness;       // raw index of the string that made it redundant
};

struct Normalization {
  std::vector<Text> survivors;
  std::vector<std::size_t> survivor_indices;  // raw positions, ascending
  std::vector<Removal> removed;
};

/// Dedupe (keep first) and drop strings contained in another, preserving
/// order. Never throws on small results; see `normalize` for that.
Normalization normalize_strings(std::span<const Text> raw);

/// Throws std::invalid_argument for an empty list and DegenerateInstance
/// when fewer than two strings survive.
Instance normalize(std::span<const Text> raw);

enum class MatrixKind { Overlap, Prefix };

/// Dense n x n integer weights, row-major.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(std::size_t n, MatrixKind kind) : n_(n), kind_(kind), w_(n * n, 0) {}

  std::size_t size() const { return n_; }
  MatrixKind kind() const { return kind_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return w_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }

  /// Copy with every diagonal entry set to zero.
  WeightMatrix without_self_loops() const;

  static WeightMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                MatrixKind kind = MatrixKind::Overlap);

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::size_t n_ = 0;
  MatrixKind kind_ = MatrixKind::Overlap;
  std::vector<std::int64_t> w_;
};

/// Diagonal holds |longest border|.
WeightMatrix overlap_matrix(std::span<const Text> strings);
/// w[i][j] = |s_i| - overlap[i][j].
WeightMatrix prefix_matrix(std::span<const Text> strings);

struct GraphMatrices {
  WeightMatrix overlap;
  WeightMatrix prefix;
};
GraphMatrices build_matrices(const Instance& inst);

struct CycleCover {
  std::vector<std::size_t> perm;                 // perm[i] = successor of i
  std::vector<std::vector<std::size_t>> cycles;  // each starts at its smallest node
  std::int64_t total_weight = 0;
};

/// Cycles of a permutation, each rotated to start at its smallest node and
/// listed by ascending smallest node.
std::vector<std::vector<std::size_t>> permutation_cycles(std::span<const std::size_t> perm);

/// Minimum-cost assignment (Hungarian method with potentials, O(n^3)).
/// Returns row -> column.
std::vector<std::size_t> min_cost_assignment(const WeightMatrix& m);

CycleCover min_cycle_cover(const WeightMatrix& m);
CycleCover max_cycle_cover(const WeightMatrix& m);

struct CycleStats {
  std::size_t length = 0;   // number of nodes on the cycle
  std::int64_t M = 0;       // lightest edge
  std::int64_t O = 0;       // total edge weight
  std::int64_t L = 0;       // sum of per-node periods
  Rational delta_O;         // 3/2 L - O
};

/// `periods[i]` is the period length l_i attached to node i. Throws
/// std::invalid_argument on mismatched dimensions.
std::vector<CycleStats> cycle_stats(const CycleCover& cover, const WeightMatrix& overlaps,
                                    std::span<const std::int64_t> periods);

}  // namespace superstring
