#pragma once

// Executable overlap bounds for nice words and their w-strings, cycle-level
// approximation inequalities, and generators for the families that make
// those inequalities tight.
//
// Notation: for nodes i, j with nice words w_i and w-strings x_i,
//   l_i = |w_i|, a_i = alpha(w_i), o_ij = |ov(x_i, x_j)|,
//   do_ij = l_i + l_j/2 - o_ij,   da_i = l_i/2 - a_i.
// For a cycle: M = lightest edge, O = total overlap, L = sum of l_i and
// dO = 3L/2 - O.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "superstring/graph.hpp"
#include "superstring/rational.hpp"
#include "superstring/words.hpp"

namespace superstring {

/// A nice word paired with one of its w-strings.
struct WordString {
  NiceWord word;
  Text text;
};

/// One evaluated inequality. `holds` <=> lhs < rhs (strict) or lhs <= rhs.
/// Checks whose precondition fails are reported with applicable = false and
/// hold vacuously. Disjunctive conditions are encoded as a 0/1 violation
/// indicator in `lhs` against rhs = 0.
struct BoundReport {
  std::string check;
  std::string inputs;
  Rational lhs{0};
  Rational rhs{0};
  bool strict = false;
  bool holds = true;
  bool applicable = true;
};

BoundReport evaluate(std::string check, std::string inputs, Rational lhs, Rational rhs,
                     bool strict);
BoundReport not_applicable(std::string check, std::string inputs);

struct CycleFixture {
  std::vector<WordString> nodes;
  std::vector<std::size_t> order;  // cyclic visiting order over `nodes`
};

/// Overlap bounds for the ordered pair (a, b) in both directions plus the
/// two-cycle bound. Throws std::invalid_argument for equivalent words.
/// Degenerate words yield only non-applicable reports.
std::vector<BoundReport> check_pair_bounds(const WordString& a, const WordString& b);

/// Positions of the extremal rotations of w_12 (the rotation of w_1 that
/// reads ov(x_1, x_2) from the left, smallest start on ties) and the alpha
/// bound that follows from them. Requires l_1 >= l_2 and o_12 >= l_2; a
/// min-rotation w_2 is handled under the reversed symbol order.
std::vector<BoundReport> verify_rotation_positions(const WordString& a, const WordString& b);

/// Per-cycle quantities of a fixture. 1-cycles carry no overlap.
struct CycleQuantities {
  std::vector<std::int64_t> periods;   // l along the cycle order
  std::vector<std::int64_t> overlaps;  // o for edge t -> t+1
  std::int64_t M = 0, O = 0, L = 0;
  Rational delta_O{0};
};
CycleQuantities cycle_quantities(const CycleFixture& f);

std::vector<BoundReport> check_cycle_theorems(const CycleFixture& f);

// Generators -----------------------------------------------------------------

/// w_1 = b a^k b | a^(k+1) b a^(k+1), w_2 = a^(k+1) | b a^k b,
/// x_i = (w_i w_i)[1, 2 l_i - 1].
CycleFixture gen_tight_2cycle(int k);

/// Three-node family with l = (6n+10, 5n+8, 2n+3).
CycleFixture gen_tight_3cycle(int n);

/// Closed-form overlaps along the fixture's cycle order and the resulting
/// gap 11L - (2M + 7O).
struct TightForms {
  std::vector<std::int64_t> overlaps;
  std::vector<std::int64_t> periods;
  std::int64_t M = 0, O = 0, L = 0, gap = 0;
};
TightForms tight_2cycle_forms(int k);
TightForms tight_3cycle_forms(int n);

/// Strings x_3..x_n with w_{2k} = b^k | a^k and w_{2k-1} = a^(k-1) | b^k.
/// Along the path x_n -> x_(n-1) -> ... -> x_3 consecutive overlaps are
/// floor(3i/2).
struct GreedyPathFamily {
  std::vector<WordString> nodes;           // x_3 .. x_n
  Instance instance;                       // texts of `nodes`
  std::vector<std::int64_t> expected;      // o_{i+1,i} for i = n-1 down to 3
  std::int64_t expected_total = 0;
  std::int64_t period_sum = 0;             // sum of l_i, i = 3..n
};
GreedyPathFamily gen_greedy_path(int n);

using Rng = std::mt19937_64;

/// Uniform random primitive string of length in [min_len, max_len] over the
/// first `alphabet_size` letters, returned as its nice rotation. Throws
/// std::runtime_error after 1000 consecutive non-primitive draws.
NiceWord gen_random_nice(Rng& rng, std::size_t min_len, std::size_t max_len,
                         std::size_t alphabet_size);
NiceWord gen_random_nice(std::uint64_t seed, std::size_t min_len, std::size_t max_len,
                         std::size_t alphabet_size);

}  // namespace superstring
