#include "superstring/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "superstring/errors.hpp"

namespace superstring {

std::int64_t Instance::total_length() const {
  std::int64_t total = 0;
  for (const auto& s : strings) total += static_cast<std::int64_t>(s.size());
  return total;
}

Normalization normalize_strings(std::span<const Text> raw) {
  Normalization out;
  std::vector<std::size_t> unique;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto first = std::find_if(unique.begin(), unique.end(),
                              [&](std::size_t u) { return raw[u] == raw[i]; });
    if (first != unique.end()) {
      out.removed.push_back({i, Removal::Reason::Duplicate, *first});
    } else {
      unique.push_back(i);
    }
  }

  for (std::size_t i : unique) {
    std::optional<std::size_t> witness;
    for (std::size_t j : unique) {
      if (j != i && raw[j].find(raw[i]) != Text::npos) {
        witness = j;
        break;
      }
    }
    if (witness) {
      out.removed.push_back({i, Removal::Reason::Substring, *witness});
    } else {
      out.survivors.push_back(raw[i]);
      out.survivor_indices.push_back(i);
    }
  }
  std::sort(out.removed.begin(), out.removed.end(),
            [](const Removal& a, const Removal& b) { return a.input_index < b.input_index; });
  return out;
}

Instance normalize(std::span<const Text> raw) {
  if (raw.empty()) throw std::invalid_argument("empty input");
  auto norm = normalize_strings(raw);
  if (norm.survivors.size() < 2) throw DegenerateInstance();
  return Instance{std::move(norm.survivors), {}};
}

WeightMatrix WeightMatrix::without_self_loops() const {
  WeightMatrix out = *this;
  for (std::size_t i = 0; i < n_; ++i) out(i, i) = 0;
  return out;
}

WeightMatrix WeightMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                     MatrixKind kind) {
  WeightMatrix m(rows.size(), kind);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

WeightMatrix overlap_matrix(std::span<const Text> strings) {
  WeightMatrix m(strings.size(), MatrixKind::Overlap);
  for (std::size_t i = 0; i < strings.size(); ++i) {
    for (std::size_t j = 0; j < strings.size(); ++j) {
      m(i, j) = static_cast<std::int64_t>(overlap(strings[i], strings[j]).size());
    }
  }
  return m;
}

WeightMatrix prefix_matrix(std::span<const Text> strings) {
  const WeightMatrix ov = overlap_matrix(strings);
  WeightMatrix m(strings.size(), MatrixKind::Prefix);
  for (std::size_t i = 0; i < strings.size(); ++i) {
    for (std::size_t j = 0; j < strings.size(); ++j) {
      m(i, j) = static_cast<std::int64_t>(strings[i].size()) - ov(i, j);
    }
  }
  return m;
}

GraphMatrices build_matrices(const Instance& inst) {
  GraphMatrices g{overlap_matrix(inst.strings), WeightMatrix(inst.size(), MatrixKind::Prefix)};
  for (std::size_t i = 0; i < inst.size(); ++i) {
    for (std::size_t j = 0; j < inst.size(); ++j) {
      g.prefix(i, j) = static_cast<std::int64_t>(inst.strings[i].size()) - g.overlap(i, j);
    }
  }
  return g;
}

std::vector<std::vector<std::size_t>> permutation_cycles(std::span<const std::size_t> perm) {
  std::vector<bool> hit(perm.size(), false);
  for (std::size_t target : perm) {
    if (target >= perm.size() || hit[target]) throw std::invalid_argument("not a permutation");
    hit[target] = true;
  }

  std::vector<std::vector<std::size_t>> cycles;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t v = start; !seen[v]; v = perm[v]) {
      seen[v] = true;
      cycle.push_back(v);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::vector<std::size_t> min_cost_assignment(const WeightMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return {};
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

  // 1-based rows/columns; column 0 is the virtual start of each augmenting path.
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::int64_t> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::int64_t delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = m(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 1; j <= n; ++j) assignment[p[j] - 1] = j - 1;
  return assignment;
}

namespace {

CycleCover cover_from_perm(std::vector<std::size_t> perm, const WeightMatrix& m) {
  CycleCover cover;
  cover.cycles = permutation_cycles(perm);
  for (std::size_t i = 0; i < perm.size(); ++i) cover.total_weight += m(i, perm[i]);
  cover.perm = std::move(perm);
  return cover;
}

}  // namespace

CycleCover min_cycle_cover(const WeightMatrix& m) {
  return cover_from_perm(min_cost_assignment(m), m);
}

CycleCover max_cycle_cover(const WeightMatrix& m) {
  WeightMatrix negated(m.size(), m.kind());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) negated(i, j) = -m(i, j);
  return cover_from_perm(min_cost_assignment(negated), m);
}

std::vector<CycleStats> cycle_stats(const CycleCover& cover, const WeightMatrix& overlaps,
                                    std::span<const std::int64_t> periods) {
  if (cover.perm.size() != overlaps.size() || periods.size() != overlaps.size()) {
    throw std::invalid_argument("cycle_stats: mismatched dimensions");
  }
  std::vector<CycleStats> stats;
  stats.reserve(cover.cycles.size());
  for (const auto& cycle : cover.cycles) {
    CycleStats s;
    s.length = cycle.size();
    s.M = std::numeric_limits<std::int64_t>::max();
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      const std::int64_t w = overlaps(cycle[t], cycle[(t + 1) % cycle.size()]);
      s.M = std::min(s.M, w);
      s.O += w;
      s.L += periods[cycle[t]];
    }
    s.delta_O = Rational(3 * s.L, 2) - s.O;
    stats.push_back(s);
  }
  return stats;
}

}  // namespace superstring
