#include "superstring/atsp.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "superstring/errors.hpp"

namespace superstring {

std::string_view to_string(PathSolverKind kind) {
  switch (kind) {
    case PathSolverKind::Exact: return "exact";
    case PathSolverKind::CycleCoverHalf: return "half";
    case PathSolverKind::Greedy: return "greedy";
    case PathSolverKind::External: return "external";
  }
  return "unknown";
}

std::int64_t path_weight(const WeightMatrix& m, std::span<const std::size_t> order) {
  std::int64_t w = 0;
  for (std::size_t t = 0; t + 1 < order.size(); ++t) w += m(order[t], order[t + 1]);
  return w;
}

PathSolution exact_max_path(const WeightMatrix& m, std::size_t limit) {
  const std::size_t n = m.size();
  if (n > limit) throw SolverLimitExceeded(n, limit);
  PathSolution out;
  out.solver = PathSolverKind::Exact;
  out.ratio_guarantee = 1;
  if (n == 0) return out;

  // best[mask * n + v]: heaviest path starting at v and visiting exactly `mask`.
  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min();
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<std::int64_t> best((full + 1) * n, kNone);
  for (std::size_t v = 0; v < n; ++v) best[(std::size_t{1} << v) * n + v] = 0;

  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!(mask & (std::size_t{1} << v))) continue;
      const std::size_t rest = mask & ~(std::size_t{1} << v);
      if (rest == 0) continue;
      std::int64_t value = kNone;
      for (std::size_t u = 0; u < n; ++u) {
        if (!(rest & (std::size_t{1} << u))) continue;
        const std::int64_t tail = best[rest * n + u];
        if (tail == kNone) continue;
        value = std::max(value, m(v, u) + tail);
      }
      best[mask * n + v] = value;
    }
  }

  // Smallest start, then smallest next node, among those achieving the optimum.
  std::int64_t optimum = kNone;
  for (std::size_t v = 0; v < n; ++v) optimum = std::max(optimum, best[full * n + v]);
  std::size_t mask = full;
  std::size_t current = 0;
  while (best[full * n + current] != optimum) ++current;
  out.order.push_back(current);
  while (out.order.size() < n) {
    const std::size_t rest = mask & ~(std::size_t{1} << current);
    const std::int64_t need = best[mask * n + current];
    std::size_t next = 0;
    while (!(rest & (std::size_t{1} << next)) || m(current, next) + best[rest * n + next] != need) {
      ++next;
    }
    out.order.push_back(next);
    mask = rest;
    current = next;
  }
  out.weight = optimum;
  return out;
}

PathSolution cycle_cover_path(const WeightMatrix& m) {
  PathSolution out;
  out.solver = PathSolverKind::CycleCoverHalf;
  out.ratio_guarantee = Rational(1, 2);
  if (m.size() == 0) return out;

  const CycleCover cover = max_cycle_cover(m.without_self_loops());
  for (const auto& cycle : cover.cycles) {
    const std::size_t k = cycle.size();
    std::size_t drop = 0;
    for (std::size_t t = 1; t < k; ++t) {
      if (m(cycle[t], cycle[(t + 1) % k]) < m(cycle[drop], cycle[(drop + 1) % k])) drop = t;
    }
    // The path starts right after the dropped edge.
    for (std::size_t t = 1; t <= k; ++t) out.order.push_back(cycle[(drop + t) % k]);
  }
  out.weight = path_weight(m, out.order);
  return out;
}

PathSolution greedy_max_path(const WeightMatrix& m) {
  const std::size_t n = m.size();
  PathSolution out;
  out.solver = PathSolverKind::Greedy;
  out.ratio_guarantee = Rational(1, 2);
  if (n == 0) return out;

  struct Edge {
    std::int64_t w;
    std::size_t i, j;
  };
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) edges.push_back({m(i, j), i, j});
  std::stable_sort(edges.begin(), edges.end(),
                   [](const Edge& a, const Edge& b) { return a.w > b.w; });

  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };

  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> next(n, kUnset);
  std::vector<bool> has_pred(n, false);
  std::size_t taken = 0;
  for (const Edge& e : edges) {
    if (taken + 1 == n) break;
    if (next[e.i] != kUnset || has_pred[e.j]) continue;
    const std::size_t a = find(e.i), b = find(e.j);
    if (a == b) continue;
    comp[a] = b;
    next[e.i] = e.j;
    has_pred[e.j] = true;
    ++taken;
  }

  std::size_t v = 0;
  while (has_pred[v]) ++v;
  for (; v != kUnset; v = next[v]) out.order.push_back(v);
  out.weight = path_weight(m, out.order);
  return out;
}

PathSolver make_path_solver(PathSolverKind kind, std::size_t exact_limit) {
  switch (kind) {
    case PathSolverKind::Exact:
      return [exact_limit](const WeightMatrix& m) { return exact_max_path(m, exact_limit); };
    case PathSolverKind::CycleCoverHalf:
      return [](const WeightMatrix& m) { return cycle_cover_path(m); };
    case PathSolverKind::Greedy:
      return [](const WeightMatrix& m) { return greedy_max_path(m); };
    case PathSolverKind::External:
      break;
  }
  throw std::invalid_argument("external path solvers must be supplied by the caller");
}

}  // namespace superstring
