#include "superstring/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace superstring {

namespace {

void require_permutation(std::span<const std::size_t> order, std::size_t n) {
  if (order.size() != n) throw std::invalid_argument("order is not a permutation");
  std::vector<bool> seen(n, false);
  for (std::size_t i : order) {
    if (i >= n || seen[i]) throw std::invalid_argument("order is not a permutation");
    seen[i] = true;
  }
}

// Orders instance strings by where they first occur in `text`.
Solution finish(const Instance& inst, Text text, std::string algorithm) {
  Solution s;
  std::vector<std::size_t> pos(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) pos[i] = text.find(inst.strings[i]);
  s.order.resize(inst.size());
  std::iota(s.order.begin(), s.order.end(), std::size_t{0});
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
  s.length = static_cast<std::int64_t>(text.size());
  s.total_overlap = inst.total_length() - s.length;
  s.text = std::move(text);
  s.algorithm = std::move(algorithm);
  return s;
}

std::vector<Text> texts_of(const std::vector<Representative>& reps) {
  std::vector<Text> texts;
  texts.reserve(reps.size());
  for (const auto& r : reps) texts.push_back(r.text);
  return texts;
}

Solution reduce_through_path(const Instance& inst, const PathSolver& path_solver,
                             std::string algorithm) {
  const auto reps = representatives(inst);
  const auto texts = texts_of(reps);
  if (texts.size() == 1) return finish(inst, texts.front(), std::move(algorithm));
  const PathSolution path = path_solver(overlap_matrix(texts));
  return finish(inst, merge_texts(texts, path.order), std::move(algorithm));
}

}  // namespace

Text merge_texts(std::span<const Text> texts, std::span<const std::size_t> order) {
  Text out;
  for (std::size_t t = 0; t + 1 < order.size(); ++t) {
    out.append(prefix_part(texts[order[t]], texts[order[t + 1]]));
  }
  if (!order.empty()) out.append(texts[order.back()]);
  return out;
}

Solution merge_order(const Instance& inst, std::span<const std::size_t> order) {
  require_permutation(order, inst.size());
  Solution s;
  s.order.assign(order.begin(), order.end());
  s.text = merge_texts(inst.strings, order);
  s.length = static_cast<std::int64_t>(s.text.size());
  s.total_overlap = inst.total_length() - s.length;
  s.algorithm = "merge";
  return s;
}

Text cycle_string(const Instance& inst, std::span<const std::size_t> cycle) {
  Text s;
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    s.append(prefix_part(inst.strings[cycle[t]], inst.strings[cycle[(t + 1) % cycle.size()]]));
  }
  return s;
}

Representative representative(const Instance& inst, std::span<const std::size_t> cycle) {
  const Text s = cycle_string(inst, cycle);
  if (!is_primitive(s)) throw std::logic_error("cycle string is not primitive: " + s);

  Representative rep;
  rep.nice = nice_rotation(s);
  rep.l = static_cast<std::int64_t>(s.size());
  rep.members.assign(cycle.begin(), cycle.end());

  // Every member occurs in w^inf at an offset below l.
  std::size_t longest = 0;
  for (std::size_t m : cycle) longest = std::max(longest, inst.strings[m].size());
  const Text window = w_string_prefix(rep.nice, s.size() + longest);
  std::size_t end = 0;
  for (std::size_t m : cycle) {
    const std::size_t at = window.find(inst.strings[m]);
    if (at == Text::npos) throw std::logic_error("cycle member is not a w(C)-substring");
    end = std::max(end, at + inst.strings[m].size());
  }
  rep.text = window.substr(0, end);
  return rep;
}

std::vector<Representative> representatives(const Instance& inst) {
  const CycleCover cover = min_cycle_cover(prefix_matrix(inst.strings));
  std::vector<Representative> reps;
  reps.reserve(cover.cycles.size());
  for (const auto& cycle : cover.cycles) reps.push_back(representative(inst, cycle));
  return reps;
}

RepresentativeCover representative_cover(const Instance& inst) {
  RepresentativeCover rc;
  rc.reps = representatives(inst);
  rc.overlaps = overlap_matrix(texts_of(rc.reps)).without_self_loops();
  rc.cover = max_cycle_cover(rc.overlaps);
  std::vector<std::int64_t> periods;
  periods.reserve(rc.reps.size());
  for (const auto& r : rc.reps) periods.push_back(r.l);
  rc.stats = cycle_stats(rc.cover, rc.overlaps, periods);
  return rc;
}

Solution solve_s1(const Instance& inst, const PathSolver& path_solver) {
  return reduce_through_path(inst, path_solver, "s1");
}

Solution solve_s2(const Instance& inst) {
  return reduce_through_path(
      inst, [](const WeightMatrix& m) { return cycle_cover_path(m); }, "s2");
}

Solution solve_combined(const Instance& inst, const PathSolver& path_solver) {
  Solution s1 = solve_s1(inst, path_solver);
  Solution s2 = solve_s2(inst);
  Solution& best = s2.length < s1.length ? s2 : s1;
  best.algorithm = "combined";
  return std::move(best);
}

Solution greedy_superstring(const Instance& inst) {
  std::vector<Text> current = inst.strings;
  std::vector<std::vector<std::size_t>> orders(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) orders[i] = {i};

  while (current.size() > 1) {
    std::size_t bi = 0, bj = 1;
    std::size_t best = overlap(current[0], current[1]).size();
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = 0; j < current.size(); ++j) {
        if (i == j) continue;
        const std::size_t o = overlap(current[i], current[j]).size();
        if (o > best) {
          best = o;
          bi = i;
          bj = j;
        }
      }
    }
    Text merged(prefix_part(current[bi], current[bj]));
    merged.append(current[bj]);
    std::vector<std::size_t> order = orders[bi];
    order.insert(order.end(), orders[bj].begin(), orders[bj].end());

    const std::size_t keep = std::min(bi, bj), drop = std::max(bi, bj);
    current[keep] = std::move(merged);
    orders[keep] = std::move(order);
    current.erase(current.begin() + static_cast<std::ptrdiff_t>(drop));
    orders.erase(orders.begin() + static_cast<std::ptrdiff_t>(drop));
  }

  Solution s;
  s.text = current.empty() ? Text{} : current.front();
  s.order = orders.empty() ? std::vector<std::size_t>{} : orders.front();
  s.length = static_cast<std::int64_t>(s.text.size());
  s.total_overlap = inst.total_length() - s.length;
  s.algorithm = "greedy";
  return s;
}

Solution exact_superstring(const Instance& inst, std::size_t limit) {
  const PathSolution path = exact_max_path(overlap_matrix(inst.strings), limit);
  Solution s = merge_order(inst, path.order);
  s.algorithm = "exact";
  return s;
}

bool validate_superstring(const Instance& inst, std::string_view text) {
  return std::all_of(inst.strings.begin(), inst.strings.end(),
                     [&](const Text& s) { return text.find(s) != std::string_view::npos; });
}

}  // namespace superstring
