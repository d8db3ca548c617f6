#include "superstring/bounds.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace superstring {

BoundReport evaluate(std::string check, std::string inputs, Rational lhs, Rational rhs,
                     bool strict) {
  BoundReport r;
  r.check = std::move(check);
  r.inputs = std::move(inputs);
  r.lhs = lhs;
  r.rhs = rhs;
  r.strict = strict;
  r.holds = strict ? lhs < rhs : lhs <= rhs;
  r.applicable = true;
  return r;
}

BoundReport not_applicable(std::string check, std::string inputs) {
  BoundReport r;
  r.check = std::move(check);
  r.inputs = std::move(inputs);
  r.applicable = false;
  r.holds = true;
  return r;
}

namespace {

using i64 = std::int64_t;

i64 len(const WordString& n) { return static_cast<i64>(n.word.length()); }
i64 alpha(const WordString& n) { return static_cast<i64>(n.word.alpha); }
i64 ov_len(const WordString& a, const WordString& b) {
  return static_cast<i64>(overlap(a.text, b.text).size());
}

BoundReport indicator(std::string check, std::string inputs, bool satisfied) {
  return evaluate(std::move(check), std::move(inputs), satisfied ? 0 : 1, 0, false);
}

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string describe_pair(const WordString& a, const WordString& b, i64 o12, i64 o21) {
  std::ostringstream s;
  s << "w1=" << a.word.word << " x1=" << a.text << " w2=" << b.word.word << " x2=" << b.text
    << " l1=" << len(a) << " l2=" << len(b) << " a1=" << alpha(a) << " a2=" << alpha(b)
    << " o12=" << o12 << " o21=" << o21;
  return s.str();
}

// Bounds on a single directed edge from -> to with overlap o.
void directed_bounds(const WordString& from, const WordString& to, i64 o, const std::string& dir,
                     const std::string& inputs, std::vector<BoundReport>& out) {
  const i64 li = len(from), lj = len(to), ai = alpha(from), aj = alpha(to);
  const auto id = [&](const char* name) { return std::string(name) + "[" + dir + "]"; };

  out.push_back(evaluate(id("overlap_below_period_plus_alpha"), inputs, o, li + aj, true));

  const i64 k = (li + lj - 1) / lj;  // smallest k with li <= k lj
  out.push_back(evaluate(id("overlap_below_period_multiple"), inputs, o, k * lj, true));

  if (li >= lj) {
    const Rational delta = Rational(li) + half(lj) - o + half(li) - ai;
    if (li < 2 * lj) {
      out.push_back(evaluate(id("overlap_alpha_flat"), inputs, o + ai, li + lj, false));
      out.push_back(evaluate(id("delta_sum_flat"), inputs, Rational(li - lj, 2), delta, false));
    } else {
      out.push_back(not_applicable(id("overlap_alpha_flat"), inputs));
      out.push_back(not_applicable(id("delta_sum_flat"), inputs));
    }
    if (2 * lj <= li && 2 * li < 5 * lj) {
      out.push_back(evaluate(id("overlap_alpha_mid"), inputs, o + ai, 2 * li - lj, false));
    } else {
      out.push_back(not_applicable(id("overlap_alpha_mid"), inputs));
    }
    out.push_back(evaluate(id("overlap_alpha_general"), inputs, o + ai, li + lj + aj, false));
    if (li >= 3 * lj) {
      out.push_back(evaluate(id("delta_sum_steep"), inputs, Rational(li - lj, 4), delta, false));
    } else {
      out.push_back(not_applicable(id("delta_sum_steep"), inputs));
    }
    out.push_back(evaluate(id("delta_sum_general"), inputs, Rational(li - lj, 6), delta, false));
  } else {
    for (const char* name : {"overlap_alpha_flat", "delta_sum_flat", "overlap_alpha_mid",
                             "overlap_alpha_general", "delta_sum_steep", "delta_sum_general"}) {
      out.push_back(not_applicable(id(name), inputs));
    }
  }

  if (li <= lj && o >= li + aj - ai) {
    i64 nearest = std::numeric_limits<i64>::max();
    for (i64 m = 1; m * li <= aj + li; ++m) nearest = std::min(nearest, std::abs(aj - m * li));
    out.push_back(evaluate(id("alpha_vs_period_multiples"), inputs, ai, nearest, false));
  } else {
    out.push_back(not_applicable(id("alpha_vs_period_multiples"), inputs));
  }
}

}  // namespace

std::vector<BoundReport> check_pair_bounds(const WordString& a, const WordString& b) {
  if (rotations_equivalent(a.word.word, b.word.word)) {
    throw std::invalid_argument("check_pair_bounds: equivalent words");
  }
  std::vector<BoundReport> out;
  if (a.word.degenerate || b.word.degenerate) {
    out.push_back(not_applicable("pair", "degenerate word"));
    return out;
  }
  const i64 o12 = ov_len(a, b), o21 = ov_len(b, a);
  const std::string inputs = describe_pair(a, b, o12, o21);
  directed_bounds(a, b, o12, "1->2", inputs, out);
  directed_bounds(b, a, o21, "2->1", inputs, out);

  // Two-cycle bound: the longer word is at least twice the shorter one.
  const i64 l1 = len(a), l2 = len(b);
  const Rational d12 = Rational(l1) + half(l2) - o12;
  const Rational d21 = Rational(l2) + half(l1) - o21;
  if (l1 >= 2 * l2) {
    out.push_back(evaluate("two_cycle_delta", inputs, half(l2), d12 + d21, false));
  } else if (l2 >= 2 * l1) {
    out.push_back(evaluate("two_cycle_delta", inputs, half(l1), d12 + d21, false));
  } else {
    out.push_back(not_applicable("two_cycle_delta", inputs));
  }
  return out;
}

std::vector<BoundReport> verify_rotation_positions(const WordString& a, const WordString& b) {
  static constexpr const char* kChecks[] = {
      "rotation_positions_max", "rotation_positions_min", "rotation_positions_long_overlap",
      "alpha_vs_overlap", "alpha_vs_overlap_alternative"};
  std::vector<BoundReport> out;
  const auto skip = [&](const std::string& why) {
    for (const char* c : kChecks) out.push_back(not_applicable(c, why));
    return out;
  };
  if (a.word.degenerate || b.word.degenerate) return skip("degenerate word");

  const i64 l1 = len(a), l2 = len(b), a1 = alpha(a), a2 = alpha(b);
  const i64 o = ov_len(a, b);
  const std::string inputs = describe_pair(a, b, o, ov_len(b, a));
  if (l1 < l2 || o < l2) return skip(inputs);

  // Orient so that w_2 is a maximal rotation.
  const SymbolOrder order = b.word.kind == RotationKind::MaxRotation ? SymbolOrder::Natural
                                                                     : SymbolOrder::Reversed;

  const std::string_view ov = std::string_view(a.text).substr(a.text.size() - o);
  const std::string& w1 = a.word.word;
  std::size_t start = 0;
  for (; start < w1.size(); ++start) {
    bool match = true;
    for (std::size_t t = 0; t < ov.size() && match; ++t) {
      match = ov[t] == w1[(start + t) % w1.size()];
    }
    if (match) break;
  }
  if (start == w1.size()) throw std::invalid_argument("x1 is not a w1-string");
  const Text w12 = rotation(w1, start + 1);

  const i64 i_max = static_cast<i64>(maximal_rotation_index(w12, order));
  const i64 i_min = static_cast<i64>(minimal_rotation_index(w12, order));
  const i64 q_max = l2 * floor_div(o - 1, l2) + 1;
  const i64 q_min = l2 * floor_div(o - a2 - 1, l2) + a2 + 1;

  std::ostringstream detail;
  detail << inputs << " w12=" << w12 << " i_max=" << i_max << " i_min=" << i_min
         << " q_max=" << q_max << " q_min=" << q_min
         << (order == SymbolOrder::Reversed ? " order=reversed" : " order=natural");
  const std::string info = detail.str();

  out.push_back(indicator(kChecks[0], info,
                          i_max == 1 || i_max == q_max || i_max > std::max(q_max, o - a2 + 1)));
  out.push_back(indicator(
      kChecks[1], info,
      i_min == a2 + 1 || i_min == q_min || i_min > std::max(q_min, o - (l2 - a2) + 1)));
  if (o >= l1) {
    out.push_back(indicator(kChecks[2], info, i_max != 1 && i_min == a2 + 1));
  } else {
    out.push_back(not_applicable(kChecks[2], info));
  }
  out.push_back(evaluate(kChecks[3], info, a1, l2 + (l1 + a2 - o), false));
  out.push_back(
      indicator(kChecks[4], info, a1 <= l1 + l2 - o || i_max == q_max || i_min == q_min));
  return out;
}

CycleQuantities cycle_quantities(const CycleFixture& f) {
  CycleQuantities q;
  const std::size_t k = f.order.size();
  for (std::size_t t = 0; t < k; ++t) {
    const WordString& from = f.nodes[f.order[t]];
    const WordString& to = f.nodes[f.order[(t + 1) % k]];
    q.periods.push_back(len(from));
    q.overlaps.push_back(k == 1 ? 0 : ov_len(from, to));
  }
  if (k > 0) q.M = *std::min_element(q.overlaps.begin(), q.overlaps.end());
  for (std::size_t t = 0; t < k; ++t) {
    q.O += q.overlaps[t];
    q.L += q.periods[t];
  }
  q.delta_O = Rational(3 * q.L, 2) - q.O;
  return q;
}

std::vector<BoundReport> check_cycle_theorems(const CycleFixture& f) {
  const CycleQuantities q = cycle_quantities(f);
  const std::size_t k = f.order.size();
  const i64 kk = static_cast<i64>(k);

  std::ostringstream desc;
  desc << "k=" << k << " l=[";
  for (std::size_t t = 0; t < k; ++t) desc << (t ? "," : "") << q.periods[t];
  desc << "] o=[";
  for (std::size_t t = 0; t < k; ++t) desc << (t ? "," : "") << q.overlaps[t];
  desc << "] M=" << q.M << " O=" << q.O << " L=" << q.L << " dO=" << to_string(q.delta_O);
  const std::string inputs = desc.str();

  std::vector<BoundReport> out;
  const Rational main_lhs = 2 * q.M + 7 * q.O;
  const Rational main_rhs = 11 * q.L;
  out.push_back(evaluate("cycle_main", inputs, main_lhs, main_rhs, false));
  out.push_back(evaluate("cycle_weak", inputs, q.M + 24 * q.O, Rational(145 * q.L, 4), false));

  if (2 * q.M - 7 * q.delta_O <= half(q.L)) {
    out.push_back(evaluate("cycle_margin_sufficient", inputs, main_lhs, main_rhs, false));
  } else {
    out.push_back(not_applicable("cycle_margin_sufficient", inputs));
  }
  if (k >= 1 && q.delta_O >= Rational(6 - kk, 2 * (7 * kk + 2)) * q.L) {
    out.push_back(evaluate("cycle_delta_sufficient", inputs, main_lhs, main_rhs, false));
  } else {
    out.push_back(not_applicable("cycle_delta_sufficient", inputs));
  }
  if (k >= 6) {
    out.push_back(evaluate("cycle_long", inputs, main_lhs, main_rhs, false));
  } else {
    out.push_back(not_applicable("cycle_long", inputs));
  }

  const bool degenerate = std::any_of(f.order.begin(), f.order.end(),
                                      [&](std::size_t v) { return f.nodes[v].word.degenerate; });
  static constexpr const char* kEdgeChecks[] = {
      "up_edge_delta",      "delta_vs_descent",      "delta_vs_span",
      "delta_vs_descent_no_consecutive_steep", "delta_vs_descent_no_steep",
      "delta_vs_min_period", "equal_periods"};
  if (k < 2 || degenerate) {
    for (const char* c : kEdgeChecks) out.push_back(not_applicable(c, inputs));
    return out;
  }

  const i64 l_max = *std::max_element(q.periods.begin(), q.periods.end());
  const i64 l_min = *std::min_element(q.periods.begin(), q.periods.end());
  i64 descent = 0;
  bool any_steep = false, consecutive_steep = false;
  std::vector<bool> steep_down(k, false);
  for (std::size_t t = 0; t < k; ++t) {
    const i64 li = q.periods[t], lj = q.periods[(t + 1) % k];
    if (li >= lj) {
      descent += li - lj;
      steep_down[t] = li >= 2 * lj;
      any_steep = any_steep || steep_down[t];
    } else {
      const Rational d = Rational(li) + half(lj) - q.overlaps[t];
      std::ostringstream e;
      e << inputs << " edge=" << t;
      out.push_back(evaluate("up_edge_delta", e.str(), Rational(li) - half(lj), d, false));
    }
  }
  for (std::size_t t = 0; t < k; ++t) {
    consecutive_steep = consecutive_steep || (steep_down[t] && steep_down[(t + 1) % k]);
  }

  out.push_back(evaluate("delta_vs_descent", inputs, Rational(descent, 12), q.delta_O, false));
  out.push_back(evaluate("delta_vs_span", inputs, Rational(l_max - l_min, 12), q.delta_O, false));
  if (!consecutive_steep) {
    out.push_back(evaluate("delta_vs_descent_no_consecutive_steep", inputs, Rational(descent, 8),
                           q.delta_O, false));
  } else {
    out.push_back(not_applicable("delta_vs_descent_no_consecutive_steep", inputs));
  }
  if (!any_steep) {
    out.push_back(
        evaluate("delta_vs_descent_no_steep", inputs, Rational(descent, 4), q.delta_O, false));
  } else {
    out.push_back(not_applicable("delta_vs_descent_no_steep", inputs));
  }
  if (2 * l_min > l_max) {
    out.push_back(evaluate("delta_vs_min_period", inputs, Rational(l_min, 4), q.delta_O, false));
  } else {
    out.push_back(not_applicable("delta_vs_min_period", inputs));
  }
  if (l_min == l_max) {
    out.push_back(evaluate("equal_periods", inputs, q.O, kk * l_min, true));
  } else {
    out.push_back(not_applicable("equal_periods", inputs));
  }
  return out;
}

// Generators -------------------------------------------------------------------

namespace {

Text run(char c, int count) { return Text(static_cast<std::size_t>(count), c); }

WordString make_node(const Text& w, std::size_t x_len) {
  NiceWord nice = nice_rotation(w);
  if (nice.word != w) throw std::logic_error("generator word is not nice: " + w);
  Text x = w_string_prefix(nice, x_len);
  return WordString{std::move(nice), std::move(x)};
}

TightForms close_forms(std::vector<std::int64_t> overlaps, std::vector<std::int64_t> periods) {
  TightForms f;
  f.M = *std::min_element(overlaps.begin(), overlaps.end());
  for (auto o : overlaps) f.O += o;
  for (auto l : periods) f.L += l;
  f.gap = 11 * f.L - (2 * f.M + 7 * f.O);
  f.overlaps = std::move(overlaps);
  f.periods = std::move(periods);
  return f;
}

}  // namespace

CycleFixture gen_tight_2cycle(int k) {
  if (k < 1) throw std::invalid_argument("gen_tight_2cycle: k >= 1");
  const Text w1 = "b" + run('a', k) + "b" + run('a', k + 1) + "b" + run('a', k + 1);
  const Text w2 = run('a', k + 1) + "b" + run('a', k) + "b";
  CycleFixture f;
  f.nodes.push_back(make_node(w1, 2 * w1.size() - 1));
  f.nodes.push_back(make_node(w2, 2 * w2.size() - 1));
  f.order = {0, 1};
  return f;
}

CycleFixture gen_tight_3cycle(int n) {
  if (n < 1) throw std::invalid_argument("gen_tight_3cycle: n >= 1");
  const Text a_n = run('a', n), a_n1 = run('a', n + 1);
  const Text w1 = "b" + a_n + "b" + a_n1 + "b" + a_n + "b" + a_n1 + "b" + a_n1 + "b" + a_n1;
  const Text w2 = a_n1 + "b" + a_n1 + "b" + a_n + "b" + a_n1 + "b" + a_n + "b";
  const Text w3 = a_n1 + "b" + a_n + "b";
  CycleFixture f;
  f.nodes.push_back(make_node(w1, 2 * w1.size() - 1));
  const std::size_t alpha2 = nice_rotation(w2).alpha;
  f.nodes.push_back(make_node(w2, 2 * w2.size() + alpha2 - 1));
  f.nodes.push_back(make_node(w3, 4 * w3.size() - 1));
  f.order = {0, 1, 2};
  return f;
}

TightForms tight_2cycle_forms(int k) {
  return close_forms({4 * k + 5, 3 * k + 4}, {3 * k + 5, 2 * k + 3});
}

TightForms tight_3cycle_forms(int n) {
  return close_forms({8 * n + 12, 6 * n + 8, 5 * n + 7}, {6 * n + 10, 5 * n + 8, 2 * n + 3});
}

GreedyPathFamily gen_greedy_path(int n) {
  if (n < 3) throw std::invalid_argument("gen_greedy_path: n >= 3");
  GreedyPathFamily fam;
  for (int i = 3; i <= n; ++i) {
    const int k = (i + 1) / 2;
    Text w, x;
    if (i % 2 == 0) {
      w = run('b', k) + run('a', k);
      x = run('b', k) + run('a', k) + run('b', k) + run('a', k - 1);
    } else {
      w = run('a', k - 1) + run('b', k);
      x = run('a', k - 1) + run('b', k) + run('a', k - 1) + run('b', k - 1);
    }
    NiceWord nice = nice_rotation(w);
    if (nice.word != w) throw std::logic_error("generator word is not nice: " + w);
    fam.instance.strings.push_back(x);
    fam.nodes.push_back(WordString{std::move(nice), std::move(x)});
    fam.period_sum += i;
  }
  for (int i = n - 1; i >= 3; --i) {
    fam.expected.push_back((3 * i) / 2);
    fam.expected_total += (3 * i) / 2;
  }
  return fam;
}

NiceWord gen_random_nice(Rng& rng, std::size_t min_len, std::size_t max_len,
                         std::size_t alphabet_size) {
  if (alphabet_size < 2 || alphabet_size > 26) throw std::invalid_argument("alphabet size");
  if (min_len < 2 || max_len < min_len) throw std::invalid_argument("length range");
  std::uniform_int_distribution<std::size_t> length(min_len, max_len);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(alphabet_size) - 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Text s(length(rng), 'a');
    for (char& c : s) c = static_cast<char>('a' + letter(rng));
    if (is_primitive(s)) return nice_rotation(s);
  }
  throw std::runtime_error("gen_random_nice: too many non-primitive draws");
}

NiceWord gen_random_nice(std::uint64_t seed, std::size_t min_len, std::size_t max_len,
                         std::size_t alphabet_size) {
  Rng rng(seed);
  return gen_random_nice(rng, min_len, max_len, alphabet_size);
}

}  // namespace superstring
