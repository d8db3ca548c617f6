#include "superstring/campaign.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "superstring/pipeline.hpp"

namespace superstring {

namespace {

constexpr std::uint32_t kPairSalt = 0x70616972;     // "pair"
constexpr std::uint32_t kFixtureSalt = 0x63796331;  // "cyc1"
constexpr std::uint32_t kInstanceSalt = 0x696e7374;  // "inst"

std::string base_id(const std::string& check) {
  const auto bracket = check.find('[');
  return bracket == std::string::npos ? check : check.substr(0, bracket);
}

// Runs `trial(rng, index)` for every index, spreading indices over workers.
// Tallies are sums and the kept reports are concatenated in trial order.
template <typename Trial>
CampaignResult run_trials(const std::string& suite, const CampaignOptions& opts,
                          std::uint32_t salt, Trial trial) {
  const std::size_t workers = std::max<std::size_t>(1, std::min(opts.workers, opts.trials));
  std::vector<CampaignResult> partial(workers);
  std::vector<std::vector<BoundReport>> per_trial(opts.trials);
  std::vector<std::string> errors(workers);

  auto work = [&](std::size_t w) {
    try {
      for (std::size_t t = w; t < opts.trials; t += workers) {
        Rng rng = trial_rng(opts.seed, t, salt);
        CampaignResult local;
        for (const BoundReport& r : trial(rng, t)) local.record(r, opts.keep_reports);
        per_trial[t] = opts.keep_reports ? std::move(local.reports) : std::move(local.violations);
        local.reports.clear();
        local.violations.clear();
        partial[w].merge(local);
      }
    } catch (const std::exception& e) {
      errors[w] = e.what();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw std::runtime_error(suite + " campaign: " + e);
  }

  CampaignResult out;
  out.suite = suite;
  out.seed = opts.seed;
  out.trials = opts.trials;
  for (const auto& p : partial) out.merge(p);
  for (auto& reports : per_trial) {
    for (auto& r : reports) {
      if (!r.holds) out.violations.push_back(r);
      if (opts.keep_reports) out.reports.push_back(std::move(r));
    }
  }
  return out;
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// A nice word whose periodic structure shares a long prefix with `base`.
std::optional<NiceWord> correlated_word(Rng& rng, const NiceWord& base, std::size_t alphabet) {
  const std::size_t l = base.length();
  Text s = w_string_prefix(base, pick(rng, 1, 3 * l));
  const std::size_t tail = pick(rng, 0, 3);
  for (std::size_t t = 0; t < tail; ++t) {
    s.push_back(static_cast<char>('a' + pick(rng, 0, alphabet - 1)));
  }
  if (s.size() < 2 || !is_primitive(s) || rotations_equivalent(s, base.word)) return std::nullopt;
  return nice_rotation(s);
}

WordString with_extension(Rng& rng, NiceWord w) {
  const std::size_t l = w.length();
  Text x = w_string_prefix(w, pick(rng, l, 4 * l));
  return WordString{std::move(w), std::move(x)};
}

// Among extensions of `from` of length [l, 4l], the one with the largest
// overlap into `to` (shortest on ties).
void maximize_overlap(WordString& from, const WordString& to) {
  const std::size_t l = from.word.length();
  const Text full = w_string_prefix(from.word, 4 * l);
  std::size_t best_len = l, best = 0;
  for (std::size_t n = l; n <= 4 * l; ++n) {
    const std::size_t o = overlap(std::string_view(full).substr(0, n), to.text).size();
    if (o > best) {
      best = o;
      best_len = n;
    }
  }
  from.text = full.substr(0, best_len);
}

std::pair<WordString, WordString> random_pair(Rng& rng) {
  const std::size_t alphabet = coin(rng, 0.7) ? 2 : 3;
  for (;;) {
    NiceWord w2 = gen_random_nice(rng, 2, 10, alphabet);
    std::optional<NiceWord> w1;
    if (coin(rng, 0.7)) {
      w1 = correlated_word(rng, w2, alphabet);
    } else {
      w1 = gen_random_nice(rng, 2, 12, alphabet);
      if (rotations_equivalent(w1->word, w2.word)) w1.reset();
    }
    if (!w1) continue;
    if (coin(rng, 0.5)) std::swap(*w1, w2);
    WordString b = with_extension(rng, std::move(w2));
    WordString a = with_extension(rng, std::move(*w1));
    if (coin(rng, 0.6)) maximize_overlap(a, b);
    return {std::move(a), std::move(b)};
  }
}

CycleFixture random_fixture(Rng& rng) {
  const std::size_t k = pick(rng, 2, 6);
  const std::size_t alphabet = coin(rng, 0.7) ? 2 : 3;
  CycleFixture f;
  std::vector<NiceWord> words;
  while (words.size() < k) {
    std::optional<NiceWord> w;
    if (!words.empty() && coin(rng, 0.6)) {
      w = correlated_word(rng, words[pick(rng, 0, words.size() - 1)], alphabet);
    } else {
      w = gen_random_nice(rng, 2, 10, alphabet);
    }
    if (!w) continue;
    const bool fresh = std::none_of(words.begin(), words.end(), [&](const NiceWord& v) {
      return rotations_equivalent(v.word, w->word);
    });
    if (fresh) words.push_back(std::move(*w));
  }
  for (auto& w : words) f.nodes.push_back(with_extension(rng, std::move(w)));
  f.order.resize(k);
  for (std::size_t i = 0; i < k; ++i) f.order[i] = i;
  std::shuffle(f.order.begin(), f.order.end(), rng);
  if (coin(rng, 0.5)) {
    for (std::size_t t = 0; t < k; ++t) {
      maximize_overlap(f.nodes[f.order[t]], f.nodes[f.order[(t + 1) % k]]);
    }
  }
  return f;
}

BoundReport exact_match(std::string check, std::string inputs, std::int64_t got,
                        std::int64_t want) {
  std::ostringstream s;
  s << inputs << " got=" << got << " want=" << want;
  return evaluate(std::move(check), s.str(), got > want ? got - want : want - got, 0, false);
}

BoundReport flag(std::string check, std::string inputs, bool ok) {
  return evaluate(std::move(check), std::move(inputs), ok ? 0 : 1, 0, false);
}

std::string describe_instance(const Instance& inst) {
  std::ostringstream s;
  s << "strings=[";
  for (std::size_t i = 0; i < inst.size(); ++i) s << (i ? "," : "") << inst.strings[i];
  s << "]";
  return s.str();
}

std::vector<BoundReport> instance_trial(Rng& rng) {
  Instance inst;
  do {
    const std::size_t alphabet = coin(rng, 0.5) ? 2 : 3;
    const auto raw = random_strings(rng, pick(rng, 2, 8), alphabet, 1, 12);
    inst.strings = normalize_strings(raw).survivors;
  } while (inst.size() < 2);

  const std::string desc = describe_instance(inst);
  std::vector<BoundReport> out;
  const RepresentativeCover rc = representative_cover(inst);

  std::int64_t period_total = 0;
  bool distinct = true, contained = true;
  for (std::size_t i = 0; i < rc.reps.size(); ++i) {
    const Representative& r = rc.reps[i];
    period_total += r.l;
    contained = contained && is_w_string(r.text, r.nice);
    for (std::size_t m : r.members) {
      contained = contained && r.text.find(inst.strings[m]) != Text::npos;
    }
    for (std::size_t j = 0; j < i; ++j) {
      distinct = distinct && !rotations_equivalent(r.nice.word, rc.reps[j].nice.word);
    }
  }
  out.push_back(flag("representatives_non_equivalent", desc, distinct));
  out.push_back(flag("representatives_contain_members", desc, contained));
  out.push_back(exact_match("representative_periods_sum", desc, period_total,
                            min_cycle_cover(prefix_matrix(inst.strings)).total_weight));

  for (std::size_t c = 0; c < rc.cover.cycles.size(); ++c) {
    CycleFixture f;
    for (const auto& r : rc.reps) f.nodes.push_back(WordString{r.nice, r.text});
    f.order = rc.cover.cycles[c];
    const CycleQuantities q = cycle_quantities(f);
    const CycleStats& st = rc.stats[c];
    out.push_back(flag("cover_stats_match", desc,
                       q.M == st.M && q.O == st.O && q.L == st.L && q.delta_O == st.delta_O));
    for (auto& r : check_cycle_theorems(f)) {
      r.inputs = desc + " " + r.inputs;
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

void CampaignResult::record(const BoundReport& r, bool keep) {
  CheckTally& t = tallies[base_id(r.check)];
  if (!r.applicable) {
    ++skipped;
    ++t.skipped;
    return;
  }
  ++run;
  ++t.run;
  if (r.holds) {
    ++held;
    ++t.held;
  } else {
    ++failed;
    ++t.failed;
    violations.push_back(r);
  }
  if (keep) reports.push_back(r);
}

void CampaignResult::merge(const CampaignResult& other) {
  run += other.run;
  held += other.held;
  failed += other.failed;
  skipped += other.skipped;
  for (const auto& [id, t] : other.tallies) {
    CheckTally& mine = tallies[id];
    mine.run += t.run;
    mine.held += t.held;
    mine.failed += t.failed;
    mine.skipped += t.skipped;
  }
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  reports.insert(reports.end(), other.reports.begin(), other.reports.end());
}

Rng trial_rng(std::uint64_t seed, std::uint64_t trial, std::uint32_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                    salt};
  return Rng(seq);
}

std::vector<Text> random_strings(Rng& rng, std::size_t n, std::size_t alphabet_size,
                                 std::size_t min_len, std::size_t max_len) {
  if (alphabet_size < 1 || alphabet_size > 26) throw std::invalid_argument("alphabet size");
  if (min_len < 1 || max_len < min_len) throw std::invalid_argument("length range");
  std::vector<Text> out(n);
  for (auto& s : out) {
    s.resize(pick(rng, min_len, max_len));
    for (char& c : s) c = static_cast<char>('a' + pick(rng, 0, alphabet_size - 1));
  }
  return out;
}

CampaignResult run_pair_campaign(const CampaignOptions& opts) {
  return run_trials("pairs", opts, kPairSalt, [](Rng& rng, std::size_t) {
    auto [a, b] = random_pair(rng);
    std::vector<BoundReport> out = check_pair_bounds(a, b);
    for (auto& r : verify_rotation_positions(a, b)) out.push_back(std::move(r));
    for (auto& r : verify_rotation_positions(b, a)) out.push_back(std::move(r));
    return out;
  });
}

CampaignResult run_fixture_campaign(const CampaignOptions& opts) {
  return run_trials("fixtures", opts, kFixtureSalt, [](Rng& rng, std::size_t) {
    return check_cycle_theorems(random_fixture(rng));
  });
}

CampaignResult run_instance_campaign(const CampaignOptions& opts) {
  return run_trials("instances", opts, kInstanceSalt,
                    [](Rng& rng, std::size_t) { return instance_trial(rng); });
}

CampaignResult run_cycle_campaign(const CampaignOptions& opts) {
  CampaignResult out = run_fixture_campaign(opts);
  out.merge(run_instance_campaign(opts));
  out.suite = "cycles";
  return out;
}

CampaignResult run_tight_campaign(int max_param, bool keep_reports) {
  CampaignResult out;
  out.suite = "tight";
  auto take = [&](const BoundReport& r) { out.record(r, keep_reports); };

  auto check_family = [&](const std::string& family, int p, const CycleFixture& f,
                          const TightForms& forms) {
    const CycleQuantities q = cycle_quantities(f);
    const std::string inputs = family + " param=" + std::to_string(p);
    for (std::size_t t = 0; t < forms.overlaps.size(); ++t) {
      take(exact_match(family + "_overlap", inputs + " edge=" + std::to_string(t), q.overlaps[t],
                       forms.overlaps[t]));
      take(exact_match(family + "_period", inputs + " node=" + std::to_string(t), q.periods[t],
                       forms.periods[t]));
    }
    take(exact_match(family + "_gap", inputs, 11 * q.L - (2 * q.M + 7 * q.O), forms.gap));
    for (const auto& r : check_cycle_theorems(f)) take(r);
    for (std::size_t i = 0; i < f.nodes.size(); ++i) {
      for (std::size_t j = 0; j < f.nodes.size(); ++j) {
        if (i == j) continue;
        if (i < j) {
          for (const auto& r : check_pair_bounds(f.nodes[i], f.nodes[j])) take(r);
        }
        for (const auto& r : verify_rotation_positions(f.nodes[i], f.nodes[j])) take(r);
      }
    }
    return q;
  };

  for (int k = 1; k <= max_param; ++k) {
    const CycleQuantities q = check_family("tight2", k, gen_tight_2cycle(k), tight_2cycle_forms(k));
    if (k == max_param) {
      // (2M + 7O) / 11L approaches 1.
      take(evaluate("tight2_ratio", "tight2 param=" + std::to_string(k), Rational(995, 1000),
                    Rational(2 * q.M + 7 * q.O, 11 * q.L), true));
    }
  }
  for (int n = 1; n <= max_param; ++n) {
    check_family("tight3", n, gen_tight_3cycle(n), tight_3cycle_forms(n));
  }
  for (int n = 4; n <= max_param; ++n) {
    const GreedyPathFamily fam = gen_greedy_path(n);
    const std::string inputs = "greedy param=" + std::to_string(n);
    std::int64_t total = 0;
    // nodes hold x_3..x_n; the path runs x_n -> x_(n-1) -> ... -> x_3.
    for (std::size_t t = 0; t + 1 < fam.nodes.size(); ++t) {
      const std::size_t hi = fam.nodes.size() - 1 - t;
      const auto o = static_cast<std::int64_t>(
          overlap(fam.nodes[hi].text, fam.nodes[hi - 1].text).size());
      total += o;
      take(exact_match("greedy_overlap", inputs + " i=" + std::to_string(hi + 2), o,
                       fam.expected[t]));
    }
    take(exact_match("greedy_total", inputs, total, fam.expected_total));
  }
  return out;
}

}  // namespace superstring
