#pragma once

// Seeded fuzz and exactness campaigns over the bound checkers. Every trial
// draws from its own generator seeded by (seed, trial index, suite), so the
// merged result does not depend on the number of workers.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superstring/bounds.hpp"

namespace superstring {

struct CampaignOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 10000;
  std::size_t workers = 1;
  bool keep_reports = false;  // keep every applicable report, not only violations
};

struct CheckTally {
  std::size_t run = 0;
  std::size_t held = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;  // not applicable
};

struct CampaignResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t run = 0, held = 0, failed = 0, skipped = 0;
  std::map<std::string, CheckTally> tallies;  // keyed by check id without direction suffix
  std::vector<BoundReport> violations;
  std::vector<BoundReport> reports;

  void record(const BoundReport& r, bool keep);
  void merge(const CampaignResult& other);
  bool ok() const { return failed == 0; }
};

/// Random non-equivalent nice-word pairs with w-string extensions of
/// 1 to 4 periods. Runs the pair bounds and the rotation-position checks in
/// both directions.
CampaignResult run_pair_campaign(const CampaignOptions& opts);

/// Random fixtures of 2 to 6 pairwise non-equivalent nice words.
CampaignResult run_fixture_campaign(const CampaignOptions& opts);

/// Random instances (2..8 strings of length 1..12 over 2 or 3 letters):
/// every cycle of the maximum cover over the representatives, plus the
/// structural facts the reduction relies on.
CampaignResult run_instance_campaign(const CampaignOptions& opts);

/// Fixture campaign followed by the instance campaign.
CampaignResult run_cycle_campaign(const CampaignOptions& opts);

/// Closed forms of the tight families for every parameter in 1..max_param
/// and the greedy path family for n in 3..max_param.
CampaignResult run_tight_campaign(int max_param = 64, bool keep_reports = false);

/// `n` strings of length [min_len, max_len] over the first `alphabet_size`
/// letters; not normalized.
std::vector<Text> random_strings(Rng& rng, std::size_t n, std::size_t alphabet_size,
                                 std::size_t min_len, std::size_t max_len);

/// Generator for trial `trial` of a campaign: independent of worker layout.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial, std::uint32_t salt);

}  // namespace superstring
