#ifndef BERGEHAM_HARNESS_HPP
#define BERGEHAM_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bergeham/berge.hpp"
#include "bergeham/hypergraph.hpp"

namespace bergeham {

enum class CampaignKind { conjecture_ore, covering_theorem, main_theorem, invariant_suite };

std::string to_string(CampaignKind k);
CampaignKind campaign_kind_from_string(const std::string& s);

struct Campaign {
  CampaignKind kind = CampaignKind::conjecture_ore;
  int n_min = 6;
  int n_max = 9;
  int d0 = 1;
  long long samples = 100;
  uint64_t seed = 1;
  long long budget_nodes = 100'000'000;
  // exact decisions are required below this bound (main_theorem is exempt)
  int guard_max = 12;
};

/// Exploded record of a sample that contradicted the campaign expectation;
/// self-contained so it can be re-verified from disk.
struct Counterexample {
  int n = 0;
  long long sample_index = 0;
  uint64_t sample_seed = 0;
  std::string hg_text;  // canonical .hg form of the instance
  OreReport ore;
  std::string verdict_status;
  std::string detail;
};

struct CampaignReport {
  Campaign campaign;
  struct PerN {
    int n = 0;
    long long sampled = 0;
    long long ore_satisfied = 0;
    long long hamiltonian = 0;
    long long not_hamiltonian = 0;
    long long timeouts = 0;
    // smallest non-covering Ore margin (min degree sum - n) seen at this n
    std::optional<long long> min_margin;
  };
  std::vector<PerN> per_n;
  std::vector<Counterexample> counterexamples;
  std::vector<uint64_t> failure_seeds;  // seeds of timed-out / failed samples
  double wall_seconds = 0.0;            // not part of the canonical json form

  // 0 expectation met, 3 counterexample recorded, 4 inconclusive
  int exit_code() const;
};

/// Runs the campaign's samples (deterministic per (seed, index)) across the
/// given number of worker threads; the report does not depend on parallelism.
CampaignReport run_campaign(const Campaign& c, int parallelism = 1);

/// Flat per-n table: n, sampled, hamiltonian, timeouts, min_margin.
std::string report_csv(const CampaignReport& r);

/// Writes instance.hg + claim.json under dir (created if needed).
void write_certificate(const Counterexample& ce, const std::string& dir);

struct CertVerification {
  bool ok = false;
  std::string detail;
};

/// Re-runs ore_report and the exact decision (plus the brute-force oracle
/// when the instance fits its guard) against the stored claims.
CertVerification verify_certificate(const std::string& dir,
                                    long long budget_nodes = 100'000'000);

/// Definition-level re-check of the machinery invariants on one instance
/// against its maximum Berge cycle; returns a description of the first
/// violated invariant, if any.
std::optional<std::string> run_invariant_battery(const Hypergraph& h, const BergeCycle& max_cycle,
                                                 int d0);

}  // namespace bergeham

#endif
