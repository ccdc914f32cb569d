#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "twoadic/verdict.hpp"

namespace twoadic {

enum class Claim {
  lemma1,
  lemma2,
  lemma3,
  lemma4_theorem5,
  theorem6,
  order_oracle,
  selftest_counterexample,  // flags every tuple; exercises the exit-code path
};

std::string_view to_string(Claim c);
/// Accepts both `lemma4_theorem5` and `lemma4-theorem5` spellings.
std::optional<Claim> parse_claim(std::string_view name);

struct IntRange {
  std::int64_t min = 0;
  std::int64_t max = 0;

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Per-modulus claims iterate the odd canonical residues of [1, 2^n - 1],
/// intersected with g_range when present. theorem6 iterates literal odd
/// g in g_range minus {-1, 1} and w in w_range minus {0}; with
/// n_relative_to_bound the n range is an offset from vanishing_bound(g, w).
struct SweepSpec {
  Claim claim = Claim::lemma1;
  std::optional<IntRange> g_range;
  IntRange n_range{1, 1};
  bool n_relative_to_bound = false;
  std::optional<IntRange> w_range;
  unsigned jobs = 1;
};

/// Throws UsageError describing the first problem found.
void validate(const SweepSpec& spec);

struct SweepException {
  std::int64_t g = 0;
  unsigned long n = 0;
  std::optional<std::int64_t> w;
  Verdict verdict = Verdict::counterexample;
  std::string observed;
  std::string expected;

  friend bool operator==(const SweepException&, const SweepException&) = default;
};

struct Tallies {
  std::uint64_t holds = 0;
  std::uint64_t hypothesis_not_met = 0;
  std::uint64_t paper_exception = 0;
  std::uint64_t counterexample = 0;

  void add(Verdict v);
  Tallies& operator+=(const Tallies& other);
  std::uint64_t sum() const { return holds + hypothesis_not_met + paper_exception + counterexample; }
  friend bool operator==(const Tallies&, const Tallies&) = default;
};

struct SweepReport {
  SweepSpec spec;
  std::uint64_t cases_checked = 0;
  Tallies tallies;
  std::vector<SweepException> exceptions;  // sorted by (n, g, w)
  std::chrono::milliseconds wall_time{0};
};

/// Evaluates the claim on every tuple of the domain using spec.jobs workers.
/// The report does not depend on the worker count apart from wall_time.
SweepReport run_sweep(const SweepSpec& spec);

enum class ReportFormat { json, csv, table };
std::optional<ReportFormat> parse_format(std::string_view name);

nlohmann::ordered_json report_to_json(const SweepReport& report);
std::string format_report(const SweepReport& report, ReportFormat fmt);

/// 0 without counterexamples, 1 otherwise; with strict_paper a
/// paper_exception also yields 1.
int sweep_exit_code(const SweepReport& report, bool strict_paper);

}  // namespace twoadic
