#include "twoadic/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "twoadic/core_arith.hpp"
#include "twoadic/errors.hpp"
#include "twoadic/exp_sum.hpp"
#include "twoadic/half_order.hpp"
#include "twoadic/order_engine.hpp"

namespace twoadic {

namespace {

constexpr std::pair<Claim, std::string_view> kClaimNames[] = {
    {Claim::lemma1, "lemma1"},
    {Claim::lemma2, "lemma2"},
    {Claim::lemma3, "lemma3"},
    {Claim::lemma4_theorem5, "lemma4_theorem5"},
    {Claim::theorem6, "theorem6"},
    {Claim::order_oracle, "order_oracle"},
    {Claim::selftest_counterexample, "selftest_counterexample"},
};

// Largest n for which the full canonical residue range may be swept.
constexpr std::int64_t kUnboundedWindowMaxN = 32;
constexpr std::int64_t kBlockSize = 4096;  // odd g values per work item

bool is_per_modulus(Claim c) { return c != Claim::theorem6; }

unsigned min_n_for(Claim c) {
  switch (c) {
    case Claim::lemma2:
    case Claim::lemma3:
    case Claim::lemma4_theorem5:
      return 3;
    default:
      return 1;
  }
}

std::int64_t round_up_odd(std::int64_t x) { return (x % 2 == 0) ? x + 1 : x; }

bool has_admissible_g(const IntRange& r) {
  for (std::int64_t g = round_up_odd(r.min); g <= r.max; g += 2) {
    if (g != 1 && g != -1) return true;
    if (g > 1) break;
  }
  return false;
}

/// Odd g in [g_lo, g_hi], n in [n_lo, n_hi] (theorem6 blocks carry a single g and w).
struct Block {
  std::int64_t g_lo = 0;
  std::int64_t g_hi = 0;
  std::int64_t n_lo = 0;
  std::int64_t n_hi = 0;
  std::optional<std::int64_t> w;
};

std::vector<Block> plan_blocks(const SweepSpec& spec) {
  std::vector<Block> blocks;
  if (is_per_modulus(spec.claim)) {
    for (std::int64_t n = spec.n_range.min; n <= spec.n_range.max; ++n) {
      std::int64_t lo = 1;
      std::int64_t hi = n < 63 ? (std::int64_t{1} << n) - 1 : INT64_MAX;
      if (spec.g_range) {
        lo = std::max(lo, spec.g_range->min);
        hi = std::min(hi, spec.g_range->max);
      }
      lo = round_up_odd(lo);
      for (std::int64_t start = lo; start <= hi;) {
        const std::int64_t span = 2 * (kBlockSize - 1);
        const std::int64_t end = (hi - start <= span) ? hi : start + span;
        blocks.push_back({start, end, n, n, std::nullopt});
        if (end == hi) break;
        start = end + 2;
      }
    }
    return blocks;
  }
  for (std::int64_t g = round_up_odd(spec.g_range->min); g <= spec.g_range->max; g += 2) {
    if (g == 1 || g == -1) continue;
    for (std::int64_t w = spec.w_range->min; w <= spec.w_range->max; ++w) {
      if (w == 0) continue;
      std::int64_t n_lo = spec.n_range.min;
      std::int64_t n_hi = spec.n_range.max;
      if (spec.n_relative_to_bound) {
        const auto bound = static_cast<std::int64_t>(vanishing_bound(OddInteger(g), BigInt(w)));
        n_lo += bound;
        n_hi += bound;
      }
      blocks.push_back({g, g, std::max<std::int64_t>(n_lo, 1), n_hi, w});
    }
  }
  return blocks;
}

BigInt big(std::int64_t x) { return BigInt(static_cast<long>(x)); }

/// Nullopt when the tuple falls outside the checker's precondition.
std::optional<CheckResult> evaluate(Claim claim, std::int64_t g, std::int64_t n,
                                    std::optional<std::int64_t> w) {
  const OddInteger odd(big(g));
  const PowerOfTwoModulus modulus(n);
  switch (claim) {
    case Claim::lemma1:
      return check_lemma1(odd, modulus);
    case Claim::lemma2:
    case Claim::lemma3:
    case Claim::lemma4_theorem5:
      if (canonical_residue(odd.value(), modulus).value == 1) return std::nullopt;
      if (claim == Claim::lemma2) return check_lemma2(odd, modulus);
      if (claim == Claim::lemma3) return check_lemma3(odd, modulus);
      return check_lemma4_theorem5(odd, modulus);
    case Claim::order_oracle: {
      const OrderRecord naive = order_naive(odd, modulus);
      const OrderRecord fast = order_fast(odd, modulus);
      if (naive.omega == fast.omega) return CheckResult::holds();
      return CheckResult::violation(Verdict::counterexample, "fast omega = " + to_string(fast.omega),
                                    "naive omega = " + to_string(naive.omega));
    }
    case Claim::theorem6:
      return check_theorem6(odd, big(*w), modulus);
    case Claim::selftest_counterexample:
      return CheckResult::violation(Verdict::counterexample, "injected", "none");
  }
  return std::nullopt;
}

struct Partial {
  Tallies tallies;
  std::vector<SweepException> exceptions;
};

void run_block(const SweepSpec& spec, const Block& block, Partial& out) {
  for (std::int64_t n = block.n_lo; n <= block.n_hi; ++n) {
    for (std::int64_t g = block.g_lo; g <= block.g_hi; g += 2) {
      const auto result = evaluate(spec.claim, g, n, block.w);
      if (result) {
        out.tallies.add(result->verdict);
        if (result->verdict == Verdict::paper_exception ||
            result->verdict == Verdict::counterexample) {
          out.exceptions.push_back({g, static_cast<unsigned long>(n), block.w, result->verdict,
                                    std::string(to_string(result->verdict)) + ": " +
                                        result->observed,
                                    result->expected});
        }
      }
      if (block.g_hi - g < 2) break;
    }
  }
}

nlohmann::ordered_json optional_int(const std::optional<std::int64_t>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string_view to_string(Claim c) {
  for (const auto& [claim, name] : kClaimNames) {
    if (claim == c) return name;
  }
  return "unknown";
}

std::optional<Claim> parse_claim(std::string_view name) {
  std::string normalized(name);
  std::replace(normalized.begin(), normalized.end(), '-', '_');
  for (const auto& [claim, claim_name] : kClaimNames) {
    if (claim_name == normalized) return claim;
  }
  return std::nullopt;
}

std::optional<ReportFormat> parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "table") return ReportFormat::table;
  return std::nullopt;
}

void Tallies::add(Verdict v) {
  switch (v) {
    case Verdict::holds: ++holds; break;
    case Verdict::hypothesis_not_met: ++hypothesis_not_met; break;
    case Verdict::paper_exception: ++paper_exception; break;
    case Verdict::counterexample: ++counterexample; break;
  }
}

Tallies& Tallies::operator+=(const Tallies& o) {
  holds += o.holds;
  hypothesis_not_met += o.hypothesis_not_met;
  paper_exception += o.paper_exception;
  counterexample += o.counterexample;
  return *this;
}

void validate(const SweepSpec& spec) {
  const std::string claim(to_string(spec.claim));
  if (spec.jobs == 0) throw UsageError("--jobs must be positive");
  if (spec.n_range.min > spec.n_range.max) throw UsageError("empty n range");
  if (spec.g_range && spec.g_range->min > spec.g_range->max) throw UsageError("empty g range");
  if (spec.w_range && spec.w_range->min > spec.w_range->max) throw UsageError("empty w range");

  if (spec.claim == Claim::theorem6) {
    if (!spec.g_range) throw UsageError("theorem6 requires --g-min/--g-max");
    if (!spec.w_range) throw UsageError("theorem6 requires --w-min/--w-max");
    if (!has_admissible_g(*spec.g_range)) {
      throw UsageError("g range contains no odd g outside {-1, 1}");
    }
    if (spec.w_range->min == 0 && spec.w_range->max == 0) {
      throw UsageError("w range contains no non-zero w");
    }
    if (!spec.n_relative_to_bound && spec.n_range.min < 1) {
      throw UsageError("n must be >= 1");
    }
    if (spec.n_range.max > static_cast<std::int64_t>(kDefaultMaxExponent)) {
      throw UsageError("n exceeds the modulus exponent limit");
    }
    return;
  }

  if (spec.w_range) throw UsageError("a w range is only valid for theorem6");
  if (spec.n_relative_to_bound) throw UsageError("--n-relative is only valid for theorem6");
  if (spec.n_range.min < min_n_for(spec.claim)) {
    throw UsageError(claim + " requires n >= " + std::to_string(min_n_for(spec.claim)));
  }
  // lemma1 also looks at 2^(n+1).
  if (spec.n_range.max >= static_cast<std::int64_t>(kDefaultMaxExponent)) {
    throw UsageError("n exceeds the modulus exponent limit");
  }
  if (!spec.g_range && spec.n_range.max > kUnboundedWindowMaxN) {
    throw UsageError("sweeping every residue needs n <= 32; give --g-min/--g-max for larger n");
  }
}

SweepReport run_sweep(const SweepSpec& spec) {
  validate(spec);
  const auto started = std::chrono::steady_clock::now();
  const std::vector<Block> blocks = plan_blocks(spec);

  std::vector<Partial> partials(std::max<std::size_t>(1, std::min<std::size_t>(spec.jobs, blocks.size())));
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::size_t error_block = blocks.size();
  std::exception_ptr error;

  auto worker = [&](Partial& out) {
    for (std::size_t i = next.fetch_add(1); i < blocks.size(); i = next.fetch_add(1)) {
      try {
        run_block(spec, blocks[i], out);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (i < error_block) {
          error_block = i;
          error = std::current_exception();
        }
      }
    }
  };

  if (partials.size() == 1) {
    worker(partials.front());
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(partials.size());
    for (auto& p : partials) pool.emplace_back(worker, std::ref(p));
  }
  if (error) std::rethrow_exception(error);

  SweepReport report;
  report.spec = spec;
  for (auto& p : partials) {
    report.tallies += p.tallies;
    std::move(p.exceptions.begin(), p.exceptions.end(), std::back_inserter(report.exceptions));
  }
  std::sort(report.exceptions.begin(), report.exceptions.end(),
            [](const SweepException& a, const SweepException& b) {
              return std::tie(a.n, a.g, a.w) < std::tie(b.n, b.g, b.w);
            });
  report.cases_checked = report.tallies.sum();
  report.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

nlohmann::ordered_json report_to_json(const SweepReport& r) {
  using json = nlohmann::ordered_json;
  const SweepSpec& s = r.spec;
  json domain = {
      {"g_min", optional_int(s.g_range ? std::optional(s.g_range->min) : std::nullopt)},
      {"g_max", optional_int(s.g_range ? std::optional(s.g_range->max) : std::nullopt)},
      {"n_min", s.n_range.min},
      {"n_max", s.n_range.max},
      {"n_relative", s.n_relative_to_bound},
      {"w_min", optional_int(s.w_range ? std::optional(s.w_range->min) : std::nullopt)},
      {"w_max", optional_int(s.w_range ? std::optional(s.w_range->max) : std::nullopt)},
  };
  json exceptions = json::array();
  for (const auto& e : r.exceptions) {
    exceptions.push_back({{"g", e.g},
                          {"n", e.n},
                          {"w", optional_int(e.w)},
                          {"observed", e.observed},
                          {"expected", e.expected}});
  }
  return {
      {"claim", to_string(s.claim)},
      {"domain", std::move(domain)},
      {"cases_checked", r.cases_checked},
      {"tallies",
       {{"holds", r.tallies.holds},
        {"hypothesis_not_met", r.tallies.hypothesis_not_met},
        {"paper_exception", r.tallies.paper_exception},
        {"counterexample", r.tallies.counterexample}}},
      {"exceptions", std::move(exceptions)},
      {"wall_time_ms", r.wall_time.count()},
  };
}

std::string format_report(const SweepReport& r, ReportFormat fmt) {
  std::ostringstream out;
  switch (fmt) {
    case ReportFormat::json:
      out << report_to_json(r).dump(2) << '\n';
      break;
    case ReportFormat::csv:
      out << "claim,g,n,w,verdict,observed,expected\n";
      for (const auto& e : r.exceptions) {
        out << to_string(r.spec.claim) << ',' << e.g << ',' << e.n << ','
            << (e.w ? std::to_string(*e.w) : std::string()) << ',' << to_string(e.verdict) << ','
            << csv_field(e.observed) << ',' << csv_field(e.expected) << '\n';
      }
      break;
    case ReportFormat::table: {
      out << "claim               " << to_string(r.spec.claim) << '\n'
          << "cases checked       " << r.cases_checked << '\n'
          << "holds               " << r.tallies.holds << '\n'
          << "hypothesis not met  " << r.tallies.hypothesis_not_met << '\n'
          << "paper exception     " << r.tallies.paper_exception << '\n'
          << "counterexample      " << r.tallies.counterexample << '\n'
          << "wall time (ms)      " << r.wall_time.count() << '\n';
      if (!r.exceptions.empty()) {
        out << '\n' << "     n                g       w  observed / expected\n";
        for (const auto& e : r.exceptions) {
          std::string w = e.w ? std::to_string(*e.w) : "-";
          out << std::string(6 - std::min<std::size_t>(6, std::to_string(e.n).size()), ' ') << e.n
              << std::string(17 - std::min<std::size_t>(17, std::to_string(e.g).size()), ' ') << e.g
              << std::string(8 - std::min<std::size_t>(8, w.size()), ' ') << w << "  "
              << e.observed << " / " << e.expected << '\n';
        }
      }
      break;
    }
  }
  return out.str();
}

int sweep_exit_code(const SweepReport& report, bool strict_paper) {
  if (report.tallies.counterexample > 0) return 1;
  if (strict_paper && report.tallies.paper_exception > 0) return 1;
  return 0;
}

}  // namespace twoadic
