// twoadic: orders modulo 2^n, half-order residues and exact vanishing of
// the associated exponential sums, plus exhaustive claim sweeps.
//
// Exit codes: 0 ok / no counterexample, 1 counterexample found (or a
// paper exception under --strict-paper), 2 usage or domain error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "twoadic/core_arith.hpp"
#include "twoadic/errors.hpp"
#include "twoadic/exp_sum.hpp"
#include "twoadic/half_order.hpp"
#include "twoadic/order_engine.hpp"
#include "twoadic/sweep.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace twoadic;

constexpr int kExitUsage = 2;

json big_json(const BigInt& x) {
  if (auto v = to_int64(x)) return *v;
  return to_string(x);
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void emit(const json& obj, ReportFormat fmt) {
  switch (fmt) {
    case ReportFormat::json:
      std::cout << obj.dump(2) << '\n';
      break;
    case ReportFormat::csv: {
      std::string header, row;
      for (const auto& [key, value] : obj.items()) {
        if (!header.empty()) {
          header += ',';
          row += ',';
        }
        header += key;
        row += csv_cell(scalar_text(value));
      }
      std::cout << header << '\n' << row << '\n';
      break;
    }
    case ReportFormat::table: {
      std::size_t width = 0;
      for (const auto& [key, value] : obj.items()) width = std::max(width, key.size());
      for (const auto& [key, value] : obj.items()) {
        std::cout << key << std::string(width + 2 - key.size(), ' ') << scalar_text(value) << '\n';
      }
      break;
    }
  }
}

struct Common {
  std::string format = "json";
  ReportFormat parsed() const {
    auto f = parse_format(format);
    if (!f) throw UsageError("unknown --format '" + format + "'");
    return *f;
  }
};

void add_format(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "json | csv | table")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orders modulo 2^n, half-order residues and exponential-sum vanishing"};
  app.require_subcommand(1);

  Common common;
  std::string g_text, w_text, path = "fast";
  long long n = 0, n_max = 0;
  bool show_orbit = false;

  auto* order = app.add_subcommand("order", "Order of g modulo 2^n");
  order->add_option("--g", g_text, "odd integer")->required();
  order->add_option("--n", n, "modulus exponent")->required();
  order->add_option("--path", path, "fast | naive")->capture_default_str();
  add_format(order, common);

  auto* table = app.add_subcommand("order-table", "Orders of g modulo 2^1 .. 2^n_max");
  table->add_option("--g", g_text, "odd integer")->required();
  table->add_option("--n-max", n_max, "largest exponent")->required();
  add_format(table, common);

  auto* valuation = app.add_subcommand("valuation", "2-adic valuation and odd part of w");
  valuation->add_option("--w", w_text, "non-zero integer")->required();
  add_format(valuation, common);

  auto* c_cmd = app.add_subcommand("c", "Threshold c(g)");
  c_cmd->add_option("--g", g_text, "odd integer not in {-1, 1}")->required();
  add_format(c_cmd, common);

  auto* half = app.add_subcommand("half-order", "g^(omega/2) mod 2^n and its class");
  half->add_option("--g", g_text, "odd integer")->required();
  half->add_option("--n", n, "modulus exponent >= 3")->required();
  add_format(half, common);

  auto* expsum = app.add_subcommand("expsum", "Exact and numeric value of the orbit sum");
  expsum->add_option("--g", g_text, "odd integer not in {-1, 1}")->required();
  expsum->add_option("--w", w_text, "non-zero integer")->required();
  expsum->add_option("--n", n, "modulus exponent")->required();
  expsum->add_flag("--show-orbit", show_orbit, "include the residue multiset");
  add_format(expsum, common);

  auto* minvan = app.add_subcommand("min-vanishing-n", "Least n <= n_max where the sum vanishes");
  minvan->add_option("--g", g_text, "odd integer not in {-1, 1}")->required();
  minvan->add_option("--w", w_text, "non-zero integer")->required();
  minvan->add_option("--n-max", n_max, "largest exponent scanned")->required();
  add_format(minvan, common);

  auto* sweep = app.add_subcommand("sweep", "Exhaustive claim sweep");
  std::string claim_name;
  std::int64_t g_min = 0, g_max = 0, sn_min = 0, sn_max = 0, w_min = 0, w_max = 0;
  unsigned jobs = 1;
  bool strict_paper = false, n_relative = false;
  sweep->add_option("--claim", claim_name,
                    "lemma1 | lemma2 | lemma3 | lemma4_theorem5 | theorem6 | order_oracle")
      ->required();
  auto* g_min_opt = sweep->add_option("--g-min", g_min);
  auto* g_max_opt = sweep->add_option("--g-max", g_max);
  sweep->add_option("--n-min", sn_min)->required();
  sweep->add_option("--n-max", sn_max)->required();
  auto* w_min_opt = sweep->add_option("--w-min", w_min);
  auto* w_max_opt = sweep->add_option("--w-max", w_max);
  sweep->add_flag("--n-relative", n_relative,
                  "theorem6: n-min/n-max are offsets from d(w) + max{3, c(g)}");
  sweep->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  sweep->add_flag("--strict-paper", strict_paper, "treat paper exceptions as failures");
  add_format(sweep, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const ReportFormat fmt = common.parsed();

    if (order->parsed()) {
      const OddInteger g(parse_bigint(g_text));
      OrderRecord rec;
      if (path == "fast") {
        rec = order_fast(g, n);
      } else if (path == "naive") {
        rec = order_naive(g, n);
      } else {
        throw UsageError("unknown --path '" + path + "'");
      }
      emit({{"g", big_json(rec.g.value())},
            {"n", rec.n},
            {"omega", big_json(rec.omega)},
            {"path", rec.path == OrderPath::fast ? "fast" : "naive"}},
           fmt);
    } else if (table->parsed()) {
      const OddInteger g(parse_bigint(g_text));
      json orders = json::array();
      for (const auto& rec : order_table(g, n_max)) orders.push_back(big_json(rec.omega));
      emit({{"g", big_json(g.value())}, {"n_max", n_max}, {"orders", orders}}, fmt);
    } else if (valuation->parsed()) {
      const BigInt w = parse_bigint(w_text);
      const ValuationDecomposition dec = odd_part(w);
      emit({{"w", big_json(w)}, {"d", dec.d}, {"odd_part", big_json(dec.odd_part.value())}}, fmt);
    } else if (c_cmd->parsed()) {
      const OddInteger g(parse_bigint(g_text));
      emit({{"g", big_json(g.value())}, {"c", c_of_g(g)}}, fmt);
    } else if (half->parsed()) {
      const HalfOrderResult r = half_order_residue(OddInteger(parse_bigint(g_text)), n);
      emit({{"g", big_json(r.g.value())},
            {"n", r.n},
            {"half_exponent", big_json(r.half_exponent)},
            {"residue", big_json(r.residue.value)},
            {"class", to_string(r.involution)},
            {"matches_theorem5", r.matches_theorem5}},
           fmt);
    } else if (expsum->parsed()) {
      const OddInteger g(parse_bigint(g_text));
      const BigInt w = parse_bigint(w_text);
      const ResidueMultiset orbit = residue_orbit(g, w, n);
      const ZeroCertificate cert = is_exact_zero(orbit);
      json numeric = nullptr;
      if (orbit.exponent() <= kFloatExponentCap) {
        const auto s = float_sum(orbit);
        numeric = {{"re", s.real()}, {"im", s.imag()}, {"abs", std::abs(s)}};
      }
      json out = {{"g", big_json(g.value())},
                  {"w", big_json(w)},
                  {"n", n},
                  {"omega", orbit.total()},
                  {"distinct_residues", orbit.entries().size()},
                  {"is_zero", cert.is_zero},
                  {"witness", cert.witness ? big_json(*cert.witness) : json(nullptr)},
                  {"antipodal_pairs", cert.pairs.size()},
                  {"float_sum", numeric}};
      if (show_orbit) {
        json entries = json::array();
        for (const auto& e : orbit.entries()) entries.push_back({big_json(e.residue), e.count});
        out["orbit"] = entries;
      }
      emit(out, fmt);
    } else if (minvan->parsed()) {
      const OddInteger g(parse_bigint(g_text));
      const BigInt w = parse_bigint(w_text);
      const auto found = min_vanishing_n(g, w, n_max);
      emit({{"g", big_json(g.value())},
            {"w", big_json(w)},
            {"n_max", n_max},
            {"vanishing_bound", vanishing_bound(g, w)},
            {"min_n", found ? json(found->n) : json(nullptr)},
            {"slack", found ? json(found->slack) : json(nullptr)}},
           fmt);
    } else if (sweep->parsed()) {
      SweepSpec spec;
      const auto claim = parse_claim(claim_name);
      if (!claim) throw UsageError("unknown --claim '" + claim_name + "'");
      spec.claim = *claim;
      if (g_min_opt->count() != g_max_opt->count()) {
        throw UsageError("--g-min and --g-max go together");
      }
      if (w_min_opt->count() != w_max_opt->count()) {
        throw UsageError("--w-min and --w-max go together");
      }
      if (g_min_opt->count()) spec.g_range = IntRange{g_min, g_max};
      if (w_min_opt->count()) spec.w_range = IntRange{w_min, w_max};
      spec.n_range = {sn_min, sn_max};
      spec.n_relative_to_bound = n_relative;
      spec.jobs = jobs;
      const SweepReport report = run_sweep(spec);
      std::cout << format_report(report, fmt);
      return sweep_exit_code(report, strict_paper);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
