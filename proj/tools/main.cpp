// congruence-lab: verify divisibility claims, run integer searches, and check
// exact identities over small grids, with machine-readable reports.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "conlab/claim_registry.hpp"
#include "conlab/identities.hpp"
#include "conlab/report.hpp"
#include "conlab/searches.hpp"

namespace {

constexpr int kUsageError = 64;

// Write to the chosen sink; stdout when no path was given.
bool emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return false;
  }
  file << text;
  return true;
}

// Default budget, overridable by CONGRUENCE_LAB_BUDGET, overridable by --budget.
double env_budget() {
  const char* env = std::getenv("CONGRUENCE_LAB_BUDGET");
  if (!env) return conlab::kDefaultBudget;
  try {
    size_t used = 0;
    double value = std::stod(env, &used);
    if (used != std::string(env).size() || value < 1.0)
      throw std::invalid_argument("bad budget");
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("CONGRUENCE_LAB_BUDGET must be a number >= 1, got '" + std::string(env) + "'");
  }
}

// "name=v" fixes a dial, "name=lo:hi" sets its range.
void apply_grid_arg(conlab::Bounds& overrides, const std::string& arg) {
  auto eq = arg.find('=');
  if (eq == std::string::npos || eq == 0)
    throw std::invalid_argument("--grid expects name=value or name=lo:hi, got '" + arg + "'");
  std::string name = arg.substr(0, eq);
  std::string rest = arg.substr(eq + 1);
  auto colon = rest.find(':');
  conlab::Range range;
  try {
    if (colon == std::string::npos) {
      range.lo = range.hi = std::stol(rest);
    } else {
      range.lo = std::stol(rest.substr(0, colon));
      range.hi = std::stol(rest.substr(colon + 1));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("--grid expects integer bounds, got '" + arg + "'");
  }
  overrides[name] = range;
}

// Raise (or create) the upper bound of one dial, keeping the effective lower
// bound: an explicit override's if present, the claim default otherwise.
void apply_max(conlab::Bounds& overrides, const conlab::Claim& claim, const std::string& dial, long hi) {
  long lo = 0;
  auto it = overrides.find(dial);
  if (it != overrides.end()) {
    lo = it->second.lo;
  } else {
    for (const auto& [name, range] : claim.default_bounds)
      if (name == dial) lo = range.lo;
  }
  overrides[dial] = {lo, hi};
}

void list_claims(std::ostream& out) {
  out << "known claim ids:\n";
  for (const auto& id : conlab::claim_ids()) out << "  " << id << "\n";
}

void list_identities(std::ostream& out) {
  out << "known identity ids:\n";
  for (const auto& id : conlab::identity_ids()) out << "  " << id << "\n";
}

struct VerifyOptions {
  std::string id;
  std::vector<std::string> grid_args;
  std::map<std::string, long> fixed;  // sugar: --n 7 pins dial n
  std::map<std::string, long> maxed;  // sugar: --n-max 6 raises dial n
  bool rs_max_set = false;
  long rs_max = 0;
  std::string format = "json";
  std::string out_path;
  std::string findings_path = "findings.jsonl";
  int workers = 1;
  double budget = 0.0;
  bool budget_set = false;
};

int run_verify(const VerifyOptions& opt) {
  const conlab::Claim* claim = conlab::find_claim(opt.id);
  if (!claim) {
    std::cerr << "error: unknown claim id '" << opt.id << "'\n";
    list_claims(std::cerr);
    return kUsageError;
  }

  conlab::GridReport report;
  try {
    conlab::Bounds overrides;
    for (const auto& arg : opt.grid_args) apply_grid_arg(overrides, arg);
    for (const auto& [dial, value] : opt.fixed) overrides[dial] = {value, value};
    for (const auto& [dial, hi] : opt.maxed) apply_max(overrides, *claim, dial, hi);
    if (opt.rs_max_set) {
      apply_max(overrides, *claim, "r", opt.rs_max);
      apply_max(overrides, *claim, "s", opt.rs_max);
    }
    double budget = opt.budget_set ? opt.budget : env_budget();
    report = conlab::verify_claim(*claim, overrides, opt.workers, budget);
  } catch (const conlab::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --budget or shrink the grid)\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }

  std::cerr << "checked " << report.checked << " points in " << report.elapsed_seconds << " s\n";
  if (!emit(conlab::render_verify_report(report, conlab::parse_format(opt.format)), opt.out_path))
    return kUsageError;

  if (!report.counterexamples.empty() && report.kind == conlab::ClaimKind::conjecture) {
    std::ofstream findings(opt.findings_path, std::ios::binary | std::ios::trunc);
    if (!findings) {
      std::cerr << "error: cannot open findings file '" << opt.findings_path << "'\n";
      return kUsageError;
    }
    findings << conlab::findings_jsonl(report);
    std::cerr << report.counterexamples.size() << " counterexample(s) written to " << opt.findings_path
              << "\n";
  }
  return conlab::verify_exit_code(report);
}

struct SearchOptions {
  std::string id;
  long bound = 300;
  bool raw = false;
  long count = 20;
  std::vector<long> xs = {1, 10, 20, 50, 100, 200, 500, 1000, 2000, 3000, 4000, 5000};
  std::string format = "json";
  std::string out_path;
};

int run_search(const SearchOptions& opt) {
  conlab::Format format;
  std::string text;
  try {
    format = conlab::parse_format(opt.format);
    if (opt.id == "list-5.1") {
      text = conlab::render_search_summary(conlab::search_central_coprime(opt.bound, opt.raw), format);
    } else if (opt.id == "prime-chain") {
      text = conlab::render_prime_pairs(conlab::prime_pair_search(opt.count), format);
    } else if (opt.id == "table1") {
      text = conlab::render_table(conlab::count_gcd_conditions(opt.xs), format);
    } else {
      std::cerr << "error: unknown search id '" << opt.id << "'\n";
      std::cerr << "known search ids:\n  list-5.1\n  prime-chain\n  table1\n";
      return kUsageError;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return emit(text, opt.out_path) ? 0 : kUsageError;
}

struct IdentityOptions {
  std::string id;
  std::map<std::string, long> params;  // only dials the user set
  std::string format = "json";
  std::string out_path;
};

int run_identity(const IdentityOptions& opt) {
  const conlab::IdentityCheck* check = conlab::find_identity(opt.id);
  if (!check) {
    std::cerr << "error: unknown identity id '" << opt.id << "'\n";
    list_identities(std::cerr);
    return kUsageError;
  }
  conlab::IdentityReport report;
  try {
    report = check->run(opt.params);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  std::cerr << "checked " << report.checked << " equalities in " << report.elapsed_seconds << " s\n";
  if (!emit(conlab::render_identity_report(report, conlab::parse_format(opt.format)), opt.out_path))
    return kUsageError;
  return report.failures.empty() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact congruence checks for binomial and ballot number sum families"};
  app.require_subcommand(1);

  VerifyOptions vo;
  CLI::App* verify = app.add_subcommand("verify", "sweep a claim's grid and report counterexamples");
  verify->add_option("id", vo.id, "claim id (see error output for the full list)")->required();
  verify->add_option("--grid", vo.grid_args, "override one dial: name=value or name=lo:hi (repeatable)")
      ->allow_extra_args(false);
  for (const char* dial : {"m", "n", "r", "s", "a", "eps"})
    verify->add_option_function<long>(
        std::string("--") + dial, [&vo, dial](long v) { vo.fixed[dial] = v; },
        std::string("pin dial ") + dial + " to one value");
  for (const char* dial : {"m", "n", "r", "s", "t", "a", "b", "c"})
    verify->add_option_function<long>(
        std::string("--") + dial + "-max", [&vo, dial](long v) { vo.maxed[dial] = v; },
        std::string("upper bound for dial ") + dial);
  verify->add_option_function<long>(
      "--rs-max",
      [&vo](long v) {
        vo.rs_max_set = true;
        vo.rs_max = v;
      },
      "upper bound for dials r and s together");
  verify->add_option("--format", vo.format, "report format")->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--out", vo.out_path, "write the report to this file instead of stdout");
  verify->add_option("--findings", vo.findings_path, "findings file for conjecture counterexamples");
  verify->add_option("--workers", vo.workers, "worker threads for the sweep")->check(CLI::PositiveNumber);
  verify->add_option_function<double>(
      "--budget",
      [&vo](double v) {
        vo.budget_set = true;
        vo.budget = v;
      },
      "maximum estimated term count (default 1e8, env CONGRUENCE_LAB_BUDGET)");

  SearchOptions so;
  CLI::App* search = app.add_subcommand("search", "run an integer search or count table");
  search->add_option("id", so.id, "search id: list-5.1, prime-chain, table1")->required();
  search->add_option("--bound", so.bound, "upper bound on n for list-5.1")->check(CLI::PositiveNumber);
  search->add_flag("--raw", so.raw, "list-5.1: keep n with 2n+1 a prime power instead of dropping them");
  search->add_option("--count", so.count, "number of primes for prime-chain")->check(CLI::PositiveNumber);
  search->add_option("--xs", so.xs, "cutoffs for table1, comma separated")->delimiter(',');
  search->add_option("--format", so.format, "report format")->check(CLI::IsMember({"json", "csv", "text"}));
  search->add_option("--out", so.out_path, "write the report to this file instead of stdout");

  IdentityOptions io;
  CLI::App* identity = app.add_subcommand("identity", "check an exact identity over its grid");
  identity->add_option("id", io.id, "identity id (see error output for the full list)")->required();
  const std::pair<const char*, const char*> identity_dials[] = {
      {"--alpha", "alpha"}, {"--beta", "beta"}, {"--degree", "degree"},
      {"--n-max", "n_max"}, {"--m-max", "m_max"}};
  for (const auto& [flag, name] : identity_dials)
    identity->add_option_function<long>(
        flag, [&io, name = std::string(name)](long v) { io.params[name] = v; },
        "identity parameter " + std::string(name));
  identity->add_option("--format", io.format, "report format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  identity->add_option("--out", io.out_path, "write the report to this file instead of stdout");

  SearchOptions to;
  to.id = "table1";
  to.format = "csv";
  CLI::App* table = app.add_subcommand("table", "gcd-condition count table (csv by default)");
  table->add_option("--xs", to.xs, "cutoffs, comma separated")->delimiter(',');
  table->add_option("--format", to.format, "report format")->check(CLI::IsMember({"json", "csv", "text"}));
  table->add_option("--out", to.out_path, "write the report to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (verify->parsed()) return run_verify(vo);
    if (search->parsed()) return run_search(so);
    if (identity->parsed()) return run_identity(io);
    if (table->parsed()) return run_search(to);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
