#include "pmz/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pmz/census.hpp"
#include "pmz/containment.hpp"
#include "pmz/mobius.hpp"
#include "pmz/verify.hpp"
#include "pmz/zero_rules.hpp"

namespace pmz::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Möbius function of the permutation pattern poset"};
  app.require_subcommand(1);

  std::string sigma_text;
  std::string pi_text;
  bool no_prune = false;
  bool count_only = false;
  std::size_t cap = default_element_cap();

  auto* mu = app.add_subcommand("mu", "print mu(sigma, pi)");
  mu->add_option("sigma", sigma_text)->required();
  mu->add_option("pi", pi_text)->required();
  mu->add_flag("--no-prune", no_prune, "evaluate every element of the interval");
  mu->add_option("--cap", cap, "element cap for the interval");

  auto* pmu = app.add_subcommand("pmu", "print mu(1, pi)");
  pmu->add_option("pi", pi_text)->required();
  pmu->add_flag("--no-prune", no_prune, "evaluate every element of the interval");
  pmu->add_option("--cap", cap, "element cap for the interval");

  auto* zero = app.add_subcommand("zero", "print a zero certificate or 'none'");
  zero->add_option("pi", pi_text)->required();

  auto* downset = app.add_subcommand("downset", "print every pattern contained in pi");
  downset->add_option("pi", pi_text)->required();
  downset->add_flag("--count", count_only, "print only the number of elements");
  downset->add_option("--cap", cap, "element cap");

  int census_n = 0;
  unsigned workers = 1;
  std::string format = "csv";
  std::string audit_path;
  std::string checkpoint_path;
  bool long_run = false;
  bool no_symmetry = false;
  bool prune = false;
  bool bounds = false;
  auto* census = app.add_subcommand("census", "zero census of S_n");
  census->add_option("--n", census_n, "permutation length")->required();
  census->add_option("--workers", workers, "worker threads");
  census->add_option("--format", format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
  census->add_option("--audit", audit_path, "write '<perm>\\t<mu>' lines here");
  census->add_option("--checkpoint", checkpoint_path, "checkpoint file for resumable runs");
  census->add_flag("--long-run", long_run, "allow n above the desk cap");
  census->add_flag("--no-symmetry", no_symmetry, "evaluate every permutation, not one per orbit");
  census->add_flag("--prune", prune, "skip certified zeros inside each interval");
  census->add_flag("--bounds", bounds, "append the opposing-adjacency lower bound report");

  int n_max = 7;
  std::string suite;
  bool json = false;
  std::uint64_t seed = SuiteOptions{}.seed;
  auto* verify = app.add_subcommand("verify", "run the theorem and structure checks");
  verify->add_option("--nmax", n_max, "largest exhaustive length (<= 8)");
  verify->add_option("--suite", suite, "run a single check by name");
  verify->add_option("--seed", seed, "seed for random structures");
  verify->add_option("--workers", workers, "checks run in parallel");
  verify->add_flag("--json", json, "JSON report");

  int table_max = 6;
  auto* table = app.add_subcommand("table", "density table for n = 1..nmax");
  table->add_option("--nmax", table_max, "largest n")->required();
  table->add_option("--workers", workers, "worker threads");
  table->add_option("--format", format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
  table->add_flag("--long-run", long_run, "allow n above the desk cap");
  bool table_format_set = false;
  table->callback([&] { table_format_set = table->count("--format") > 0; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kDomainError;
  }

  try {
    if (*mu) {
      MobiusCache cache;
      out << mobius(parse(sigma_text), parse(pi_text), cache, !no_prune, cap) << '\n';
    } else if (*pmu) {
      MobiusCache cache;
      out << principal_mobius(parse(pi_text), cache, !no_prune, cap) << '\n';
    } else if (*zero) {
      const auto cert = certify_zero(parse(pi_text));
      out << (cert ? describe(*cert) : "none") << '\n';
    } else if (*downset) {
      const auto elems = down_set(parse(pi_text), cap);
      if (count_only) {
        out << elems.size() << '\n';
      } else {
        for (const auto& e : elems) out << e.str() << '\n';
      }
    } else if (*census) {
      CensusOptions options;
      options.pruned = prune;
      options.workers = workers;
      options.symmetry_reduction = !no_symmetry;
      options.long_run = long_run;
      options.audit_path = audit_path;
      options.checkpoint_path = checkpoint_path;
      const std::vector<CensusRow> rows{zero_density(census_n, options)};
      out << emit_table(rows, parse_table_format(format));
      if (bounds) out << density_bound_report(rows);
    } else if (*verify) {
      SuiteOptions options;
      options.n_max = n_max;
      options.only = suite;
      options.seed = seed;
      options.workers = workers;
      const SuiteReport report = run_theorem_suites(options);
      out << (json ? report.json() : report.text());
      if (!report.all_passed()) return kVerificationFailed;
    } else if (*table) {
      if (table_max < 1) throw DomainError("--nmax must be at least 1");
      std::vector<CensusRow> rows;
      CensusOptions options;
      options.workers = workers;
      options.long_run = long_run;
      for (int n = 1; n <= table_max; ++n) rows.push_back(zero_density(n, options));
      out << emit_table(rows, table_format_set ? parse_table_format(format) : TableFormat::kText);
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const MobiusOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace pmz::cli
