#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "steiner/error.hpp"

namespace {

int exit_for(steiner::ErrorCode code) {
  switch (code) {
    case steiner::ErrorCode::BudgetExceeded:
    case steiner::ErrorCode::TooLarge:
      return steinerctl::kBudget;
    default:
      return steinerctl::kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace steinerctl;

  CLI::App app{"Steiner distance hypermatrices of trees: certificates, identities and searches"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("-v,--verbose", common.verbose, "Human-readable tables on stderr");
  app.add_flag("--pretty", common.pretty, "Indent JSON output");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Random labeled tree from a seeded Pruefer sequence");
  gen_cmd->add_option("--n", gen.n, "Number of vertices")->required()->check(CLI::Range(1, 1000000));
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed");
  gen_cmd->add_option("-o,--out", gen.out, "Output path (stdout when omitted)");

  HypermatrixArgs hm;
  auto* hm_cmd = app.add_subcommand("hypermatrix", "Export the order-k Steiner hypermatrix");
  hm_cmd->add_option("--tree", hm.tree, "Edge-list file, - for stdin")->required();
  hm_cmd->add_option("--k", hm.k, "Order")->required()->check(CLI::Range(2, 64));
  hm_cmd->add_option("--format", hm.format, "json or flat")->check(CLI::IsMember({"json", "flat"}));
  hm_cmd->add_option("-o,--out", hm.out, "Output path (stdout when omitted)");
  hm_cmd->add_flag("--zero-degenerate", hm.zero_degenerate, "Zero every entry with a repeated index");

  CertifyArgs cert;
  auto* cert_cmd = app.add_subcommand("certify", "Exact certificate for the order-k hyperdeterminant");
  cert_cmd->add_option("--tree", cert.tree, "Edge-list file, - for stdin")->required();
  cert_cmd->add_option("--k", cert.k, "Order")->required()->check(CLI::Range(2, 64));
  cert_cmd->add_flag("--degenerate", cert.degenerate, "Certify the degenerate-zeroed hypermatrix instead");

  IdentitiesArgs ids;
  auto* ids_cmd = app.add_subcommand("identities", "Check the order-3 and order-2 identities on one tree");
  ids_cmd->add_option("--tree", ids.tree, "Edge-list file, - for stdin")->required();

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Numeric nullvector search (evidence only)");
  search_cmd->add_option("--tree", search.tree, "Edge-list file, - for stdin")->required();
  search_cmd->add_option("--k", search.k, "Order")->required()->check(CLI::Range(2, 64));
  search_cmd->add_option("--seed", search.seed, "PRNG seed");
  search_cmd->add_option("--restarts", search.restarts, "Random starts")->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--tol", search.tol, "Residual reported as converged");
  search_cmd->add_option("--max-iterations", search.max_iterations, "Iterations per start")->check(CLI::PositiveNumber);

  CampaignArgs camp;
  auto* camp_cmd = app.add_subcommand("campaign", "Certificates over many random trees");
  camp_cmd->add_option("--n-min", camp.n_min, "Smallest tree size")->check(CLI::PositiveNumber);
  camp_cmd->add_option("--n-max", camp.n_max, "Largest tree size")->check(CLI::PositiveNumber);
  camp_cmd->add_option("--k", camp.ks, "Orders, e.g. --k 3 5")->required()->expected(1, -1)->check(CLI::Range(2, 64));
  camp_cmd->add_option("--trees-per-n", camp.trees_per_n, "Trees per size")->check(CLI::NonNegativeNumber);
  camp_cmd->add_option("--seed", camp.seed, "Campaign seed");
  camp_cmd->add_option("--out-dir", camp.out_dir, "Directory for per-case reports");
  camp_cmd->add_option("-j,--jobs", camp.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*gen_cmd) return run_gen(common, gen);
    if (*hm_cmd) return run_hypermatrix(common, hm);
    if (*cert_cmd) return run_certify(common, cert);
    if (*ids_cmd) return run_identities(common, ids);
    if (*search_cmd) return run_search(common, search);
    if (*camp_cmd) return run_campaign(common, camp);
  } catch (const steiner::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
