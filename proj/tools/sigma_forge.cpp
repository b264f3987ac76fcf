// sigma-forge: exact sigma / lucky solving, reductions and gadget certification.
//
// Machine-readable report on stdout, one-line summary on stderr.
// Exit status: 0 pass, 1 fail, 2 usage or input error, 3 inconclusive.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "sigmaforge/errors.hpp"

namespace cli = sigmaforge::cli;

int main(int argc, char** argv) {
  CLI::App app{"sigma-forge: sigma colorings, lucky labelings and their hardness reductions"};
  app.require_subcommand(1);

  std::uint64_t budget_flag = 0;
  bool timing = false;
  auto* budget_opt = app.add_option("--budget", budget_flag, "node budget (overrides SIGMA_FORGE_BUDGET)")
                         ->check(CLI::PositiveNumber);
  app.add_flag("--timing", timing, "include wall-clock seconds in the report");

  cli::SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "sigma or lucky number of a graph");
  solve_cmd->add_option("graph", solve.graph, "graph file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--mode", solve.mode, "sigma or lucky")->check(CLI::IsMember({"sigma", "lucky"}));
  solve_cmd->add_option("--max-k", solve.max_k, "largest label count tried")->check(CLI::Range(1, 31));

  cli::MinPartArgs minpart;
  auto* minpart_cmd = app.add_subcommand("minpart", "smallest part over sigma 2-partitions");
  minpart_cmd->add_option("graph", minpart.graph, "graph file")->required()->check(CLI::ExistingFile);

  cli::ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "build a reduced graph and its traceback");
  reduce_cmd->add_option("kind", reduce.kind, "nae3sat, sigmak, cubic1in3, maxcut or remark2")
      ->required()
      ->check(CLI::IsMember({"nae3sat", "sigmak", "cubic1in3", "maxcut", "remark2"}));
  reduce_cmd->add_option("input", reduce.input, "formula or graph file")->check(CLI::ExistingFile);
  reduce_cmd->add_option("--k", reduce.k, "label count (sigmak) or family index (remark2)")->check(CLI::Range(1, 31));
  reduce_cmd->add_option("--graph-out", reduce.graph_out, "write graph text here instead of the report");
  reduce_cmd->add_option("--trace-out", reduce.trace_out, "write traceback JSON here instead of the report");
  reduce_cmd->add_flag("--skip-nae-gate", reduce.skip_nae_gate, "cubic1in3: build even without an NAE assignment");

  cli::RoundtripArgs roundtrip;
  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "oracle vs reduced-graph solve, both directions");
  roundtrip_cmd->add_option("input", roundtrip.input, "formula file (graph file for sigmak)")
      ->required()
      ->check(CLI::ExistingFile);
  roundtrip_cmd->add_option("--reduction", roundtrip.reduction, "nae3sat, maxcut, cubic1in3 or sigmak")
      ->required()
      ->check(CLI::IsMember({"nae3sat", "maxcut", "cubic1in3", "sigmak"}));
  roundtrip_cmd->add_option("--k", roundtrip.k, "label count for sigmak")->check(CLI::Range(2, 31));

  cli::CertifyArgs certify;
  auto* certify_cmd = app.add_subcommand("certify", "re-certify a gadget bundle");
  certify_cmd->add_option("bundle", certify.bundle, "bundle JSON")->required()->check(CLI::ExistingFile);

  cli::OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force NAE / 1-in-3 / max-cut oracles");
  oracle_cmd->add_option("input", oracle.input, "formula file, or graph file with --maxcut")
      ->required()
      ->check(CLI::ExistingFile);
  oracle_cmd->add_option("--flavor", oracle.flavor, "nae, 1in3 or plain")->check(CLI::IsMember({"nae", "1in3", "plain"}));
  oracle_cmd->add_flag("--maxcut", oracle.maxcut, "treat input as a graph and report its maximum cut");

  cli::GadgetExportArgs gadget_export;
  auto* gadget_cmd = app.add_subcommand("gadget", "gadget bundle utilities");
  gadget_cmd->require_subcommand(1);
  auto* export_cmd = gadget_cmd->add_subcommand("export", "write every shipped gadget bundle");
  export_cmd->add_option("--dir", gadget_export.dir, "output directory")->required()->check(CLI::ExistingDirectory);

  CLI11_PARSE(app, argc, argv);

  cli::RunReport report;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const cli::Budget budget = cli::resolve_budget(budget_flag, budget_opt->count() > 0);
    if (*solve_cmd) report = cli::cmd_solve(solve, budget);
    else if (*minpart_cmd) report = cli::cmd_minpart(minpart, budget);
    else if (*reduce_cmd) report = cli::cmd_reduce(reduce, budget);
    else if (*roundtrip_cmd) report = cli::cmd_roundtrip(roundtrip, budget);
    else if (*certify_cmd) report = cli::cmd_certify(certify, budget);
    else if (*oracle_cmd) report = cli::cmd_oracle(oracle, budget);
    else report = cli::cmd_gadget_export(gadget_export, budget);
  } catch (const sigmaforge::InputError& e) {
    std::cout << nlohmann::json{{"error", e.what()}, {"verdict", "fail"}}.dump() << '\n';
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cout << nlohmann::json{{"error", e.what()}, {"verdict", "fail"}}.dump() << '\n';
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  if (timing) report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::cout << report.to_json().dump(2) << '\n';
  std::cerr << report.command << ": " << cli::verdict_name(report.verdict) << ", " << report.summary << '\n';
  return cli::exit_code(report.verdict);
}
