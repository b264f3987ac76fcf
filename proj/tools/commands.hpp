#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace sigmaforge::cli {

enum class Verdict { pass, fail, inconclusive };

const char* verdict_name(Verdict v);
/// 0 pass, 1 fail, 3 inconclusive.
int exit_code(Verdict v);

struct Budget {
  std::uint64_t nodes = 0;
  std::string source;  ///< "default", "env" or "flag"
};

/// Resolves the node budget: flag, then SIGMA_FORGE_BUDGET, then the default.
Budget resolve_budget(std::uint64_t flag_value, bool flag_given);

struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  Budget budget;
  std::uint64_t nodes = 0;
  Verdict verdict = Verdict::fail;
  std::string summary;
  double wall_seconds = -1;  ///< reported only when >= 0

  nlohmann::json to_json() const;
};

/// {"path", "sha256"} of a file's bytes.
nlohmann::json file_input(const std::string& path);

struct SolveArgs {
  std::string graph;
  std::string mode = "sigma";
  int max_k = 31;
};
RunReport cmd_solve(const SolveArgs& a, const Budget& budget);

struct MinPartArgs {
  std::string graph;
};
RunReport cmd_minpart(const MinPartArgs& a, const Budget& budget);

struct ReduceArgs {
  std::string kind;
  std::string input;
  int k = 2;
  std::string graph_out;
  std::string trace_out;
  bool skip_nae_gate = false;
};
RunReport cmd_reduce(const ReduceArgs& a, const Budget& budget);

struct RoundtripArgs {
  std::string input;
  std::string reduction;
  int k = 2;
};
RunReport cmd_roundtrip(const RoundtripArgs& a, const Budget& budget);

struct CertifyArgs {
  std::string bundle;
};
RunReport cmd_certify(const CertifyArgs& a, const Budget& budget);

struct OracleArgs {
  std::string input;
  std::string flavor = "nae";
  bool maxcut = false;
};
RunReport cmd_oracle(const OracleArgs& a, const Budget& budget);

struct GadgetExportArgs {
  std::string dir;
};
RunReport cmd_gadget_export(const GadgetExportArgs& a, const Budget& budget);

}  // namespace sigmaforge::cli
