#pragma once

#include <string>

#include <json.hpp>

#include "sigmaforge/gadgets.hpp"

namespace sigmaforge {

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& data);

/// {"name","graph","contract","certificate","hash"}; the hash covers graph
/// text and contract JSON.
struct GadgetBundle {
  std::string name;
  Graph graph;
  ForcingContract contract;
  nlohmann::json certificate;
  std::string hash;
};

std::string bundle_content_hash(const Graph& g, const ForcingContract& c);
GadgetBundle make_bundle(const std::string& name, const Graph& g, const ForcingContract& c);
nlohmann::json to_json(const GadgetBundle& b);
GadgetBundle bundle_from_json(const nlohmann::json& j);
GadgetBundle read_bundle_file(const std::string& path);
/// Writes <dir>/<name>-<first 12 hash chars>.json and returns the path.
std::string write_bundle(const GadgetBundle& b, const std::string& dir);

struct RecertifyOutcome {
  bool hash_matches = false;
  bool certificate_matches = false;
  GadgetCertificate fresh;
  bool pass() const { return hash_matches && certificate_matches && fresh.certified(); }
};
RecertifyOutcome recertify(const GadgetBundle& b, std::uint64_t budget = kCertifyBudget);

/// Every gadget the reductions use, as bundles.
std::vector<GadgetBundle> shipped_bundles();

}  // namespace sigmaforge
