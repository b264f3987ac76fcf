#include "sigmaforge/bundle.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sigmaforge/errors.hpp"

namespace sigmaforge {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::string hex;
  hex.reserve(len * 2);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string bundle_content_hash(const Graph& g, const ForcingContract& c) {
  return sha256_hex(serialize_graph(g) + "\n" + to_json(c).dump());
}

GadgetBundle make_bundle(const std::string& name, const Graph& g, const ForcingContract& c) {
  GadgetBundle b;
  b.name = name;
  b.graph = g;
  b.contract = c;
  b.certificate = to_json(certify(g, c));
  b.hash = bundle_content_hash(g, c);
  return b;
}

nlohmann::json to_json(const GadgetBundle& b) {
  return {{"name", b.name},
          {"graph", serialize_graph(b.graph)},
          {"contract", to_json(b.contract)},
          {"certificate", b.certificate},
          {"hash", b.hash}};
}

GadgetBundle bundle_from_json(const nlohmann::json& j) {
  GadgetBundle b;
  try {
    b.name = j.at("name").get<std::string>();
    b.graph = parse_graph(j.at("graph").get<std::string>());
    b.contract = contract_from_json(j.at("contract"));
    b.certificate = j.at("certificate");
    b.hash = j.at("hash").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed bundle: ") + e.what());
  }
  return b;
}

GadgetBundle read_bundle_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open bundle: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("bundle is not JSON: " + std::string(e.what()));
  }
  return bundle_from_json(j);
}

std::string write_bundle(const GadgetBundle& b, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::string path = (std::filesystem::path(dir) / (b.name + "-" + b.hash.substr(0, 12) + ".json")).string();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write bundle: " + path);
  out << to_json(b).dump(2) << '\n';
  return path;
}

RecertifyOutcome recertify(const GadgetBundle& b, std::uint64_t budget) {
  RecertifyOutcome o;
  o.hash_matches = bundle_content_hash(b.graph, b.contract) == b.hash;
  o.fresh = certify(b.graph, b.contract, budget);
  o.certificate_matches = to_json(o.fresh) == b.certificate;
  return o;
}

std::vector<GadgetBundle> shipped_bundles() {
  std::vector<GadgetBundle> out;
  auto add = [&](const Gadget& g) { out.push_back(make_bundle(g.name, g.graph, g.contract)); };
  add(diamond_gadget());
  add(t_gadget());
  add(prism_decoration());
  add(variable_gadget(1, 1).gadget);
  add(variable_gadget(2, 2).gadget);
  add(three_port_gadget().gadget);
  return out;
}

}  // namespace sigmaforge
