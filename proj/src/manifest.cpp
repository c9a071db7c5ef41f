#include "mbk/manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>
#include <stdexcept>

namespace mbk::manifest {

namespace {

struct DigestContext {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx{EVP_MD_CTX_new(), &EVP_MD_CTX_free};

  DigestContext() {
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1)
      throw std::runtime_error("sha256 init failed");
  }
  void update(const void* data, std::size_t n) {
    if (EVP_DigestUpdate(ctx.get(), data, n) != 1) throw std::runtime_error("sha256 update failed");
  }
  std::string hex() {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx.get(), md.data(), &len) != 1) throw std::runtime_error("sha256 final failed");
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
      out.push_back(kHex[md[i] >> 4]);
      out.push_back(kHex[md[i] & 15]);
    }
    return out;
  }
};

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  DigestContext d;
  d.update(bytes.data(), bytes.size());
  return d.hex();
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  DigestContext d;
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    d.update(buf.data(), std::size_t(in.gcount()));
  }
  return d.hex();
}

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["seed"] = seed;
  j["version"] = version;
  j["wall_time_s"] = wall_time_s;
  j["outputs"] = nlohmann::ordered_json::array();
  for (const Output& o : outputs) j["outputs"].push_back({{"role", o.role}, {"path", o.path}, {"sha256", o.sha256}});
  return j;
}

RunManifest RunManifest::from_json(const nlohmann::ordered_json& j) {
  RunManifest m;
  try {
    m.command = j.at("command").get<std::string>();
    m.parameters = j.at("parameters");
    m.seed = j.value("seed", std::uint64_t{0});
    m.version = j.value("version", std::string(kToolVersion));
    m.wall_time_s = j.value("wall_time_s", 0.0);
    for (const auto& o : j.at("outputs"))
      m.outputs.push_back({o.at("role").get<std::string>(), o.value("path", std::string{}),
                           o.at("sha256").get<std::string>()});
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed manifest: ") + e.what());
  }
  return m;
}

}  // namespace mbk::manifest
