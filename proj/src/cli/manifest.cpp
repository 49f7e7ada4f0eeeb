#include "specsum/cli/manifest.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <memory>

#include <json.hpp>

#include "specsum/errors.hpp"

namespace specsum::cli {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::string RunManifest::id() const {
  std::string key = command + '\n';
  for (const auto& a : arguments) key += a + '\n';
  key += config_hash + '\n' + std::to_string(seed) + '\n' + version;
  return sha256_hex(key).substr(0, 16);
}

std::string RunManifest::to_json() const {
  nlohmann::json j = {{"id", id()},           {"command", command},   {"arguments", arguments},
                      {"config_hash", config_hash}, {"seed", seed},  {"outputs", outputs},
                      {"version", version},   {"wall_clock", wall_clock}};
  return j.dump(2) + "\n";
}

std::uint64_t resolve_seed(std::uint64_t config_seed) {
  const char* env = std::getenv("SPECSUM_SEED");
  if (!env || !*env) return config_seed;
  const std::string s(env);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw InvalidArgument("SPECSUM_SEED must be a nonnegative integer, got '" + s + "'");
  }
  return v;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace specsum::cli
