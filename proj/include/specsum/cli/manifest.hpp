#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace specsum::cli {

std::string sha256_hex(const std::string& data);

/// Provenance of one run. The id covers everything that determines output
/// bytes and nothing else, so reruns share it.
struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  std::string config_hash;
  std::uint64_t seed = 0;
  std::vector<std::string> outputs;
  std::string version;
  std::string wall_clock;  // UTC, informational only

  std::string id() const;
  std::string to_json() const;
};

/// Seed from SPECSUM_SEED when set, else the config seed. Throws
/// InvalidArgument on a malformed variable.
std::uint64_t resolve_seed(std::uint64_t config_seed);

std::string utc_now();

}  // namespace specsum::cli
