#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "specsum/errors.hpp"
#include "specsum/operator_family.hpp"
#include "specsum/operator_models.hpp"

namespace specsum::cli {

/// Validation failure; the message starts with the offending field path.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& path, const std::string& message) : Error(path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct MatrixDesc {
  Eigen::MatrixXcd entries;
};
struct DiagonalDesc {
  EntryRule rule;
  std::vector<Complex> accumulation_points;
};
struct MultipointDesc {
  double a = 0.0;
  double b = 1.0;
  Complex amplitude{1.0, 0.0};
};
struct OdeDesc {
  double s = 1.0;
  double a = 0.0;
  double b = 1.0;
  double theta = 0.0;
};
struct ShiftDesc {};
struct DeclaredDesc {
  DeclaredSpectrum data;
};
// `count` blocks of size x size drawn from the run seed.
struct RandomMatrixDesc {
  std::size_t size = 4;
  std::size_t count = 1;
};

using OperatorDesc =
    std::variant<MatrixDesc, DiagonalDesc, MultipointDesc, OdeDesc, ShiftDesc, DeclaredDesc, RandomMatrixDesc>;

struct FiniteTailDesc {};
struct ScalarTailDesc {
  double k = 1.0;
  double p = -1.0;
};
struct OdeTailDesc {
  double s0 = 1.0;
  double p = 1.0;
  double a = 0.0;
  double b = 1.0;
  double theta = 0.0;
};
struct DiagonalTailDesc {
  double k0 = 1.0;
  double ratio = 2.0;
  double alpha = 1.0;
  double beta = 0.0;
};

struct TailDesc {
  std::variant<FiniteTailDesc, ScalarTailDesc, OdeTailDesc, DiagonalTailDesc> rule;
  // Tail members moved into the explicit prefix.
  std::size_t prefix_count = 0;
  // When set, the tail answers from these limits instead of its closed forms.
  std::optional<TailLimits> limits;
};

struct CountingGridDesc {
  double start = 1.0;
  double ratio = 10.0;
  std::size_t count = 7;
};

struct Defaults {
  Complex lambda{-1.0, 0.0};
  std::size_t blocks = 3;
  std::size_t block_size = 8;
  std::size_t fit_count = 200;
  std::optional<std::pair<std::size_t, std::size_t>> fit_range;
  double fit_slack = 1.1;
  std::size_t fit_verify_from = 10;
  CountingGridDesc counting_grid;
};

struct FamilyConfig {
  std::vector<OperatorDesc> operators;
  TailDesc tail;
  Tolerance tolerance;
  Defaults defaults;
  std::uint64_t seed = 0;
  bool assert_disjoint = false;
  double disjoint_check_bound = 1000.0;
};

/// Parses and validates a JSON document. Throws ConfigError.
FamilyConfig parse_config(const std::string& text);
FamilyConfig load_config(const std::string& path);

/// Canonical JSON: every field written, fixed key order, full precision.
std::string serialize_config(const FamilyConfig& config);

/// Builds the family; random blocks draw from `seed` in declaration order.
OperatorFamily build_family(const FamilyConfig& config, std::uint64_t seed);

}  // namespace specsum::cli
