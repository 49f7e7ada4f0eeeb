#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "specsum/operator_family.hpp"
#include "specsum/spectral_types.hpp"

namespace specsum {

/// N(T; lambda): eigenvalues with |z| <= lambda, with multiplicity.
/// Throws UnsupportedModel for models that cannot enumerate.
std::size_t counting_function(const CoordinateOperator& op, double lambda);

struct MergedCount {
  std::size_t count = 0;
  // Two coordinates contributed eigenvalues within eps_membership of each
  // other; both were counted.
  bool overlap = false;
};

/// sum_n N(A_n; lambda). Tail members are visited while they still have
/// eigenvalues below lambda, which requires first eigenvalues tending to
/// infinity; otherwise UncertifiableTail.
MergedCount merged_counting(const OperatorFamily& family, double lambda, const Tolerance& tol = {});

/// The `count` smallest eigenvalue moduli of A, sorted.
std::vector<double> merged_eigenvalue_moduli(const OperatorFamily& family, std::size_t count);

struct CountingTable {
  std::string source;
  std::vector<double> thresholds;
  std::vector<std::size_t> counts;
  std::vector<bool> overlaps;
};

/// Thresholds must be nonnegative and increasing.
CountingTable counting_table(const OperatorFamily& family, const std::vector<double>& thresholds,
                             const Tolerance& tol = {}, std::string source = {});

/// Geometric thresholds start, start*ratio, ... (count values).
std::vector<double> geometric_grid(double start, double ratio, std::size_t count);

struct BoundTerm {
  double c = 1.0;
  double alpha = 1.0;
};

/// Terms c_n^{-1/alpha_n} beyond the explicit ones, dominated by
/// t_P ratio^j for n = P + j, all with exponent `alpha`.
struct GeometricTail {
  double ratio = 0.5;
  double alpha = 1.0;
};

/// Growth data lambda_m(A_n) ~ c_n m^{alpha_n} for the counting bound.
class AsymptoticBoundSpec {
 public:
  explicit AsymptoticBoundSpec(std::vector<BoundTerm> terms, std::optional<GeometricTail> tail = std::nullopt);

  const std::vector<BoundTerm>& terms() const { return terms_; }
  const std::optional<GeometricTail>& tail() const { return tail_; }

  /// inf alpha_n.
  double alpha() const { return alpha_; }
  /// 1-based index of the first term attaining inf alpha_n.
  std::size_t q() const { return q_; }
  /// c_q^{-1/alpha_q}.
  double c() const;
  /// sum_n c_n^{-1/alpha_n}, tail included.
  double series_value() const;
  /// lambda -> infinity limit of the normalized bound: the sum of c_n^{-1/alpha_n}
  /// over every n with alpha_n = alpha.
  double limit_constant() const;

  /// sum_n c_n^{-1/alpha_n} lambda^{1/alpha_n - 1/alpha}; requires lambda > 1.
  double normalized_bound(double lambda) const;

 private:
  double tail_sum() const;

  std::vector<BoundTerm> terms_;
  std::optional<GeometricTail> tail_;
  double alpha_ = 0.0;
  std::size_t q_ = 1;
};

/// lambda^{1/alpha} * normalized_bound(lambda).
double counting_bound(const AsymptoticBoundSpec& spec, double lambda);

/// 1-based inclusive index range.
struct FitRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

/// Upper half of a sequence of length n.
FitRange default_fit_range(std::size_t n);

struct AsymptoticFit {
  double gamma_hat = 0.0;
  double alpha_hat = 0.0;
  FitRange range;
  double residual = 0.0;  // RMS deviation in log space
};

/// Least squares of log lambda_n against log n over the range.
AsymptoticFit fit_asymptotic_exponent(const std::vector<double>& moduli, std::optional<FitRange> range = std::nullopt);

struct BoundCheck {
  bool holds = true;
  std::optional<std::size_t> first_violation;  // 1-based
};

/// lambda_n <= gamma n^alpha for every n >= n_min in the list.
BoundCheck verify_eigenvalue_bound(const std::vector<double>& moduli, double gamma, double alpha, std::size_t n_min);

}  // namespace specsum
