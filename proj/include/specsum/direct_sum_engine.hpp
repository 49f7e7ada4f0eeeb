#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "specsum/operator_family.hpp"
#include "specsum/spectral_types.hpp"

namespace specsum {

struct BoundednessResult {
  enum class Kind { Bounded, Unbounded, Inconclusive };
  Kind kind = Kind::Inconclusive;
  double norm = 0.0;  // sup_n ||A_n|| when Bounded
};

enum class CompactnessVerdict { Compact, NotCompact, Inconclusive };

enum class DiscretenessVerdict { Discrete, NotCertified, Inconclusive };

struct DiscretenessResult {
  DiscretenessVerdict verdict = DiscretenessVerdict::Inconclusive;
  std::vector<std::string> warnings;
};

std::string_view to_string(BoundednessResult::Kind k);
std::string_view to_string(CompactnessVerdict v);
std::string_view to_string(DiscretenessVerdict v);

/// ||A|| = sup_n ||A_n|| when the sup is certified finite.
BoundednessResult is_bounded(const OperatorFamily& family);

/// Compact iff every coordinate is compact and ||A_n|| -> 0.
CompactnessVerdict is_compact(const OperatorFamily& family);

/// Sufficient test only: lambda common to all resolvent sets, every resolvent
/// compact, and ||R_lambda(A_n)|| -> 0. Failed hypotheses give NotCertified.
/// Throws SpectrumHit when lambda is in the spectrum of a prefix coordinate.
DiscretenessResult has_discrete_spectrum(const OperatorFamily& family, ComplexPoint lambda,
                                         const Tolerance& tol = {});

/// Truncated resolvent K_m = (+)_{n<=m} (A_n^(N) - lambda I)^{-1}.
struct ResolventAssembly {
  ComplexPoint lambda;
  std::vector<Eigen::MatrixXcd> operators;  // A_n^(N)
  std::vector<Eigen::MatrixXcd> blocks;     // their inverses after the shift
  Eigen::MatrixXcd assembled;               // block-diagonal of blocks
  Eigen::MatrixXcd assembled_operator;      // block-diagonal of operators
};

/// Throws SpectrumHit when a truncated block is singular within eps_membership.
ResolventAssembly assemble_resolvent_truncation(const OperatorFamily& family, ComplexPoint lambda,
                                                std::size_t m, std::size_t n_per_block,
                                                const Tolerance& tol = {});

/// sup_{n >= m+1} ||R_lambda(A_n)||, bounding ||K_m - K||; unset when the tail
/// cannot certify it.
std::optional<double> resolvent_tail_norm(const OperatorFamily& family, ComplexPoint lambda, std::size_t m,
                                          const Tolerance& tol = {});

}  // namespace specsum
