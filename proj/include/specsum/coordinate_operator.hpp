#pragma once

#include <cstddef>
#include <memory>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "specsum/spectral_types.hpp"

namespace specsum {

/// Uniform spectral interface of one coordinate operator A_n of a direct sum.
///
/// Implementations are immutable value objects; every query is pure and may
/// be called concurrently.
class CoordinateOperator {
 public:
  virtual ~CoordinateOperator() = default;

  virtual std::string_view kind() const = 0;

  virtual SpectralClass classify_point(ComplexPoint lambda, const Tolerance& tol) const = 0;

  /// ||R_lambda(A)||, or +inf when lambda lies within tol.eps_membership of the
  /// spectrum. Finite exactly when classify_point returns Resolvent.
  virtual double resolvent_norm(ComplexPoint lambda, const Tolerance& tol = {}) const = 0;

  /// +inf for unbounded operators.
  virtual double operator_norm() const = 0;

  /// Eigenvalues with modulus <= bound, with multiplicity, in the model's
  /// enumeration order. Throws UnsupportedModel when the model cannot enumerate.
  virtual std::vector<Complex> eigenvalues_up_to(double bound) const = 0;
  virtual bool is_enumerable() const { return true; }

  virtual bool is_compact() const = 0;
  /// Discrete spectrum in the sense of a compact resolvent.
  virtual bool has_compact_resolvent() const = 0;

  /// Dense finite section of size at most n (n >= 1).
  virtual Eigen::MatrixXcd truncate(std::size_t n) const = 0;

  /// Every eigenvalue of modulus strictly below the returned radius appears in
  /// truncate(n); +inf when truncate(n) carries the whole spectrum.
  virtual double truncation_radius(std::size_t n) const = 0;
};

using CoordinatePtr = std::shared_ptr<const CoordinateOperator>;

}  // namespace specsum
