#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "specsum/coordinate_operator.hpp"

namespace specsum {

// ---------------------------------------------------------------------------
// Finite matrices
// ---------------------------------------------------------------------------

/// A dense d x d complex matrix acting on C^d. Its spectrum is the eigenvalue
/// set (pure point) and ||R_lambda|| = 1 / sigma_min(A - lambda I).
class FiniteMatrixOperator final : public CoordinateOperator {
 public:
  explicit FiniteMatrixOperator(Eigen::MatrixXcd entries);

  static FiniteMatrixOperator scalar(Complex value);

  const Eigen::MatrixXcd& entries() const { return entries_; }
  const std::vector<Complex>& eigenvalues() const { return eigenvalues_; }

  std::string_view kind() const override { return "matrix"; }
  SpectralClass classify_point(ComplexPoint lambda, const Tolerance& tol) const override;
  double resolvent_norm(ComplexPoint lambda, const Tolerance& tol = {}) const override;
  double operator_norm() const override { return norm_; }
  std::vector<Complex> eigenvalues_up_to(double bound) const override;
  bool is_compact() const override { return true; }
  bool has_compact_resolvent() const override { return true; }
  Eigen::MatrixXcd truncate(std::size_t n) const override;
  double truncation_radius(std::size_t n) const override;

  double distance_to_spectrum(ComplexPoint lambda) const;

 private:
  Eigen::MatrixXcd entries_;
  std::vector<Complex> eigenvalues_;  // sorted by modulus
  double norm_ = 0.0;
};

/// Point spectrum when lambda is within eps_membership of an eigenvalue, else
/// Resolvent. Finite matrices have no continuous or residual spectrum.
SpectralClass matrix_classify(ComplexPoint lambda, const FiniteMatrixOperator& op,
                              const Tolerance& tol);

// ---------------------------------------------------------------------------
// Diagonal operators on l^2
// ---------------------------------------------------------------------------

/// c_m = k * m^alpha + beta for m >= 1 (k != 0, alpha > 0).
struct PowerLawEntries {
  double k = 1.0;
  double alpha = 1.0;
  double beta = 0.0;
};

/// Finitely many entries c_1..c_L; the operator acts on C^L.
struct ExplicitEntries {
  std::vector<Complex> values;
};

using EntryRule = std::variant<PowerLawEntries, ExplicitEntries>;

struct GrowthBound {
  double k = 1.0;
  double alpha = 1.0;
};

/// Multiplication operator (u_m) -> (c_m u_m). Normal, so its resolvent norm is
/// the reciprocal distance to the closure of the entries. Accumulation points
/// of the entries are declared, never detected.
class DiagonalOperator final : public CoordinateOperator {
 public:
  explicit DiagonalOperator(EntryRule rule, std::vector<Complex> accumulation_points = {});

  const EntryRule& rule() const { return rule_; }
  const std::vector<Complex>& accumulation_points() const { return accumulation_; }

  /// c_m for m >= 1 (m <= dimension for explicit entries).
  Complex entry(double m) const;
  std::optional<std::size_t> dimension() const;
  /// |c_m| ~ k m^alpha for power-law entries.
  std::optional<GrowthBound> growth() const;

  /// Index m >= from minimizing |c_m - lambda| (power law: O(1) by monotonicity).
  double nearest_entry_index(ComplexPoint lambda, double from = 1.0) const;
  double distance_to_entries(ComplexPoint lambda, double from = 1.0) const;
  double distance_to_spectrum(ComplexPoint lambda) const;

  std::string_view kind() const override { return "diagonal"; }
  SpectralClass classify_point(ComplexPoint lambda, const Tolerance& tol) const override;
  double resolvent_norm(ComplexPoint lambda, const Tolerance& tol = {}) const override;
  double operator_norm() const override;
  std::vector<Complex> eigenvalues_up_to(double bound) const override;
  bool is_compact() const override { return dimension().has_value(); }
  bool has_compact_resolvent() const override { return accumulation_.empty(); }
  Eigen::MatrixXcd truncate(std::size_t n) const override;
  double truncation_radius(std::size_t n) const override;

 private:
  EntryRule rule_;
  std::vector<Complex> accumulation_;
};

/// sup_{m} 1/|c_m - lambda|: explicit maximum over m <= depth plus the exact
/// tail maximum located through the monotone growth of the entries.
double diagonal_resolvent_norm_exact(ComplexPoint lambda, const DiagonalOperator& op,
                                     std::size_t depth, const Tolerance& tol = {});

/// Hilbert-Schmidt upper bound (sum_m 1/|c_m - lambda|^2)^(1/2): partial sum to
/// `depth` plus an integral bound on the remaining terms. Never below the exact
/// norm. Throws InvalidArgument when the series diverges (2 alpha <= 1, or
/// declared finite accumulation points).
double diagonal_resolvent_norm_hs_bound(ComplexPoint lambda, const DiagonalOperator& op,
                                        std::size_t depth, const Tolerance& tol = {});

// ---------------------------------------------------------------------------
// First-order multipoint differential operator u' with u(a) = u(b)
// ---------------------------------------------------------------------------

class MultipointOperator final : public CoordinateOperator {
 public:
  MultipointOperator(double a, double b, Complex amplitude = {1.0, 0.0});

  double a() const { return a_; }
  double b() const { return b_; }
  Complex amplitude() const { return amplitude_; }
  /// Lattice spacing 2 pi / (b - a).
  double spacing() const;

  Complex eigenvalue(std::int64_t k) const;
  /// Lattice integer closest to lambda.
  std::int64_t nearest_index(ComplexPoint lambda) const;
  double distance_to_spectrum(ComplexPoint lambda) const;

  std::string_view kind() const override { return "multipoint"; }
  SpectralClass classify_point(ComplexPoint lambda, const Tolerance& tol) const override;
  double resolvent_norm(ComplexPoint lambda, const Tolerance& tol = {}) const override;
  double operator_norm() const override;
  std::vector<Complex> eigenvalues_up_to(double bound) const override;
  bool is_compact() const override { return false; }
  bool has_compact_resolvent() const override { return true; }
  /// Diagonal matrix of the n lattice points of smallest modulus, ordered
  /// k = 0, -1, 1, -2, 2, ...
  Eigen::MatrixXcd truncate(std::size_t n) const override;
  double truncation_radius(std::size_t n) const override;

 private:
  double a_;
  double b_;
  Complex amplitude_;
};

/// 2 k pi i / (b - a). Throws InvalidArgument when a >= b.
ComplexPoint multipoint_eigenvalue(std::int64_t k, double a, double b);

/// c exp(lambda_k (t - a)) for a <= t <= b.
Complex multipoint_eigenfunction_eval(std::int64_t k, double t, const MultipointOperator& op);

// ---------------------------------------------------------------------------
// Scalar ODE operator d/dt + s with u(b) = e^{i theta} u(a)
// ---------------------------------------------------------------------------

class VectorODEOperator final : public CoordinateOperator {
 public:
  VectorODEOperator(double s, double a, double b, double theta = 0.0);

  double s() const { return s_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double theta() const { return theta_; }

  Complex eigenvalue(std::int64_t k) const;
  double distance_to_spectrum(ComplexPoint lambda) const;
  /// Lattice indices ordered by eigenvalue modulus (ties: smaller k first).
  std::vector<std::int64_t> indices_by_modulus(std::size_t count) const;

  std::string_view kind() const override { return "ode"; }
  SpectralClass classify_point(ComplexPoint lambda, const Tolerance& tol) const override;
  double resolvent_norm(ComplexPoint lambda, const Tolerance& tol = {}) const override;
  double operator_norm() const override;
  std::vector<Complex> eigenvalues_up_to(double bound) const override;
  bool is_compact() const override { return false; }
  bool has_compact_resolvent() const override { return true; }
  Eigen::MatrixXcd truncate(std::size_t n) const override;
  double truncation_radius(std::size_t n) const override;

 private:
  double s_;
  double a_;
  double b_;
  double theta_;
};

/// s + i (theta + 2 k pi) / (b - a).
ComplexPoint ode_eigenvalue(std::int64_t k, const VectorODEOperator& op);

/// Upper bound on ||R_lambda(A)|| assembled from the integral estimates for the
/// two parts of the resolvent; requires re(lambda) < s and re(lambda) != 0.
double ode_resolvent_bound(ComplexPoint lambda, const VectorODEOperator& op);

// ---------------------------------------------------------------------------
// Unilateral right shift on l^2
// ---------------------------------------------------------------------------

/// Spectral parts are declared: residual on the open unit disk, continuous on
/// the unit circle, resolvent outside with ||R_lambda|| = 1/(|lambda| - 1).
class ShiftOperator final : public CoordinateOperator {
 public:
  std::string_view kind() const override { return "shift"; }
  SpectralClass classify_point(ComplexPoint lambda, const Tolerance& tol) const override;
  double resolvent_norm(ComplexPoint lambda, const Tolerance& tol = {}) const override;
  double operator_norm() const override { return 1.0; }
  std::vector<Complex> eigenvalues_up_to(double bound) const override;
  bool is_enumerable() const override { return false; }
  bool is_compact() const override { return false; }
  bool has_compact_resolvent() const override { return false; }
  Eigen::MatrixXcd truncate(std::size_t n) const override;
  double truncation_radius(std::size_t) const override { return 0.0; }
};

// ---------------------------------------------------------------------------
// Operator given only through declared spectral data
// ---------------------------------------------------------------------------

struct DeclaredSpectrum {
  std::vector<Complex> point;
  std::vector<Complex> continuous;
  std::vector<Complex> residual;
  std::optional<double> norm;  // unset: unbounded
  bool compact = false;
  bool compact_resolvent = false;
};

/// Spectral parts are finite point sets. The resolvent norm follows the
/// normal-operator rule 1/dist(lambda, declared spectrum).
class DeclaredSpectrumOperator final : public CoordinateOperator {
 public:
  explicit DeclaredSpectrumOperator(DeclaredSpectrum data);

  const DeclaredSpectrum& data() const { return data_; }

  std::string_view kind() const override { return "declared"; }
  SpectralClass classify_point(ComplexPoint lambda, const Tolerance& tol) const override;
  double resolvent_norm(ComplexPoint lambda, const Tolerance& tol = {}) const override;
  double operator_norm() const override;
  std::vector<Complex> eigenvalues_up_to(double bound) const override;
  bool is_compact() const override { return data_.compact; }
  bool has_compact_resolvent() const override { return data_.compact_resolvent; }
  Eigen::MatrixXcd truncate(std::size_t n) const override;
  double truncation_radius(std::size_t n) const override;

 private:
  DeclaredSpectrum data_;
  std::vector<Complex> sorted_point_;
};

}  // namespace specsum
