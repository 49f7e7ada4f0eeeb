#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "specsum/coordinate_operator.hpp"

namespace specsum {

/// Declared n -> infinity behaviour of a scalar sequence attached to the tail
/// (operator norms, resolvent norms at a point, first eigenvalue moduli).
/// Declared limits are monotone: LimitZero decreases, BoundedBy(v) approaches
/// the nonzero value v, MonotoneGrowth increases without a certified limit.
class DeclaredLimit {
 public:
  enum class Kind { LimitZero, LimitInfinity, BoundedBy, MonotoneGrowth, Unknown };

  static DeclaredLimit zero() { return DeclaredLimit(Kind::LimitZero, 0.0); }
  static DeclaredLimit infinity() { return DeclaredLimit(Kind::LimitInfinity, 0.0); }
  static DeclaredLimit bounded_by(double value);
  static DeclaredLimit monotone_growth() { return DeclaredLimit(Kind::MonotoneGrowth, 0.0); }
  static DeclaredLimit unknown() { return DeclaredLimit(Kind::Unknown, 0.0); }

  Kind kind() const { return kind_; }
  double bound() const { return bound_; }

  friend bool operator==(const DeclaredLimit&, const DeclaredLimit&) = default;

 private:
  DeclaredLimit(Kind k, double b) : kind_(k), bound_(b) {}
  Kind kind_ = Kind::Unknown;
  double bound_ = 0.0;
};

struct TailLimits {
  DeclaredLimit operator_norm = DeclaredLimit::unknown();
  DeclaredLimit resolvent_norm = DeclaredLimit::unknown();
  DeclaredLimit first_eigenvalue = DeclaredLimit::unknown();
};

/// Certified information about sup_{n >= first} of a tail sequence.
struct TailBound {
  DeclaredLimit limit = DeclaredLimit::unknown();
  std::optional<double> sup;  // may be +inf; unset when not certified
};

/// Where a point sits with respect to the tail coordinates n >= first.
struct TailMembership {
  enum class Kind { AllResolvent, Point, Residual, Continuous, Unknown };
  Kind kind = Kind::Unknown;
  std::size_t index = 0;  // witnessing coordinate for Point/Residual/Continuous
};

/// Finite encoding of the coordinates beyond an explicit prefix.
///
/// A finite family has no tail. A parametric tail generates coordinate n on
/// demand and answers sup/limit queries from its declared limits; optional
/// hooks replace the generic answers with exact analytic ones.
class TailRule {
 public:
  using Generator = std::function<CoordinatePtr(std::size_t n)>;
  using Locator = std::function<TailMembership(ComplexPoint, const Tolerance&, std::size_t first)>;
  using ResolventSup = std::function<TailBound(ComplexPoint, const Tolerance&, std::size_t first)>;

  static TailRule finite() { return TailRule(); }
  static TailRule parametric(Generator generator, TailLimits limits);

  TailRule&& with_locator(Locator locator) &&;
  TailRule&& with_resolvent_sup(ResolventSup hook) &&;

  /// Same generator, answering only from `limits` (hooks dropped).
  TailRule declared(TailLimits limits) const;

  bool is_finite() const { return !generator_; }
  const TailLimits& limits() const { return limits_; }

  CoordinatePtr member(std::size_t n) const;

  /// Spectral position of lambda among coordinates n >= first. Without a
  /// locator, members are scanned while the declared first-eigenvalue growth
  /// guarantees later members stay clear of lambda.
  TailMembership locate(ComplexPoint lambda, const Tolerance& tol, std::size_t first) const;

  /// sup_{n >= first} ||R_lambda(A_n)||; assumes lambda in every tail resolvent set.
  TailBound resolvent_sup(ComplexPoint lambda, const Tolerance& tol, std::size_t first) const;

  /// sup_{n >= first} ||A_n||.
  TailBound operator_norm_sup(std::size_t first) const;

  /// Upper bound on how many members a scan may visit.
  static constexpr std::size_t kScanLimit = 100000;

 private:
  Generator generator_;
  TailLimits limits_;
  Locator locator_;
  ResolventSup resolvent_hook_;
};

/// A = (+)_n A_n: an explicit prefix A_1..A_P followed by a tail rule.
class OperatorFamily {
 public:
  OperatorFamily(std::vector<CoordinatePtr> prefix, TailRule tail);

  std::size_t prefix_size() const { return prefix_.size(); }
  const std::vector<CoordinatePtr>& prefix() const { return prefix_; }
  const TailRule& tail() const { return tail_; }
  bool is_finite() const { return tail_.is_finite(); }

  /// Coordinate n (1-based), drawn from the prefix or the tail generator.
  CoordinatePtr coordinate(std::size_t n) const;

  /// Sub-family of the first m coordinates with no tail.
  OperatorFamily leading(std::size_t m) const;

 private:
  std::vector<CoordinatePtr> prefix_;
  TailRule tail_;
};

// Parametric tails with closed-form sups and locators.

/// A_n = multiplication by k n^p on C.
TailRule scalar_power_tail(double k, double p);

/// A_n = d/dt + s_n on (a, b) with u(b) = e^{i theta} u(a), s_n = s0 n^p, p > 0.
TailRule ode_power_tail(double s0, double p, double a, double b, double theta = 0.0);

/// A_n = diag(k0 ratio^n m^alpha + beta)_m with ratio > 1.
TailRule diagonal_geometric_tail(double k0, double ratio, double alpha, double beta = 0.0);

}  // namespace specsum
