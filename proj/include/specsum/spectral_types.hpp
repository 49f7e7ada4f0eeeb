#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace specsum {

using Complex = std::complex<double>;

/// A point of the complex plane used as spectral parameter. Both components
/// are finite; construction rejects NaN and infinities.
class ComplexPoint {
 public:
  ComplexPoint() = default;
  ComplexPoint(double re, double im);
  explicit ComplexPoint(Complex z) : ComplexPoint(z.real(), z.imag()) {}

  double re() const { return value_.real(); }
  double im() const { return value_.imag(); }
  Complex value() const { return value_; }

  friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;

 private:
  Complex value_{0.0, 0.0};
};

enum class SpectralClass {
  PointSpectrum,
  ContinuousSpectrum,
  ResidualSpectrum,
  Resolvent,
  Inconclusive,
};

std::string_view to_string(SpectralClass c);

/// Supremum of a nonnegative sequence as far as it can be certified.
class SupResult {
 public:
  enum class Kind { Finite, Infinite, LowerBoundOnly };

  static SupResult finite(double value);
  static SupResult infinite() { return SupResult(Kind::Infinite, 0.0); }
  static SupResult lower_bound_only(double value);

  Kind kind() const { return kind_; }
  // Meaningful for Finite and LowerBoundOnly.
  double value() const { return value_; }

  bool is_finite() const { return kind_ == Kind::Finite; }

  friend bool operator==(const SupResult&, const SupResult&) = default;

 private:
  SupResult(Kind k, double v) : kind_(k), value_(v) {}
  Kind kind_ = Kind::Finite;
  double value_ = 0.0;
};

/// Numerical thresholds shared by classification and oracle comparisons.
struct Tolerance {
  // Distance at or below which a point is taken to equal a spectral point.
  double eps_membership = 1e-9;
  // Resolvent norm above which a monotonically growing tail is flagged divergent.
  double eps_div = 1e8;

  void validate() const;
};

struct CoordinateVerdict {
  std::size_t index = 0;  // 1-based coordinate index
  SpectralClass spectral_class = SpectralClass::Inconclusive;

  friend bool operator==(const CoordinateVerdict&, const CoordinateVerdict&) = default;
};

struct DirectSumClassification {
  ComplexPoint point;
  SpectralClass spectral_class = SpectralClass::Inconclusive;
  std::optional<std::size_t> witness_index;
  SupResult resolvent_sup = SupResult::lower_bound_only(0.0);
  // Every explicit coordinate, plus the tail coordinate that decided the
  // verdict if any. Several PointSpectrum entries mean the coordinates share
  // the spectral point; the verdict is unaffected.
  std::vector<CoordinateVerdict> per_coordinate;

  friend bool operator==(const DirectSumClassification&, const DirectSumClassification&) = default;
};

}  // namespace specsum
