#include "specsum/spectral_types.hpp"

#include <cmath>

#include "specsum/errors.hpp"

namespace specsum {

ComplexPoint::ComplexPoint(double re, double im) : value_(re, im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw InvalidArgument("spectral parameter must have finite real and imaginary parts");
  }
}

std::string_view to_string(SpectralClass c) {
  switch (c) {
    case SpectralClass::PointSpectrum: return "PointSpectrum";
    case SpectralClass::ContinuousSpectrum: return "ContinuousSpectrum";
    case SpectralClass::ResidualSpectrum: return "ResidualSpectrum";
    case SpectralClass::Resolvent: return "Resolvent";
    case SpectralClass::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

SupResult SupResult::finite(double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw InvalidArgument("finite supremum must be a nonnegative finite number");
  }
  return SupResult(Kind::Finite, value);
}

SupResult SupResult::lower_bound_only(double value) {
  if (!(value >= 0.0)) throw InvalidArgument("supremum lower bound must be nonnegative");
  return SupResult(Kind::LowerBoundOnly, value);
}

void Tolerance::validate() const {
  if (!(eps_membership > 0.0) || !std::isfinite(eps_membership)) {
    throw InvalidArgument("eps_membership must be positive");
  }
  if (!(eps_div > 0.0) || !std::isfinite(eps_div)) {
    throw InvalidArgument("eps_div must be positive");
  }
}

}  // namespace specsum
