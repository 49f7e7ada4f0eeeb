#include "specsum/operator_family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <utility>

#include "specsum/errors.hpp"
#include "specsum/operator_models.hpp"

namespace specsum {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kGrowthSamples = 1000;

double reciprocal_or_inf(double distance, const Tolerance& tol) {
  return distance <= tol.eps_membership ? kInf : 1.0 / distance;
}

// Integer candidates n >= first bracketing the real solution of f(n) = target.
std::vector<double> bracket(double nstar, std::size_t first) {
  std::vector<double> out{static_cast<double>(first)};
  if (std::isfinite(nstar) && nstar > 0.0) {
    for (double c : {std::floor(nstar), std::floor(nstar) + 1.0}) {
      if (c >= static_cast<double>(first)) out.push_back(c);
    }
  }
  return out;
}

}  // namespace

DeclaredLimit DeclaredLimit::bounded_by(double value) {
  if (!std::isfinite(value) || !(value >= 0.0)) {
    throw InvalidArgument("BoundedBy limit needs a finite nonnegative value");
  }
  if (value == 0.0) return zero();
  return DeclaredLimit(Kind::BoundedBy, value);
}

TailRule TailRule::parametric(Generator generator, TailLimits limits) {
  if (!generator) throw InvalidArgument("parametric tail needs a generator");
  TailRule rule;
  rule.generator_ = std::move(generator);
  rule.limits_ = limits;
  return rule;
}

TailRule&& TailRule::with_locator(Locator locator) && {
  locator_ = std::move(locator);
  return std::move(*this);
}

TailRule&& TailRule::with_resolvent_sup(ResolventSup hook) && {
  resolvent_hook_ = std::move(hook);
  return std::move(*this);
}

TailRule TailRule::declared(TailLimits limits) const {
  if (is_finite()) throw InvalidArgument("finite family has no tail to declare limits for");
  return parametric(generator_, limits);
}

CoordinatePtr TailRule::member(std::size_t n) const {
  if (is_finite()) throw InvalidArgument("finite family has no tail members");
  CoordinatePtr op = generator_(n);
  if (!op) throw InvalidArgument("tail generator returned no operator");
  return op;
}

TailMembership TailRule::locate(ComplexPoint lambda, const Tolerance& tol, std::size_t first) const {
  using Kind = TailMembership::Kind;
  if (is_finite()) return {Kind::AllResolvent, 0};
  if (locator_) return locator_(lambda, tol, first);
  if (limits_.first_eigenvalue.kind() != DeclaredLimit::Kind::LimitInfinity) return {Kind::Unknown, 0};

  // First eigenvalues grow monotonically: once a member has nothing inside the
  // disc |z| <= |lambda| + eps, no later member does either.
  const double radius = std::abs(lambda.value()) + tol.eps_membership;
  TailMembership other{Kind::AllResolvent, 0};
  for (std::size_t n = first; n < first + kScanLimit; ++n) {
    const CoordinatePtr op = member(n);
    if (!op->is_enumerable()) return {Kind::Unknown, 0};
    switch (op->classify_point(lambda, tol)) {
      case SpectralClass::PointSpectrum:
        return {Kind::Point, n};
      case SpectralClass::ResidualSpectrum:
        if (other.kind != Kind::Residual) other = {Kind::Residual, n};
        break;
      case SpectralClass::ContinuousSpectrum:
        if (other.kind == Kind::AllResolvent) other = {Kind::Continuous, n};
        break;
      case SpectralClass::Inconclusive:
        return {Kind::Unknown, 0};
      case SpectralClass::Resolvent:
        break;
    }
    if (op->eigenvalues_up_to(radius).empty()) return other;
  }
  return {Kind::Unknown, 0};
}

TailBound TailRule::resolvent_sup(ComplexPoint lambda, const Tolerance& tol, std::size_t first) const {
  if (is_finite()) return {DeclaredLimit::zero(), 0.0};
  if (resolvent_hook_) return resolvent_hook_(lambda, tol, first);

  const DeclaredLimit limit = limits_.resolvent_norm;
  switch (limit.kind()) {
    case DeclaredLimit::Kind::LimitZero:
      return {limit, member(first)->resolvent_norm(lambda, tol)};
    case DeclaredLimit::Kind::BoundedBy:
      return {limit, std::max(member(first)->resolvent_norm(lambda, tol), limit.bound())};
    case DeclaredLimit::Kind::LimitInfinity:
      return {limit, kInf};
    case DeclaredLimit::Kind::MonotoneGrowth:
      for (std::size_t n = first; n < first + kGrowthSamples; ++n) {
        if (member(n)->resolvent_norm(lambda, tol) > tol.eps_div) return {limit, kInf};
      }
      return {limit, std::nullopt};
    case DeclaredLimit::Kind::Unknown:
      break;
  }
  return {limit, std::nullopt};
}

TailBound TailRule::operator_norm_sup(std::size_t first) const {
  if (is_finite()) return {DeclaredLimit::zero(), 0.0};
  const DeclaredLimit limit = limits_.operator_norm;
  switch (limit.kind()) {
    case DeclaredLimit::Kind::LimitZero:
      return {limit, member(first)->operator_norm()};
    case DeclaredLimit::Kind::BoundedBy:
      return {limit, std::max(member(first)->operator_norm(), limit.bound())};
    case DeclaredLimit::Kind::LimitInfinity:
      return {limit, kInf};
    case DeclaredLimit::Kind::MonotoneGrowth:
    case DeclaredLimit::Kind::Unknown:
      break;
  }
  return {limit, std::nullopt};
}

// ---------------------------------------------------------------------------

OperatorFamily::OperatorFamily(std::vector<CoordinatePtr> prefix, TailRule tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  if (prefix_.empty()) throw InvalidArgument("operator family needs at least one explicit coordinate");
  for (const auto& op : prefix_) {
    if (!op) throw InvalidArgument("operator family contains an empty coordinate");
  }
}

CoordinatePtr OperatorFamily::coordinate(std::size_t n) const {
  if (n == 0) throw InvalidArgument("coordinate indices start at 1");
  if (n <= prefix_.size()) return prefix_[n - 1];
  if (tail_.is_finite()) throw InvalidArgument("coordinate index beyond a finite family");
  return tail_.member(n);
}

OperatorFamily OperatorFamily::leading(std::size_t m) const {
  if (m == 0) throw InvalidArgument("leading sub-family needs at least one coordinate");
  std::vector<CoordinatePtr> ops;
  ops.reserve(m);
  for (std::size_t n = 1; n <= m; ++n) ops.push_back(coordinate(n));
  return OperatorFamily(std::move(ops), TailRule::finite());
}

// ---------------------------------------------------------------------------

TailRule scalar_power_tail(double k, double p) {
  if (!std::isfinite(k) || k == 0.0) throw InvalidArgument("scalar tail k must be finite and nonzero");
  if (!std::isfinite(p)) throw InvalidArgument("scalar tail exponent must be finite");

  auto value = [k, p](double n) { return k * std::pow(n, p); };
  const DeclaredLimit growth = p < 0.0   ? DeclaredLimit::zero()
                               : p > 0.0 ? DeclaredLimit::infinity()
                                         : DeclaredLimit::bounded_by(std::abs(k));
  TailLimits limits{growth, DeclaredLimit::unknown(), growth};

  auto generator = [value](std::size_t n) -> CoordinatePtr {
    return std::make_shared<FiniteMatrixOperator>(FiniteMatrixOperator::scalar(value(static_cast<double>(n))));
  };
  // Solves k n^p = re(lambda) for n.
  auto crossing = [k, p](ComplexPoint lambda) {
    const double t = lambda.re() / k;
    return (p != 0.0 && t > 0.0) ? std::pow(t, 1.0 / p) : std::numeric_limits<double>::quiet_NaN();
  };

  auto locator = [value, crossing](ComplexPoint lambda, const Tolerance& tol, std::size_t first) {
    for (double n : bracket(crossing(lambda), first)) {
      if (std::abs(value(n) - lambda.value()) <= tol.eps_membership) {
        return TailMembership{TailMembership::Kind::Point, static_cast<std::size_t>(n)};
      }
    }
    return TailMembership{TailMembership::Kind::AllResolvent, 0};
  };

  auto resolvent = [k, p, value, crossing](ComplexPoint lambda, const Tolerance& tol, std::size_t first) {
    double dist = std::numeric_limits<double>::infinity();
    for (double n : bracket(crossing(lambda), first)) dist = std::min(dist, std::abs(value(n) - lambda.value()));
    DeclaredLimit limit = DeclaredLimit::zero();
    if (p < 0.0) {
      // Entries accumulate at 0: the infimum includes |lambda|.
      const double at_limit = std::abs(lambda.value());
      dist = std::min(dist, at_limit);
      limit = at_limit <= tol.eps_membership ? DeclaredLimit::infinity()
                                             : DeclaredLimit::bounded_by(1.0 / at_limit);
    } else if (p == 0.0) {
      const double d = std::abs(k - lambda.value());
      limit = d <= tol.eps_membership ? DeclaredLimit::infinity() : DeclaredLimit::bounded_by(1.0 / d);
    }
    return TailBound{limit, reciprocal_or_inf(dist, tol)};
  };

  return TailRule::parametric(generator, limits).with_locator(locator).with_resolvent_sup(resolvent);
}

TailRule ode_power_tail(double s0, double p, double a, double b, double theta) {
  if (!std::isfinite(s0) || !(s0 > 0.0)) throw InvalidArgument("ODE tail s0 must be positive");
  if (!std::isfinite(p) || !(p > 0.0)) throw InvalidArgument("ODE tail exponent must be positive");
  // Validates a, b, theta.
  const VectorODEOperator probe(s0, a, b, theta);

  auto s_of = [s0, p](double n) { return s0 * std::pow(n, p); };
  auto generator = [s_of, a, b, theta](std::size_t n) -> CoordinatePtr {
    return std::make_shared<VectorODEOperator>(s_of(static_cast<double>(n)), a, b, theta);
  };
  TailLimits limits{DeclaredLimit::infinity(), DeclaredLimit::zero(), DeclaredLimit::infinity()};

  auto resolvent = [s0, p, s_of, probe](ComplexPoint lambda, const Tolerance& tol, std::size_t first) {
    // Every member shares the imaginary lattice; only the real offset s_n moves.
    const double imag_gap = probe.distance_to_spectrum(ComplexPoint(probe.s(), lambda.im()));
    const double nstar = lambda.re() > 0.0 ? std::pow(lambda.re() / s0, 1.0 / p) : 0.0;
    double real_gap = std::numeric_limits<double>::infinity();
    for (double n : bracket(nstar, first)) real_gap = std::min(real_gap, std::abs(lambda.re() - s_of(n)));
    return TailBound{DeclaredLimit::zero(), reciprocal_or_inf(std::hypot(real_gap, imag_gap), tol)};
  };

  return TailRule::parametric(generator, limits).with_resolvent_sup(resolvent);
}

TailRule diagonal_geometric_tail(double k0, double ratio, double alpha, double beta) {
  if (!std::isfinite(k0) || !(k0 > 0.0)) throw InvalidArgument("diagonal tail k0 must be positive");
  if (!std::isfinite(ratio) || !(ratio > 1.0)) throw InvalidArgument("diagonal tail ratio must exceed 1");
  if (!std::isfinite(alpha) || !(alpha > 0.0)) throw InvalidArgument("diagonal tail alpha must be positive");
  if (!std::isfinite(beta)) throw InvalidArgument("diagonal tail beta must be finite");

  auto scale = [k0, ratio](double n) { return k0 * std::pow(ratio, n); };
  auto generator = [scale, alpha, beta](std::size_t n) -> CoordinatePtr {
    return std::make_shared<DiagonalOperator>(PowerLawEntries{scale(static_cast<double>(n)), alpha, beta});
  };
  TailLimits limits{DeclaredLimit::infinity(), DeclaredLimit::zero(), DeclaredLimit::infinity()};

  auto resolvent = [scale, alpha, beta](ComplexPoint lambda, const Tolerance& tol, std::size_t first) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t n = first; n < first + TailRule::kScanLimit; ++n) {
      // Entries of member n are >= scale(n) + beta, growing with n.
      if (scale(static_cast<double>(n)) + beta - std::abs(lambda.value()) > best) {
        return TailBound{DeclaredLimit::zero(), reciprocal_or_inf(best, tol)};
      }
      const DiagonalOperator op(PowerLawEntries{scale(static_cast<double>(n)), alpha, beta});
      best = std::min(best, op.distance_to_spectrum(lambda));
    }
    return TailBound{DeclaredLimit::zero(), std::nullopt};
  };

  return TailRule::parametric(generator, limits).with_resolvent_sup(resolvent);
}

}  // namespace specsum
