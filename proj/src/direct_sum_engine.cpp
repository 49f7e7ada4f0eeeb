#include "specsum/direct_sum_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "specsum/errors.hpp"
#include "specsum/truncation_oracle.hpp"

namespace specsum {

std::string_view to_string(BoundednessResult::Kind k) {
  switch (k) {
    case BoundednessResult::Kind::Bounded: return "Bounded";
    case BoundednessResult::Kind::Unbounded: return "Unbounded";
    case BoundednessResult::Kind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string_view to_string(CompactnessVerdict v) {
  switch (v) {
    case CompactnessVerdict::Compact: return "Compact";
    case CompactnessVerdict::NotCompact: return "NotCompact";
    case CompactnessVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::string_view to_string(DiscretenessVerdict v) {
  switch (v) {
    case DiscretenessVerdict::Discrete: return "Discrete";
    case DiscretenessVerdict::NotCertified: return "NotCertified";
    case DiscretenessVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

BoundednessResult is_bounded(const OperatorFamily& family) {
  double norm = 0.0;
  for (const auto& op : family.prefix()) {
    const double a = op->operator_norm();
    if (std::isinf(a)) return {BoundednessResult::Kind::Unbounded, 0.0};
    norm = std::max(norm, a);
  }
  const TailBound tail = family.tail().operator_norm_sup(family.prefix_size() + 1);
  if (tail.limit.kind() == DeclaredLimit::Kind::LimitInfinity) return {BoundednessResult::Kind::Unbounded, 0.0};
  if (!tail.sup) return {BoundednessResult::Kind::Inconclusive, 0.0};
  if (std::isinf(*tail.sup)) return {BoundednessResult::Kind::Unbounded, 0.0};
  return {BoundednessResult::Kind::Bounded, std::max(norm, *tail.sup)};
}

CompactnessVerdict is_compact(const OperatorFamily& family) {
  for (const auto& op : family.prefix()) {
    if (!op->is_compact()) return CompactnessVerdict::NotCompact;
  }
  if (family.is_finite()) return CompactnessVerdict::Compact;
  if (!family.tail().member(family.prefix_size() + 1)->is_compact()) return CompactnessVerdict::NotCompact;
  switch (family.tail().limits().operator_norm.kind()) {
    case DeclaredLimit::Kind::LimitZero: return CompactnessVerdict::Compact;
    case DeclaredLimit::Kind::BoundedBy:
    case DeclaredLimit::Kind::LimitInfinity:
    case DeclaredLimit::Kind::MonotoneGrowth: return CompactnessVerdict::NotCompact;
    case DeclaredLimit::Kind::Unknown: break;
  }
  return CompactnessVerdict::Inconclusive;
}

DiscretenessResult has_discrete_spectrum(const OperatorFamily& family, ComplexPoint lambda, const Tolerance& tol) {
  tol.validate();
  DiscretenessResult out;
  bool compact_resolvents = true;
  auto check_resolvent = [&](const CoordinateOperator& op, std::size_t n) {
    if (!op.has_compact_resolvent()) {
      compact_resolvents = false;
      out.warnings.push_back("coordinate " + std::to_string(n) +
                             " has no compact resolvent, so A cannot have discrete spectrum");
    }
  };

  for (std::size_t n = 1; n <= family.prefix_size(); ++n) {
    const auto& op = *family.prefix()[n - 1];
    if (op.classify_point(lambda, tol) != SpectralClass::Resolvent) {
      throw SpectrumHit("candidate point lies in the spectrum of coordinate " + std::to_string(n));
    }
    check_resolvent(op, n);
  }

  if (family.is_finite()) {
    out.verdict = compact_resolvents ? DiscretenessVerdict::Discrete : DiscretenessVerdict::NotCertified;
    return out;
  }

  const std::size_t first = family.prefix_size() + 1;
  check_resolvent(*family.tail().member(first), first);
  const TailMembership where = family.tail().locate(lambda, tol, first);
  if (where.kind == TailMembership::Kind::Unknown) {
    out.verdict = DiscretenessVerdict::Inconclusive;
    return out;
  }
  if (where.kind != TailMembership::Kind::AllResolvent) {
    out.warnings.push_back("candidate point lies in the spectrum of coordinate " + std::to_string(where.index));
    out.verdict = DiscretenessVerdict::NotCertified;
    return out;
  }
  if (!compact_resolvents) {
    out.verdict = DiscretenessVerdict::NotCertified;
    return out;
  }

  switch (family.tail().resolvent_sup(lambda, tol, first).limit.kind()) {
    case DeclaredLimit::Kind::LimitZero: out.verdict = DiscretenessVerdict::Discrete; break;
    case DeclaredLimit::Kind::Unknown: out.verdict = DiscretenessVerdict::Inconclusive; break;
    default: out.verdict = DiscretenessVerdict::NotCertified; break;
  }
  return out;
}

ResolventAssembly assemble_resolvent_truncation(const OperatorFamily& family, ComplexPoint lambda, std::size_t m,
                                                std::size_t n_per_block, const Tolerance& tol) {
  tol.validate();
  if (m == 0) throw InvalidArgument("resolvent assembly needs m >= 1");
  if (n_per_block == 0) throw InvalidArgument("resolvent assembly needs a block size >= 1");

  ResolventAssembly out;
  out.lambda = lambda;
  for (std::size_t n = 1; n <= m; ++n) {
    Eigen::MatrixXcd a = family.coordinate(n)->truncate(n_per_block);
    Eigen::MatrixXcd shifted = a;
    shifted.diagonal().array() -= lambda.value();
    const double smin = smallest_singular_value(shifted);
    if (smin <= tol.eps_membership) {
      throw SpectrumHit("truncated block " + std::to_string(n) + " is singular at the requested point");
    }
    out.blocks.push_back(Eigen::FullPivLU<Eigen::MatrixXcd>(shifted).inverse());
    out.operators.push_back(std::move(a));
  }
  out.assembled = block_diag(out.blocks);
  out.assembled_operator = block_diag(out.operators);
  return out;
}

std::optional<double> resolvent_tail_norm(const OperatorFamily& family, ComplexPoint lambda, std::size_t m,
                                          const Tolerance& tol) {
  tol.validate();
  double prefix_max = 0.0;
  for (std::size_t n = m + 1; n <= family.prefix_size(); ++n) {
    prefix_max = std::max(prefix_max, family.prefix()[n - 1]->resolvent_norm(lambda, tol));
  }
  if (family.is_finite()) return prefix_max;
  const TailBound tail = family.tail().resolvent_sup(lambda, tol, std::max(m, family.prefix_size()) + 1);
  if (!tail.sup) return std::nullopt;
  return std::max(prefix_max, *tail.sup);
}

}  // namespace specsum
