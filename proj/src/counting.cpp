#include "specsum/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "specsum/errors.hpp"

namespace specsum {

namespace {

struct Contribution {
  Complex z;
  std::size_t coordinate;
};

bool any_overlap(std::vector<Contribution> all, double eps) {
  std::sort(all.begin(), all.end(), [](const Contribution& a, const Contribution& b) { return a.z.real() < b.z.real(); });
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size() && all[j].z.real() - all[i].z.real() <= eps; ++j) {
      if (all[i].coordinate != all[j].coordinate && std::abs(all[i].z - all[j].z) <= eps) return true;
    }
  }
  return false;
}

// Visits every coordinate with eigenvalues of modulus <= bound.
template <typename Visit>
void for_each_contributing(const OperatorFamily& family, double bound, Visit&& visit) {
  for (std::size_t n = 1; n <= family.prefix_size(); ++n) {
    const auto& op = *family.prefix()[n - 1];
    if (!op.is_enumerable()) {
      throw UnsupportedModel("coordinate " + std::to_string(n) + " (" + std::string(op.kind()) +
                             ") cannot enumerate eigenvalues");
    }
    visit(n, op.eigenvalues_up_to(bound));
  }
  if (family.is_finite()) return;
  if (family.tail().limits().first_eigenvalue.kind() != DeclaredLimit::Kind::LimitInfinity) {
    throw UncertifiableTail("tail does not certify finitely many eigenvalues below the threshold");
  }
  const std::size_t first = family.prefix_size() + 1;
  for (std::size_t n = first; n < first + TailRule::kScanLimit; ++n) {
    const CoordinatePtr op = family.tail().member(n);
    if (!op->is_enumerable()) throw UnsupportedModel("tail coordinates cannot enumerate eigenvalues");
    auto eigs = op->eigenvalues_up_to(bound);
    if (eigs.empty()) return;
    visit(n, std::move(eigs));
  }
  throw UncertifiableTail("tail still contributes eigenvalues after the scan limit");
}

}  // namespace

std::size_t counting_function(const CoordinateOperator& op, double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0) throw InvalidArgument("counting threshold must be finite and >= 0");
  if (!op.is_enumerable()) {
    throw UnsupportedModel(std::string(op.kind()) + " operator cannot enumerate eigenvalues");
  }
  return op.eigenvalues_up_to(lambda).size();
}

MergedCount merged_counting(const OperatorFamily& family, double lambda, const Tolerance& tol) {
  if (!std::isfinite(lambda) || lambda < 0.0) throw InvalidArgument("counting threshold must be finite and >= 0");
  tol.validate();
  std::vector<Contribution> all;
  for_each_contributing(family, lambda, [&](std::size_t n, const std::vector<Complex>& eigs) {
    for (const Complex& z : eigs) all.push_back({z, n});
  });
  return {all.size(), any_overlap(std::move(all), tol.eps_membership)};
}

std::vector<double> merged_eigenvalue_moduli(const OperatorFamily& family, std::size_t count) {
  if (count == 0) return {};
  std::vector<double> moduli;
  for (double bound = 1.0; bound < 1e15; bound *= 2.0) {
    moduli.clear();
    for_each_contributing(family, bound, [&](std::size_t, const std::vector<Complex>& eigs) {
      for (const Complex& z : eigs) moduli.push_back(std::abs(z));
    });
    if (moduli.size() >= count) {
      std::sort(moduli.begin(), moduli.end());
      moduli.resize(count);
      return moduli;
    }
  }
  throw UnsupportedModel("family has fewer than " + std::to_string(count) + " eigenvalues within reach");
}

CountingTable counting_table(const OperatorFamily& family, const std::vector<double>& thresholds,
                             const Tolerance& tol, std::string source) {
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (!std::isfinite(thresholds[i]) || thresholds[i] < 0.0) {
      throw InvalidArgument("counting thresholds must be finite and >= 0");
    }
    if (i > 0 && !(thresholds[i] > thresholds[i - 1])) throw InvalidArgument("counting thresholds must increase");
  }
  CountingTable table;
  table.source = std::move(source);
  table.thresholds = thresholds;
  for (double t : thresholds) {
    const MergedCount c = merged_counting(family, t, tol);
    table.counts.push_back(c.count);
    table.overlaps.push_back(c.overlap);
  }
  return table;
}

std::vector<double> geometric_grid(double start, double ratio, std::size_t count) {
  if (!std::isfinite(start) || !(start > 0.0)) throw InvalidArgument("geometric grid start must be positive");
  if (!std::isfinite(ratio) || !(ratio > 1.0)) throw InvalidArgument("geometric grid ratio must exceed 1");
  std::vector<double> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(start * std::pow(ratio, static_cast<double>(i)));
  return out;
}

// ---------------------------------------------------------------------------

AsymptoticBoundSpec::AsymptoticBoundSpec(std::vector<BoundTerm> terms, std::optional<GeometricTail> tail)
    : terms_(std::move(terms)), tail_(tail) {
  if (terms_.empty()) throw InvalidArgument("bound spec needs at least one term");
  for (const auto& t : terms_) {
    if (!std::isfinite(t.c) || !(t.c > 0.0)) throw InvalidArgument("bound spec c_n must be positive");
    if (!std::isfinite(t.alpha) || !(t.alpha > 0.0)) throw InvalidArgument("bound spec alpha_n must be positive");
  }
  if (tail_) {
    if (!(tail_->ratio > 0.0 && tail_->ratio < 1.0)) throw InvalidArgument("bound tail ratio must lie in (0, 1)");
    if (!std::isfinite(tail_->alpha) || !(tail_->alpha > 0.0)) throw InvalidArgument("bound tail alpha must be positive");
  }
  alpha_ = terms_[0].alpha;
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (terms_[i].alpha < alpha_) {
      alpha_ = terms_[i].alpha;
      q_ = i + 1;
    }
  }
  if (tail_ && tail_->alpha < alpha_) {
    throw InvalidArgument("bound tail alpha must not undercut the explicit terms");
  }
}

double AsymptoticBoundSpec::c() const {
  const auto& t = terms_[q_ - 1];
  return std::pow(t.c, -1.0 / t.alpha);
}

double AsymptoticBoundSpec::limit_constant() const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    if (t.alpha == alpha_) sum += std::pow(t.c, -1.0 / t.alpha);
  }
  if (tail_ && tail_->alpha == alpha_) sum += tail_sum();
  return sum;
}

double AsymptoticBoundSpec::normalized_bound(double lambda) const {
  if (!std::isfinite(lambda) || !(lambda > 1.0)) throw InvalidArgument("counting bound needs lambda > 1");
  double sum = 0.0;
  for (const auto& t : terms_) {
    sum += std::pow(t.c, -1.0 / t.alpha) * std::pow(lambda, 1.0 / t.alpha - 1.0 / alpha_);
  }
  if (tail_) sum += tail_sum() * std::pow(lambda, 1.0 / tail_->alpha - 1.0 / alpha_);
  return sum;
}

double AsymptoticBoundSpec::tail_sum() const {
  if (!tail_) return 0.0;
  const auto& last = terms_.back();
  return std::pow(last.c, -1.0 / last.alpha) * tail_->ratio / (1.0 - tail_->ratio);
}

double AsymptoticBoundSpec::series_value() const {
  double sum = tail_sum();
  for (const auto& t : terms_) sum += std::pow(t.c, -1.0 / t.alpha);
  return sum;
}

double counting_bound(const AsymptoticBoundSpec& spec, double lambda) {
  return std::pow(lambda, 1.0 / spec.alpha()) * spec.normalized_bound(lambda);
}

// ---------------------------------------------------------------------------

FitRange default_fit_range(std::size_t n) {
  if (n < 2) throw InvalidArgument("fit needs at least two values");
  return {n / 2 + 1, n};
}

AsymptoticFit fit_asymptotic_exponent(const std::vector<double>& moduli, std::optional<FitRange> range) {
  if (moduli.size() < 8) throw InvalidArgument("fit needs at least 8 eigenvalue moduli");
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (!std::isfinite(moduli[i]) || !(moduli[i] > 0.0)) throw InvalidArgument("fit needs positive finite moduli");
    if (i > 0 && moduli[i] < moduli[i - 1]) throw InvalidArgument("fit needs nondecreasing moduli");
  }
  const FitRange r = range.value_or(default_fit_range(moduli.size()));
  if (r.lo < 1 || r.hi > moduli.size() || r.hi < r.lo + 1) {
    throw InvalidArgument("fit range must hold at least two indices within the sequence");
  }

  const auto count = static_cast<double>(r.hi - r.lo + 1);
  double mx = 0.0, my = 0.0;
  for (std::size_t n = r.lo; n <= r.hi; ++n) {
    mx += std::log(static_cast<double>(n));
    my += std::log(moduli[n - 1]);
  }
  mx /= count;
  my /= count;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t n = r.lo; n <= r.hi; ++n) {
    const double dx = std::log(static_cast<double>(n)) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(moduli[n - 1]) - my);
  }
  const double slope = sxy / sxx;
  if (!(slope > 0.0)) throw InvalidArgument("fitted exponent is not positive");
  const double intercept = my - slope * mx;

  double ss = 0.0;
  for (std::size_t n = r.lo; n <= r.hi; ++n) {
    const double e = std::log(moduli[n - 1]) - (intercept + slope * std::log(static_cast<double>(n)));
    ss += e * e;
  }
  return {std::exp(intercept), slope, r, std::sqrt(ss / count)};
}

BoundCheck verify_eigenvalue_bound(const std::vector<double>& moduli, double gamma, double alpha, std::size_t n_min) {
  for (std::size_t n = std::max<std::size_t>(n_min, 1); n <= moduli.size(); ++n) {
    if (moduli[n - 1] > gamma * std::pow(static_cast<double>(n), alpha)) return {false, n};
  }
  return {true, std::nullopt};
}

}  // namespace specsum
