#include "specsum/spectral_core.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <thread>

#include "specsum/errors.hpp"

namespace specsum {

namespace {

SupResult combine(double prefix_max, const TailBound& tail) {
  if (!tail.sup) return SupResult::lower_bound_only(prefix_max);
  if (std::isinf(*tail.sup)) return SupResult::infinite();
  return SupResult::finite(std::max(prefix_max, *tail.sup));
}

SpectralClass from_membership(TailMembership::Kind kind) {
  switch (kind) {
    case TailMembership::Kind::Point: return SpectralClass::PointSpectrum;
    case TailMembership::Kind::Residual: return SpectralClass::ResidualSpectrum;
    case TailMembership::Kind::Continuous: return SpectralClass::ContinuousSpectrum;
    case TailMembership::Kind::AllResolvent: return SpectralClass::Resolvent;
    case TailMembership::Kind::Unknown: break;
  }
  return SpectralClass::Inconclusive;
}

void check_axis(double lo, double hi, std::size_t nodes, const char* axis) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw InvalidArgument(std::string("scan region bounds must be finite on ") + axis);
  if (nodes == 0) throw InvalidArgument(std::string("scan grid needs at least one node on ") + axis);
  if (lo > hi || (lo == hi && nodes > 1)) throw InvalidArgument(std::string("empty scan region on ") + axis);
}

double axis_node(double lo, double hi, std::size_t nodes, std::size_t i) {
  if (nodes == 1) return 0.5 * (lo + hi);
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(nodes - 1);
}

}  // namespace

SupResult resolvent_norm_sup(ComplexPoint lambda, const OperatorFamily& family, const Tolerance& tol) {
  tol.validate();
  double prefix_max = 0.0;
  for (std::size_t n = 1; n <= family.prefix_size(); ++n) {
    const double r = family.prefix()[n - 1]->resolvent_norm(lambda, tol);
    if (std::isinf(r)) {
      throw SpectrumHit("lambda lies in the spectrum of coordinate " + std::to_string(n));
    }
    prefix_max = std::max(prefix_max, r);
  }
  return combine(prefix_max, family.tail().resolvent_sup(lambda, tol, family.prefix_size() + 1));
}

DirectSumClassification classify_direct_sum_point(ComplexPoint lambda, const OperatorFamily& family,
                                                  const Tolerance& tol) {
  tol.validate();
  DirectSumClassification out;
  out.point = lambda;

  std::optional<std::size_t> point, residual, continuous;
  double prefix_max = 0.0;
  bool prefix_all_resolvent = true;
  for (std::size_t n = 1; n <= family.prefix_size(); ++n) {
    const auto& op = *family.prefix()[n - 1];
    const SpectralClass c = op.classify_point(lambda, tol);
    out.per_coordinate.push_back({n, c});
    switch (c) {
      case SpectralClass::PointSpectrum:
        if (!point) point = n;
        break;
      case SpectralClass::ResidualSpectrum:
        if (!residual) residual = n;
        break;
      case SpectralClass::ContinuousSpectrum:
        if (!continuous) continuous = n;
        break;
      case SpectralClass::Resolvent:
        prefix_max = std::max(prefix_max, op.resolvent_norm(lambda, tol));
        break;
      case SpectralClass::Inconclusive:
        break;
    }
    if (c != SpectralClass::Resolvent) prefix_all_resolvent = false;
  }

  auto settle = [&](SpectralClass c, std::optional<std::size_t> witness) {
    out.spectral_class = c;
    out.witness_index = witness;
    return out;
  };

  // A point of the spectrum of some coordinate has unbounded resolvent there.
  out.resolvent_sup = prefix_all_resolvent ? SupResult::lower_bound_only(prefix_max) : SupResult::infinite();
  if (point) return settle(SpectralClass::PointSpectrum, point);

  const std::size_t first_tail = family.prefix_size() + 1;
  const TailMembership tail = family.tail().locate(lambda, tol, first_tail);
  if (tail.kind == TailMembership::Kind::Unknown) return settle(SpectralClass::Inconclusive, std::nullopt);
  if (tail.kind != TailMembership::Kind::AllResolvent) {
    out.per_coordinate.push_back({tail.index, from_membership(tail.kind)});
    out.resolvent_sup = SupResult::infinite();
  }

  if (tail.kind == TailMembership::Kind::Point) return settle(SpectralClass::PointSpectrum, tail.index);
  if (residual) return settle(SpectralClass::ResidualSpectrum, residual);
  if (tail.kind == TailMembership::Kind::Residual) return settle(SpectralClass::ResidualSpectrum, tail.index);
  if (continuous) return settle(SpectralClass::ContinuousSpectrum, continuous);
  if (tail.kind == TailMembership::Kind::Continuous) return settle(SpectralClass::ContinuousSpectrum, tail.index);
  if (!prefix_all_resolvent) return settle(SpectralClass::Inconclusive, std::nullopt);

  out.resolvent_sup = combine(prefix_max, family.tail().resolvent_sup(lambda, tol, first_tail));
  switch (out.resolvent_sup.kind()) {
    case SupResult::Kind::Infinite: return settle(SpectralClass::ContinuousSpectrum, std::nullopt);
    case SupResult::Kind::Finite: return settle(SpectralClass::Resolvent, std::nullopt);
    case SupResult::Kind::LowerBoundOnly: break;
  }
  return settle(SpectralClass::Inconclusive, std::nullopt);
}

ComplexPoint scan_node(const ScanRegion& region, const ScanGrid& grid, std::size_t i_re, std::size_t j_im) {
  return ComplexPoint(axis_node(region.re_min, region.re_max, grid.n_re, i_re),
                      axis_node(region.im_min, region.im_max, grid.n_im, j_im));
}

ScanResult spectral_scan(const ScanRegion& region, const ScanGrid& grid, const OperatorFamily& family,
                         const Tolerance& tol, unsigned threads) {
  check_axis(region.re_min, region.re_max, grid.n_re, "the real axis");
  check_axis(region.im_min, region.im_max, grid.n_im, "the imaginary axis");
  tol.validate();

  ScanResult result{region, grid, {}};
  result.cells.resize(grid.n_re * grid.n_im);

  auto run_rows = [&](std::size_t row_begin, std::size_t row_step) {
    for (std::size_t j = row_begin; j < grid.n_im; j += row_step) {
      for (std::size_t i = 0; i < grid.n_re; ++i) {
        result.cells[j * grid.n_re + i] = classify_direct_sum_point(scan_node(region, grid, i, j), family, tol);
      }
    }
  };

  const auto workers = static_cast<std::size_t>(std::clamp<unsigned>(threads, 1u, 64u));
  if (workers == 1 || grid.n_im == 1) {
    run_rows(0, 1);
    return result;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          run_rows(w, workers);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return result;
}

}  // namespace specsum
