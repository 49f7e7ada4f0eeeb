#pragma once

#include <cstddef>
#include <vector>

#include "specsum/operator_family.hpp"
#include "specsum/spectral_types.hpp"

namespace specsum {

/// Classifies lambda for A = (+)_n A_n from the coordinates' spectral data.
///
/// Precedence realizes the complements in the set formulas: any coordinate
/// eigenvalue makes lambda an eigenvalue of A; otherwise any residual
/// coordinate makes it residual; otherwise a continuous coordinate, or a
/// common resolvent point with unbounded resolvent norms, makes it
/// continuous; a common resolvent point with bounded norms is in rho(A).
/// Inconclusive when the tail rule cannot settle a membership or sup query.
DirectSumClassification classify_direct_sum_point(ComplexPoint lambda, const OperatorFamily& family,
                                                  const Tolerance& tol = {});

/// sup_n ||R_lambda(A_n)||. Throws SpectrumHit when lambda is in the spectrum
/// of an explicit coordinate.
SupResult resolvent_norm_sup(ComplexPoint lambda, const OperatorFamily& family, const Tolerance& tol = {});

struct ScanRegion {
  double re_min = 0.0;
  double re_max = 0.0;
  double im_min = 0.0;
  double im_max = 0.0;
};

struct ScanGrid {
  std::size_t n_re = 1;
  std::size_t n_im = 1;
};

/// Row-major grid of classifications: row j walks im from im_min to im_max,
/// column i walks re from re_min to re_max. A single-node axis sits at the
/// midpoint of its interval.
struct ScanResult {
  ScanRegion region;
  ScanGrid grid;
  std::vector<DirectSumClassification> cells;

  const DirectSumClassification& at(std::size_t i_re, std::size_t j_im) const {
    return cells[j_im * grid.n_re + i_re];
  }
};

ComplexPoint scan_node(const ScanRegion& region, const ScanGrid& grid, std::size_t i_re, std::size_t j_im);

/// Classifies every grid node; `threads` > 1 splits rows across workers and
/// yields results identical to the serial scan.
ScanResult spectral_scan(const ScanRegion& region, const ScanGrid& grid, const OperatorFamily& family,
                         const Tolerance& tol = {}, unsigned threads = 1);

}  // namespace specsum
