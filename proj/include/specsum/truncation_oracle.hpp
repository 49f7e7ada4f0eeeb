#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "specsum/errors.hpp"
#include "specsum/operator_family.hpp"
#include "specsum/spectral_types.hpp"

namespace specsum {

// Dense eigensolves above this dimension are refused.
inline constexpr Eigen::Index kDefaultDimensionCap = 2000;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
DenseMatrix<Scalar> block_diag(const std::vector<DenseMatrix<Scalar>>& blocks) {
  if (blocks.empty()) throw InvalidArgument("block_diag needs at least one block");
  Eigen::Index dim = 0;
  for (const auto& b : blocks) {
    if (b.rows() != b.cols()) throw InvalidArgument("block_diag blocks must be square");
    dim += b.rows();
  }
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(dim, dim);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return out;
}

inline bool point_less(const Complex& a, const Complex& b) {
  return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

/// All eigenvalues with multiplicity, sorted by (re, im).
template <typename Derived>
std::vector<Complex> brute_spectrum(const Eigen::MatrixBase<Derived>& matrix,
                                    Eigen::Index cap = kDefaultDimensionCap) {
  using Scalar = typename Derived::Scalar;
  if (matrix.rows() != matrix.cols()) throw InvalidArgument("brute_spectrum needs a square matrix");
  if (matrix.rows() > cap) throw TruncationCapExceeded("matrix dimension exceeds the dense eigensolver cap");

  std::vector<Complex> out;
  if (matrix.rows() == 0) return out;
  if constexpr (Eigen::NumTraits<Scalar>::IsComplex) {
    Eigen::ComplexEigenSolver<DenseMatrix<Scalar>> es(matrix.eval(), false);
    if (es.info() != Eigen::Success) throw ConvergenceError("complex eigensolver did not converge");
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.emplace_back(es.eigenvalues()[i]);
  } else {
    Eigen::EigenSolver<DenseMatrix<Scalar>> es(matrix.eval(), false);
    if (es.info() != Eigen::Success) throw ConvergenceError("real eigensolver did not converge");
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.emplace_back(es.eigenvalues()[i]);
  }
  std::sort(out.begin(), out.end(), point_less);
  return out;
}

template <typename Derived>
double largest_singular_value(const Eigen::MatrixBase<Derived>& matrix) {
  if (matrix.size() == 0) return 0.0;
  Eigen::BDCSVD<DenseMatrix<typename Derived::Scalar>> svd(matrix.eval());
  return static_cast<double>(svd.singularValues()(0));
}

template <typename Derived>
double smallest_singular_value(const Eigen::MatrixBase<Derived>& matrix) {
  if (matrix.size() == 0) throw InvalidArgument("singular values of an empty matrix");
  Eigen::BDCSVD<DenseMatrix<typename Derived::Scalar>> svd(matrix.eval());
  const auto& s = svd.singularValues();
  return static_cast<double>(s(s.size() - 1));
}

/// Spectral norm ||matrix||_2.
template <typename Derived>
double norm2(const Eigen::MatrixBase<Derived>& matrix) {
  return largest_singular_value(matrix);
}

/// 1 / sigma_min(matrix - lambda I). Throws SpectrumHit when lambda is within
/// eps_membership of an eigenvalue.
template <typename Derived>
double brute_resolvent_norm(const Eigen::MatrixBase<Derived>& matrix, ComplexPoint lambda,
                            const Tolerance& tol = {}) {
  if (matrix.rows() != matrix.cols()) throw InvalidArgument("brute_resolvent_norm needs a square matrix");
  const DenseMatrix<Complex> a = matrix.template cast<Complex>();
  for (const Complex& z : brute_spectrum(a)) {
    if (std::abs(z - lambda.value()) <= tol.eps_membership) {
      throw SpectrumHit("point is an eigenvalue of the matrix");
    }
  }
  DenseMatrix<Complex> shifted = a;
  shifted.diagonal().array() -= lambda.value();
  return 1.0 / smallest_singular_value(shifted);
}

struct MultisetMatch {
  std::size_t matched = 0;
  std::size_t unmatched_left = 0;
  std::size_t unmatched_right = 0;
  double max_distance = 0.0;  // over matched pairs

  bool equal() const { return unmatched_left == 0 && unmatched_right == 0; }
};

/// Greedy nearest matching within eps: left points in (re, im) order each take
/// the closest unused right point, ties to the earlier one in (re, im) order.
MultisetMatch match_multisets(std::vector<Complex> left, std::vector<Complex> right, double eps);

/// Finite block-diagonal stand-in for the direct sum.
struct FiniteTruncation {
  std::vector<Eigen::MatrixXcd> blocks;
  Eigen::MatrixXcd assembled;
  std::vector<Eigen::Index> dims;
};

FiniteTruncation make_truncation(const OperatorFamily& family, std::size_t m, std::size_t n_per_block);
FiniteTruncation make_truncation(std::vector<Eigen::MatrixXcd> blocks);

struct TruncationReport {
  std::string property;
  std::size_t m = 0;
  std::size_t n = 0;
  double engine_value = 0.0;
  double oracle_value = 0.0;
  double discrepancy = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
};

enum class VerifySuite { All, Norm, Union, Resolvent, Counting };

VerifySuite parse_verify_suite(const std::string& name);
std::string_view to_string(VerifySuite suite);

struct VerifyOptions {
  std::size_t blocks = 3;
  std::size_t block_size = 8;
  ComplexPoint lambda{-1.0, 0.0};
  Tolerance tol{};
  double norm_tolerance = 1e-10;
  double union_tolerance = 1e-8;
  double resolvent_tolerance = 1e-8;
  std::uint64_t seed = 0;
};

/// One report per selected property: norm identity, spectrum union, resolvent
/// product identity, merged counting against brute counts.
std::vector<TruncationReport> verify_family(const OperatorFamily& family, VerifySuite suite,
                                            const VerifyOptions& options);

TruncationReport verify_norm_identity(const FiniteTruncation& t, std::size_t m, std::size_t n,
                                      double tolerance, std::uint64_t seed = 0);
TruncationReport verify_spectrum_union(const FiniteTruncation& t, std::size_t m, std::size_t n,
                                       double eps, std::uint64_t seed = 0);

struct RandomFamilySpec {
  std::size_t min_blocks = 2;
  std::size_t max_blocks = 8;
  std::size_t min_size = 1;
  std::size_t max_size = 6;
};

/// Seeded blocks with entries uniform in [-1,1] + i[-1,1]. The mapping from
/// the mt19937_64 stream is fixed, so results agree across platforms.
std::vector<Eigen::MatrixXcd> random_blocks(std::uint64_t seed, const RandomFamilySpec& spec = {});

/// One d x d block drawn from `rng` with the same entry mapping.
Eigen::MatrixXcd random_block(std::mt19937_64& rng, Eigen::Index d);

/// Columns property,m,N,engine_value,oracle_value,discrepancy,pass,seed.
void write_reports_csv(std::ostream& out, const std::vector<TruncationReport>& reports);

}  // namespace specsum
