#include "specsum/truncation_oracle.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "specsum/counting.hpp"
#include "specsum/csv.hpp"
#include "specsum/direct_sum_engine.hpp"

namespace specsum {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

TruncationReport make_report(std::string property, std::size_t m, std::size_t n, double engine, double oracle,
                             double discrepancy, double tolerance, std::uint64_t seed) {
  TruncationReport r{std::move(property), m, n, engine, oracle, discrepancy, tolerance, false, seed};
  r.pass = discrepancy <= tolerance;
  return r;
}

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

double identity_deviation(const Eigen::MatrixXcd& product) {
  return norm2(product - Eigen::MatrixXcd::Identity(product.rows(), product.cols()));
}

TruncationReport verify_resolvent_identity(const OperatorFamily& family, const VerifyOptions& o) {
  const ResolventAssembly k = assemble_resolvent_truncation(family, o.lambda, o.blocks, o.block_size, o.tol);
  Eigen::MatrixXcd shifted = k.assembled_operator;
  shifted.diagonal().array() -= o.lambda.value();
  const double left = identity_deviation(k.assembled * shifted);
  const double right = identity_deviation(shifted * k.assembled);
  return make_report("resolvent", o.blocks, o.block_size, left, right, std::max(left, right),
                     o.resolvent_tolerance, o.seed);
}

TruncationReport verify_counting(const OperatorFamily& family, const FiniteTruncation& t, const VerifyOptions& o) {
  // Every eigenvalue below the smallest truncation radius is carried by the
  // assembled matrix, so counts there must agree exactly.
  double reliable = kInf;
  for (std::size_t n = 1; n <= o.blocks; ++n) {
    reliable = std::min(reliable, family.coordinate(n)->truncation_radius(o.block_size));
  }
  std::vector<double> moduli;
  for (const Complex& z : brute_spectrum(t.assembled)) moduli.push_back(std::abs(z));
  std::sort(moduli.begin(), moduli.end());

  std::vector<double> thresholds;
  if (reliable > 0.0) thresholds.push_back(0.0);
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const double next = i + 1 < moduli.size() ? moduli[i + 1] : moduli[i] + 1.0;
    if (next - moduli[i] <= o.tol.eps_membership) continue;
    const double mid = 0.5 * (moduli[i] + next);
    if (mid < reliable) thresholds.push_back(mid);
  }

  const OperatorFamily leading = family.leading(o.blocks);
  double worst = 0.0;
  std::size_t engine = 0;
  std::size_t oracle = 0;
  for (double threshold : thresholds) {
    engine = merged_counting(leading, threshold, o.tol).count;
    oracle = static_cast<std::size_t>(std::upper_bound(moduli.begin(), moduli.end(), threshold) - moduli.begin());
    worst = std::max(worst, std::abs(static_cast<double>(engine) - static_cast<double>(oracle)));
  }
  return make_report("counting", o.blocks, o.block_size, static_cast<double>(engine), static_cast<double>(oracle),
                     worst, 0.0, o.seed);
}

}  // namespace

MultisetMatch match_multisets(std::vector<Complex> left, std::vector<Complex> right, double eps) {
  std::sort(left.begin(), left.end(), point_less);
  std::sort(right.begin(), right.end(), point_less);
  std::vector<bool> used(right.size(), false);
  MultisetMatch out;
  for (const Complex& z : left) {
    std::size_t best = right.size();
    double best_d = kInf;
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(z - right[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    if (best < right.size() && best_d <= eps) {
      used[best] = true;
      ++out.matched;
      out.max_distance = std::max(out.max_distance, best_d);
    } else {
      ++out.unmatched_left;
    }
  }
  out.unmatched_right = right.size() - out.matched;
  return out;
}

FiniteTruncation make_truncation(std::vector<Eigen::MatrixXcd> blocks) {
  FiniteTruncation t;
  t.assembled = block_diag(blocks);
  for (const auto& b : blocks) t.dims.push_back(b.rows());
  t.blocks = std::move(blocks);
  return t;
}

FiniteTruncation make_truncation(const OperatorFamily& family, std::size_t m, std::size_t n_per_block) {
  if (m == 0 || n_per_block == 0) throw InvalidArgument("truncation needs m >= 1 and N >= 1");
  if (static_cast<double>(m) * static_cast<double>(n_per_block) > static_cast<double>(kDefaultDimensionCap)) {
    throw TruncationCapExceeded("m * N exceeds the truncation cap of " + std::to_string(kDefaultDimensionCap));
  }
  if (family.is_finite() && m > family.prefix_size()) {
    throw InvalidArgument("truncation asks for " + std::to_string(m) + " blocks but the family has " +
                          std::to_string(family.prefix_size()));
  }
  std::vector<Eigen::MatrixXcd> blocks;
  for (std::size_t n = 1; n <= m; ++n) blocks.push_back(family.coordinate(n)->truncate(n_per_block));
  return make_truncation(std::move(blocks));
}

TruncationReport verify_norm_identity(const FiniteTruncation& t, std::size_t m, std::size_t n, double tolerance,
                                      std::uint64_t seed) {
  double block_max = 0.0;
  for (const auto& b : t.blocks) block_max = std::max(block_max, norm2(b));
  const double assembled = norm2(t.assembled);
  // Absolute for norms up to 1, relative beyond.
  const double discrepancy = std::abs(block_max - assembled) / std::max(1.0, assembled);
  return make_report("norm", m, n, block_max, assembled, discrepancy, tolerance, seed);
}

TruncationReport verify_spectrum_union(const FiniteTruncation& t, std::size_t m, std::size_t n, double eps,
                                       std::uint64_t seed) {
  std::vector<Complex> joined;
  for (const auto& b : t.blocks) {
    const auto s = brute_spectrum(b);
    joined.insert(joined.end(), s.begin(), s.end());
  }
  const std::vector<Complex> whole = brute_spectrum(t.assembled);
  const MultisetMatch match = match_multisets(joined, whole, eps);
  const double discrepancy = match.equal() ? match.max_distance : kInf;
  return make_report("union", m, n, static_cast<double>(joined.size()), static_cast<double>(whole.size()),
                     discrepancy, eps, seed);
}

VerifySuite parse_verify_suite(const std::string& name) {
  if (name == "all") return VerifySuite::All;
  if (name == "norm") return VerifySuite::Norm;
  if (name == "union") return VerifySuite::Union;
  if (name == "resolvent") return VerifySuite::Resolvent;
  if (name == "counting") return VerifySuite::Counting;
  throw InvalidArgument("unknown verify suite '" + name + "'");
}

std::string_view to_string(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::All: return "all";
    case VerifySuite::Norm: return "norm";
    case VerifySuite::Union: return "union";
    case VerifySuite::Resolvent: return "resolvent";
    case VerifySuite::Counting: return "counting";
  }
  return "all";
}

std::vector<TruncationReport> verify_family(const OperatorFamily& family, VerifySuite suite,
                                            const VerifyOptions& o) {
  o.tol.validate();
  const bool all = suite == VerifySuite::All;
  const FiniteTruncation t = make_truncation(family, o.blocks, o.block_size);

  std::vector<TruncationReport> out;
  if (all || suite == VerifySuite::Norm) out.push_back(verify_norm_identity(t, o.blocks, o.block_size, o.norm_tolerance, o.seed));
  if (all || suite == VerifySuite::Union || suite == VerifySuite::Counting) {
    for (std::size_t n = 1; n <= o.blocks; ++n) {
      if (!family.coordinate(n)->is_enumerable()) {
        throw UnsupportedModel("coordinate " + std::to_string(n) + " (" +
                               std::string(family.coordinate(n)->kind()) + ") has no faithful finite spectrum");
      }
    }
  }
  if (all || suite == VerifySuite::Union) {
    out.push_back(verify_spectrum_union(t, o.blocks, o.block_size, o.union_tolerance, o.seed));
  }
  if (all || suite == VerifySuite::Resolvent) out.push_back(verify_resolvent_identity(family, o));
  if (all || suite == VerifySuite::Counting) out.push_back(verify_counting(family, t, o));
  return out;
}

std::vector<Eigen::MatrixXcd> random_blocks(std::uint64_t seed, const RandomFamilySpec& spec) {
  if (spec.min_blocks == 0 || spec.min_blocks > spec.max_blocks || spec.min_size == 0 ||
      spec.min_size > spec.max_size) {
    throw InvalidArgument("random family ranges must be nonempty and start at 1 or more");
  }
  std::mt19937_64 rng(seed);
  const std::size_t count = uniform_index(rng, spec.min_blocks, spec.max_blocks);
  std::vector<Eigen::MatrixXcd> out;
  for (std::size_t b = 0; b < count; ++b) {
    const auto d = static_cast<Eigen::Index>(uniform_index(rng, spec.min_size, spec.max_size));
    out.push_back(random_block(rng, d));
  }
  return out;
}

Eigen::MatrixXcd random_block(std::mt19937_64& rng, Eigen::Index d) {
  if (d < 1) throw InvalidArgument("random block needs dimension >= 1");
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) {
      const double re = 2.0 * unit_interval(rng) - 1.0;
      const double im = 2.0 * unit_interval(rng) - 1.0;
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

void write_reports_csv(std::ostream& out, const std::vector<TruncationReport>& reports) {
  write_csv_row(out, {"property", "m", "N", "engine_value", "oracle_value", "discrepancy", "pass", "seed"});
  for (const auto& r : reports) {
    write_csv_row(out, {r.property, std::to_string(r.m), std::to_string(r.n), format_double(r.engine_value),
                        format_double(r.oracle_value), format_double(r.discrepancy), r.pass ? "true" : "false",
                        std::to_string(r.seed)});
  }
}

}  // namespace specsum
