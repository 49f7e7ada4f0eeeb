#include "specsum/operator_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <string>

#include "specsum/errors.hpp"

namespace specsum {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double min_distance(std::span<const Complex> points, Complex z) {
  double best = kInf;
  for (const Complex& p : points) best = std::min(best, std::abs(p - z));
  return best;
}

bool by_modulus(const Complex& x, const Complex& y) {
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  if (ax != ay) return ax < ay;
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

void require_all_finite(std::span<const Complex> values, const char* what) {
  for (const Complex& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw InvalidArgument(std::string(what) + " must be finite");
    }
  }
}

std::int64_t clamp_round(double x) {
  constexpr double kLimit = 4.0e18;
  return static_cast<std::int64_t>(std::llround(std::clamp(x, -kLimit, kLimit)));
}

double reciprocal_or_inf(double distance, const Tolerance& tol) {
  return distance <= tol.eps_membership ? kInf : 1.0 / distance;
}

Eigen::MatrixXcd diagonal_matrix(std::span<const Complex> values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = values[static_cast<std::size_t>(i)];
  return m;
}

void require_positive_size(std::size_t n) {
  if (n == 0) throw InvalidArgument("truncation size must be at least 1");
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteMatrixOperator

FiniteMatrixOperator::FiniteMatrixOperator(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw InvalidArgument("matrix operator requires a non-empty square matrix");
  }
  if (!entries_.allFinite()) throw InvalidArgument("matrix entries must be finite");

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(entries_, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("eigensolver did not converge for matrix operator");
  }
  const auto& ev = solver.eigenvalues();
  eigenvalues_.assign(ev.data(), ev.data() + ev.size());
  std::sort(eigenvalues_.begin(), eigenvalues_.end(), by_modulus);

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(entries_);
  norm_ = svd.singularValues()(0);
}

FiniteMatrixOperator FiniteMatrixOperator::scalar(Complex value) {
  Eigen::MatrixXcd m(1, 1);
  m(0, 0) = value;
  return FiniteMatrixOperator(std::move(m));
}

double FiniteMatrixOperator::distance_to_spectrum(ComplexPoint lambda) const {
  return min_distance(eigenvalues_, lambda.value());
}

SpectralClass FiniteMatrixOperator::classify_point(ComplexPoint lambda, const Tolerance& tol) const {
  return distance_to_spectrum(lambda) <= tol.eps_membership ? SpectralClass::PointSpectrum
                                                            : SpectralClass::Resolvent;
}

double FiniteMatrixOperator::resolvent_norm(ComplexPoint lambda, const Tolerance& tol) const {
  if (distance_to_spectrum(lambda) <= tol.eps_membership) return kInf;
  const Eigen::Index d = entries_.rows();
  Eigen::MatrixXcd shifted = entries_ - lambda.value() * Eigen::MatrixXcd::Identity(d, d);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(shifted);
  const double sigma_min = svd.singularValues()(d - 1);
  return sigma_min > 0.0 ? 1.0 / sigma_min : kInf;
}

std::vector<Complex> FiniteMatrixOperator::eigenvalues_up_to(double bound) const {
  std::vector<Complex> out;
  for (const Complex& z : eigenvalues_) {
    if (std::abs(z) <= bound) out.push_back(z);
  }
  return out;
}

Eigen::MatrixXcd FiniteMatrixOperator::truncate(std::size_t n) const {
  require_positive_size(n);
  const auto d = static_cast<std::size_t>(entries_.rows());
  if (n >= d) return entries_;
  const auto k = static_cast<Eigen::Index>(n);
  return entries_.topLeftCorner(k, k);
}

double FiniteMatrixOperator::truncation_radius(std::size_t n) const {
  // A proper principal section carries no spectral guarantee.
  return n >= static_cast<std::size_t>(entries_.rows()) ? kInf : 0.0;
}

SpectralClass matrix_classify(ComplexPoint lambda, const FiniteMatrixOperator& op,
                              const Tolerance& tol) {
  return op.classify_point(lambda, tol);
}

// ---------------------------------------------------------------------------
// DiagonalOperator

DiagonalOperator::DiagonalOperator(EntryRule rule, std::vector<Complex> accumulation_points)
    : rule_(std::move(rule)), accumulation_(std::move(accumulation_points)) {
  if (const auto* p = std::get_if<PowerLawEntries>(&rule_)) {
    if (!std::isfinite(p->k) || p->k == 0.0) throw InvalidArgument("power-law k must be finite and nonzero");
    if (!std::isfinite(p->alpha) || !(p->alpha > 0.0)) throw InvalidArgument("power-law alpha must be positive");
    if (!std::isfinite(p->beta)) throw InvalidArgument("power-law beta must be finite");
  } else {
    const auto& e = std::get<ExplicitEntries>(rule_);
    if (e.values.empty()) throw InvalidArgument("explicit diagonal needs at least one entry");
    require_all_finite(e.values, "diagonal entries");
  }
  require_all_finite(accumulation_, "accumulation points");
}

Complex DiagonalOperator::entry(double m) const {
  if (!(m >= 1.0)) throw InvalidArgument("diagonal index must be >= 1");
  if (const auto* p = std::get_if<PowerLawEntries>(&rule_)) {
    return {p->k * std::pow(m, p->alpha) + p->beta, 0.0};
  }
  const auto& values = std::get<ExplicitEntries>(rule_).values;
  const auto idx = static_cast<std::size_t>(m);
  if (idx > values.size()) throw InvalidArgument("diagonal index beyond explicit entries");
  return values[idx - 1];
}

std::optional<std::size_t> DiagonalOperator::dimension() const {
  if (const auto* e = std::get_if<ExplicitEntries>(&rule_)) return e->values.size();
  return std::nullopt;
}

std::optional<GrowthBound> DiagonalOperator::growth() const {
  if (const auto* p = std::get_if<PowerLawEntries>(&rule_)) return GrowthBound{std::abs(p->k), p->alpha};
  return std::nullopt;
}

double DiagonalOperator::nearest_entry_index(ComplexPoint lambda, double from) const {
  from = std::max(1.0, std::floor(from));
  if (const auto* e = std::get_if<ExplicitEntries>(&rule_)) {
    const auto n = e->values.size();
    double best_m = from;
    double best = kInf;
    for (auto m = static_cast<std::size_t>(from); m <= n; ++m) {
      const double d = std::abs(e->values[m - 1] - lambda.value());
      if (d < best) {
        best = d;
        best_m = static_cast<double>(m);
      }
    }
    return best_m;
  }
  // Real entries, monotone in m: the closest one brackets the crossing of re(lambda).
  const auto& p = std::get<PowerLawEntries>(rule_);
  double best_m = from;
  double best = std::abs(entry(from) - lambda.value());
  const double t = (lambda.re() - p.beta) / p.k;
  if (t > 0.0) {
    const double mstar = std::pow(t, 1.0 / p.alpha);
    for (double c : {std::floor(mstar), std::floor(mstar) + 1.0}) {
      if (c < from || !std::isfinite(c)) continue;
      const double d = std::abs(entry(c) - lambda.value());
      if (d < best || (d == best && c < best_m)) {
        best = d;
        best_m = c;
      }
    }
  }
  return best_m;
}

double DiagonalOperator::distance_to_entries(ComplexPoint lambda, double from) const {
  if (const auto dim = dimension(); dim && from > static_cast<double>(*dim)) return kInf;
  return std::abs(entry(nearest_entry_index(lambda, from)) - lambda.value());
}

double DiagonalOperator::distance_to_spectrum(ComplexPoint lambda) const {
  return std::min(distance_to_entries(lambda), min_distance(accumulation_, lambda.value()));
}

SpectralClass DiagonalOperator::classify_point(ComplexPoint lambda, const Tolerance& tol) const {
  if (distance_to_entries(lambda) <= tol.eps_membership) return SpectralClass::PointSpectrum;
  // A normal operator has no residual spectrum; limit points that are not
  // entries are continuous spectrum.
  if (min_distance(accumulation_, lambda.value()) <= tol.eps_membership) {
    return SpectralClass::ContinuousSpectrum;
  }
  return SpectralClass::Resolvent;
}

double DiagonalOperator::resolvent_norm(ComplexPoint lambda, const Tolerance& tol) const {
  return reciprocal_or_inf(distance_to_spectrum(lambda), tol);
}

double DiagonalOperator::operator_norm() const {
  const auto* e = std::get_if<ExplicitEntries>(&rule_);
  if (e == nullptr) return kInf;
  double norm = 0.0;
  for (const Complex& c : e->values) norm = std::max(norm, std::abs(c));
  for (const Complex& c : accumulation_) norm = std::max(norm, std::abs(c));
  return norm;
}

std::vector<Complex> DiagonalOperator::eigenvalues_up_to(double bound) const {
  std::vector<Complex> out;
  if (const auto* e = std::get_if<ExplicitEntries>(&rule_)) {
    for (const Complex& c : e->values) {
      if (std::abs(c) <= bound) out.push_back(c);
    }
    return out;
  }
  const auto& p = std::get<PowerLawEntries>(rule_);
  const double k = std::abs(p.k);
  const double beta = std::abs(p.beta);
  for (double m = 1.0; k * std::pow(m, p.alpha) - beta <= bound; m += 1.0) {
    const Complex c = entry(m);
    if (std::abs(c) <= bound) out.push_back(c);
  }
  return out;
}

Eigen::MatrixXcd DiagonalOperator::truncate(std::size_t n) const {
  require_positive_size(n);
  const std::size_t len = std::min(n, dimension().value_or(n));
  std::vector<Complex> values(len);
  for (std::size_t m = 1; m <= len; ++m) values[m - 1] = entry(static_cast<double>(m));
  return diagonal_matrix(values);
}

double DiagonalOperator::truncation_radius(std::size_t n) const {
  double radius = std::numeric_limits<double>::infinity();
  for (const Complex& c : accumulation_) radius = std::min(radius, std::abs(c));
  // Smallest modulus among the entries left out of the section.
  return std::min(radius, distance_to_entries(ComplexPoint(0.0, 0.0), static_cast<double>(n) + 1.0));
}

double diagonal_resolvent_norm_exact(ComplexPoint lambda, const DiagonalOperator& op,
                                     std::size_t depth, const Tolerance& tol) {
  if (depth == 0) throw InvalidArgument("truncation depth must be at least 1");
  if (op.distance_to_spectrum(lambda) <= tol.eps_membership) {
    throw SpectrumHit("lambda coincides with a diagonal entry");
  }
  const std::size_t prefix = std::min(depth, op.dimension().value_or(depth));
  double sup = 0.0;
  for (std::size_t m = 1; m <= prefix; ++m) {
    sup = std::max(sup, 1.0 / std::abs(op.entry(static_cast<double>(m)) - lambda.value()));
  }
  const double tail = op.distance_to_entries(lambda, static_cast<double>(prefix) + 1.0);
  sup = std::max(sup, 1.0 / tail);
  for (const Complex& c : op.accumulation_points()) {
    sup = std::max(sup, 1.0 / std::abs(c - lambda.value()));
  }
  return sup;
}

double diagonal_resolvent_norm_hs_bound(ComplexPoint lambda, const DiagonalOperator& op,
                                        std::size_t depth, const Tolerance& tol) {
  if (depth == 0) throw InvalidArgument("truncation depth must be at least 1");
  if (!op.accumulation_points().empty()) {
    throw InvalidArgument("Hilbert-Schmidt series diverges: entries accumulate at a finite point");
  }
  if (op.distance_to_spectrum(lambda) <= tol.eps_membership) {
    throw SpectrumHit("lambda coincides with a diagonal entry");
  }

  if (const auto dim = op.dimension()) {
    double sum = 0.0;
    for (std::size_t m = *dim; m >= 1; --m) {
      sum += 1.0 / std::norm(op.entry(static_cast<double>(m)) - lambda.value());
    }
    return std::sqrt(sum);
  }

  const auto& p = std::get<PowerLawEntries>(op.rule());
  if (2.0 * p.alpha <= 1.0) {
    throw InvalidArgument("Hilbert-Schmidt series diverges: need alpha > 1/2");
  }
  const double k = std::abs(p.k);
  const double offset = std::abs(p.beta - lambda.re());
  // Past `cutoff` every term is decreasing and |c_m - lambda| >= k m^alpha (1 - offset / (k cutoff^alpha)).
  double cutoff = std::max(static_cast<double>(depth), std::ceil(std::pow(2.0 * offset / k, 1.0 / p.alpha)));
  constexpr double kMaxTerms = 5.0e7;
  if (cutoff > kMaxTerms) throw InvalidArgument("Hilbert-Schmidt partial sum would exceed 5e7 terms");

  double sum = 0.0;
  for (double m = cutoff; m >= 1.0; m -= 1.0) {
    sum += 1.0 / std::norm(op.entry(m) - lambda.value());
  }
  const double shrink = 1.0 - offset / (k * std::pow(cutoff, p.alpha));
  const double tail = std::pow(cutoff, 1.0 - 2.0 * p.alpha) / ((2.0 * p.alpha - 1.0) * shrink * shrink * k * k);
  return std::sqrt(sum + tail);
}

// ---------------------------------------------------------------------------
// MultipointOperator

namespace {

// Lattice order 0, -1, 1, -2, 2, ...
std::int64_t lattice_index(std::size_t j) {
  if (j == 0) return 0;
  const auto half = static_cast<std::int64_t>((j + 1) / 2);
  return (j % 2 == 1) ? -half : half;
}

}  // namespace

MultipointOperator::MultipointOperator(double a, double b, Complex amplitude)
    : a_(a), b_(b), amplitude_(amplitude) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw InvalidArgument("multipoint interval requires finite a < b");
  }
  if (!std::isfinite(amplitude.real()) || !std::isfinite(amplitude.imag()) || amplitude == Complex{}) {
    throw InvalidArgument("multipoint amplitude must be finite and nonzero");
  }
}

double MultipointOperator::spacing() const { return kTwoPi / (b_ - a_); }

Complex MultipointOperator::eigenvalue(std::int64_t k) const {
  return {0.0, 2.0 * static_cast<double>(k) * std::numbers::pi / (b_ - a_)};
}

std::int64_t MultipointOperator::nearest_index(ComplexPoint lambda) const {
  return clamp_round(lambda.im() / spacing());
}

double MultipointOperator::distance_to_spectrum(ComplexPoint lambda) const {
  const std::int64_t k = nearest_index(lambda);
  double best = kInf;
  for (std::int64_t j = k - 1; j <= k + 1; ++j) {
    best = std::min(best, std::abs(eigenvalue(j) - lambda.value()));
  }
  return best;
}

SpectralClass MultipointOperator::classify_point(ComplexPoint lambda, const Tolerance& tol) const {
  return distance_to_spectrum(lambda) <= tol.eps_membership ? SpectralClass::PointSpectrum
                                                            : SpectralClass::Resolvent;
}

double MultipointOperator::resolvent_norm(ComplexPoint lambda, const Tolerance& tol) const {
  return reciprocal_or_inf(distance_to_spectrum(lambda), tol);
}

double MultipointOperator::operator_norm() const { return kInf; }

std::vector<Complex> MultipointOperator::eigenvalues_up_to(double bound) const {
  std::vector<Complex> out;
  if (!(bound >= 0.0)) return out;
  const double kmax = std::floor(bound / spacing()) + 1.0;
  for (std::size_t j = 0;; ++j) {
    const std::int64_t k = lattice_index(j);
    if (static_cast<double>(k < 0 ? -k : k) > kmax) break;
    const Complex z = eigenvalue(k);
    if (std::abs(z) <= bound) out.push_back(z);
  }
  return out;
}

Eigen::MatrixXcd MultipointOperator::truncate(std::size_t n) const {
  require_positive_size(n);
  std::vector<Complex> values(n);
  for (std::size_t j = 0; j < n; ++j) values[j] = eigenvalue(lattice_index(j));
  return diagonal_matrix(values);
}

double MultipointOperator::truncation_radius(std::size_t n) const {
  return std::abs(eigenvalue(lattice_index(n)));
}

ComplexPoint multipoint_eigenvalue(std::int64_t k, double a, double b) {
  if (!(a < b)) throw InvalidArgument("multipoint interval requires a < b");
  return ComplexPoint(MultipointOperator(a, b).eigenvalue(k));
}

Complex multipoint_eigenfunction_eval(std::int64_t k, double t, const MultipointOperator& op) {
  if (!(t >= op.a() && t <= op.b())) throw InvalidArgument("t must lie in [a, b]");
  return op.amplitude() * std::exp(op.eigenvalue(k) * (t - op.a()));
}

// ---------------------------------------------------------------------------
// VectorODEOperator

VectorODEOperator::VectorODEOperator(double s, double a, double b, double theta)
    : s_(s), a_(a), b_(b), theta_(theta) {
  if (!std::isfinite(s) || !(s > 0.0)) throw InvalidArgument("ODE operator requires s > 0");
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw InvalidArgument("ODE interval requires finite a < b");
  }
  if (!(theta >= 0.0 && theta < kTwoPi)) throw InvalidArgument("ODE phase theta must lie in [0, 2 pi)");
}

Complex VectorODEOperator::eigenvalue(std::int64_t k) const {
  return {s_, (theta_ + kTwoPi * static_cast<double>(k)) / (b_ - a_)};
}

double VectorODEOperator::distance_to_spectrum(ComplexPoint lambda) const {
  const std::int64_t k = clamp_round((lambda.im() * (b_ - a_) - theta_) / kTwoPi);
  double best = kInf;
  for (std::int64_t j = k - 1; j <= k + 1; ++j) {
    best = std::min(best, std::abs(eigenvalue(j) - lambda.value()));
  }
  return best;
}

std::vector<std::int64_t> VectorODEOperator::indices_by_modulus(std::size_t count) const {
  const auto reach = static_cast<std::int64_t>(count) + 1;
  std::vector<std::int64_t> ks;
  ks.reserve(static_cast<std::size_t>(2 * reach + 1));
  for (std::int64_t k = -reach; k <= reach; ++k) ks.push_back(k);
  std::stable_sort(ks.begin(), ks.end(), [this](std::int64_t x, std::int64_t y) {
    return std::abs(theta_ + kTwoPi * static_cast<double>(x)) <
           std::abs(theta_ + kTwoPi * static_cast<double>(y));
  });
  ks.resize(count);
  return ks;
}

SpectralClass VectorODEOperator::classify_point(ComplexPoint lambda, const Tolerance& tol) const {
  return distance_to_spectrum(lambda) <= tol.eps_membership ? SpectralClass::PointSpectrum
                                                            : SpectralClass::Resolvent;
}

double VectorODEOperator::resolvent_norm(ComplexPoint lambda, const Tolerance& tol) const {
  return reciprocal_or_inf(distance_to_spectrum(lambda), tol);
}

double VectorODEOperator::operator_norm() const { return kInf; }

std::vector<Complex> VectorODEOperator::eigenvalues_up_to(double bound) const {
  std::vector<Complex> out;
  if (!(bound >= s_)) return out;
  const double imag_max = std::sqrt(bound * bound - s_ * s_);
  const double reach = std::ceil(imag_max * (b_ - a_) / kTwoPi) + 1.0;
  for (std::int64_t k : indices_by_modulus(static_cast<std::size_t>(2.0 * reach + 1.0))) {
    const Complex z = eigenvalue(k);
    if (std::abs(z) <= bound) out.push_back(z);
  }
  return out;
}

Eigen::MatrixXcd VectorODEOperator::truncate(std::size_t n) const {
  require_positive_size(n);
  std::vector<Complex> values;
  values.reserve(n);
  for (std::int64_t k : indices_by_modulus(n)) values.push_back(eigenvalue(k));
  return diagonal_matrix(values);
}

double VectorODEOperator::truncation_radius(std::size_t n) const {
  return std::abs(eigenvalue(indices_by_modulus(n + 1).back()));
}

ComplexPoint ode_eigenvalue(std::int64_t k, const VectorODEOperator& op) {
  return ComplexPoint(op.eigenvalue(k));
}

double ode_resolvent_bound(ComplexPoint lambda, const VectorODEOperator& op) {
  const double lr = lambda.re();
  if (!(lr < op.s())) throw InvalidArgument("ode_resolvent_bound requires re(lambda) < s");
  if (lr == 0.0) throw InvalidArgument("ode_resolvent_bound is singular at re(lambda) = 0");

  const double d = lr - op.s();
  const double len = op.b() - op.a();
  // Volterra part: [2 d (a - b) - 1 + e^{2 d len}] / (4 d^2), written as expm1(x) - x.
  const double x = 2.0 * d * len;
  const double volterra = (std::expm1(x) - x) / (4.0 * d * d);
  // Boundary part: (e^{2 lr len} - 1)(1 - e^{d len})^{-1}(e^{2 d len} - 1) / (4 lr d).
  const double boundary =
      std::expm1(2.0 * lr * len) / (-std::expm1(d * len)) * std::expm1(2.0 * d * len) / (4.0 * lr * d);
  return std::sqrt(volterra + boundary);
}

// ---------------------------------------------------------------------------
// ShiftOperator

SpectralClass ShiftOperator::classify_point(ComplexPoint lambda, const Tolerance& tol) const {
  const double r = std::abs(lambda.value());
  if (std::abs(r - 1.0) <= tol.eps_membership) return SpectralClass::ContinuousSpectrum;
  if (r < 1.0) return SpectralClass::ResidualSpectrum;
  return SpectralClass::Resolvent;
}

double ShiftOperator::resolvent_norm(ComplexPoint lambda, const Tolerance& tol) const {
  const double gap = std::abs(lambda.value()) - 1.0;
  return gap > tol.eps_membership ? 1.0 / gap : kInf;
}

std::vector<Complex> ShiftOperator::eigenvalues_up_to(double) const {
  throw UnsupportedModel("shift operator has no point spectrum to enumerate");
}

Eigen::MatrixXcd ShiftOperator::truncate(std::size_t n) const {
  require_positive_size(n);
  const auto k = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(k, k);
  for (Eigen::Index i = 1; i < k; ++i) m(i, i - 1) = 1.0;
  return m;
}

// ---------------------------------------------------------------------------
// DeclaredSpectrumOperator

DeclaredSpectrumOperator::DeclaredSpectrumOperator(DeclaredSpectrum data) : data_(std::move(data)) {
  require_all_finite(data_.point, "declared point spectrum");
  require_all_finite(data_.continuous, "declared continuous spectrum");
  require_all_finite(data_.residual, "declared residual spectrum");
  if (data_.norm && !(*data_.norm >= 0.0)) throw InvalidArgument("declared norm must be nonnegative");
  sorted_point_ = data_.point;
  std::stable_sort(sorted_point_.begin(), sorted_point_.end(), by_modulus);
}

SpectralClass DeclaredSpectrumOperator::classify_point(ComplexPoint lambda, const Tolerance& tol) const {
  const Complex z = lambda.value();
  if (min_distance(data_.point, z) <= tol.eps_membership) return SpectralClass::PointSpectrum;
  if (min_distance(data_.residual, z) <= tol.eps_membership) return SpectralClass::ResidualSpectrum;
  if (min_distance(data_.continuous, z) <= tol.eps_membership) return SpectralClass::ContinuousSpectrum;
  return SpectralClass::Resolvent;
}

double DeclaredSpectrumOperator::resolvent_norm(ComplexPoint lambda, const Tolerance& tol) const {
  const Complex z = lambda.value();
  const double d = std::min({min_distance(data_.point, z), min_distance(data_.continuous, z),
                             min_distance(data_.residual, z)});
  return reciprocal_or_inf(d, tol);
}

double DeclaredSpectrumOperator::operator_norm() const { return data_.norm.value_or(kInf); }

std::vector<Complex> DeclaredSpectrumOperator::eigenvalues_up_to(double bound) const {
  std::vector<Complex> out;
  for (const Complex& z : sorted_point_) {
    if (std::abs(z) <= bound) out.push_back(z);
  }
  return out;
}

Eigen::MatrixXcd DeclaredSpectrumOperator::truncate(std::size_t n) const {
  require_positive_size(n);
  if (sorted_point_.empty()) throw UnsupportedModel("declared operator without point spectrum has no truncation");
  const std::size_t len = std::min(n, sorted_point_.size());
  return diagonal_matrix(std::span<const Complex>(sorted_point_.data(), len));
}

double DeclaredSpectrumOperator::truncation_radius(std::size_t n) const {
  double radius = n < sorted_point_.size() ? std::abs(sorted_point_[n]) : kInf;
  for (const Complex& z : data_.continuous) radius = std::min(radius, std::abs(z));
  for (const Complex& z : data_.residual) radius = std::min(radius, std::abs(z));
  return radius;
}

}  // namespace specsum
