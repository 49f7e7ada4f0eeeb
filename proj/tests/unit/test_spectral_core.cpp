#include <catch_amalgamated.hpp>

#include <cmath>
#include <memory>

#include <Eigen/Dense>

#include "specsum/errors.hpp"
#include "specsum/operator_family.hpp"
#include "specsum/operator_models.hpp"
#include "specsum/spectral_core.hpp"
#include "specsum/truncation_oracle.hpp"
#include "test_helpers.hpp"

using namespace specsum;
using specsum::testing::Gen;
using specsum::testing::kPi;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

CoordinatePtr scalar(Complex v) { return std::make_shared<FiniteMatrixOperator>(FiniteMatrixOperator::scalar(v)); }

CoordinatePtr matrix(const Eigen::MatrixXcd& m) { return std::make_shared<FiniteMatrixOperator>(m); }

OperatorFamily multipoint_family() {
  return OperatorFamily({std::make_shared<MultipointOperator>(0.0, 1.0)}, TailRule::finite());
}

OperatorFamily reciprocal_family() { return OperatorFamily({scalar(1.0)}, scalar_power_tail(1.0, -1.0)); }

OperatorFamily shift_diagonal_family() {
  return OperatorFamily({std::make_shared<ShiftOperator>(),
                         std::make_shared<DiagonalOperator>(PowerLawEntries{1.0, 1.0, 0.0})},
                        TailRule::finite());
}

Eigen::MatrixXcd random_matrix(Gen& g, int d) {
  Eigen::MatrixXcd a(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) a(r, c) = Complex(g.uniform(-1, 1), g.uniform(-1, 1));
  return a;
}

}  // namespace

TEST_CASE("multipoint lattice point is an eigenvalue of the sum") {
  const auto c = classify_direct_sum_point(ComplexPoint(0.0, 2.0 * kPi), multipoint_family());
  CHECK(c.spectral_class == SpectralClass::PointSpectrum);
  REQUIRE(c.witness_index);
  CHECK(*c.witness_index == 1);
  CHECK(c.resolvent_sup.kind() == SupResult::Kind::Infinite);
}

TEST_CASE("resolvent blow-up gives continuous spectrum") {
  const auto c = classify_direct_sum_point(ComplexPoint(0.0, 0.0), reciprocal_family());
  CHECK(c.spectral_class == SpectralClass::ContinuousSpectrum);
  CHECK_FALSE(c.witness_index);
  CHECK(c.resolvent_sup.kind() == SupResult::Kind::Infinite);
  CHECK(resolvent_norm_sup(ComplexPoint(0.0, 0.0), reciprocal_family()).kind() == SupResult::Kind::Infinite);
}

TEST_CASE("finite matrix resolvent point") {
  const OperatorFamily f({matrix(Eigen::Vector2cd(1.0, 2.0).asDiagonal().toDenseMatrix())}, TailRule::finite());
  const auto c = classify_direct_sum_point(ComplexPoint(3.0, 0.0), f);
  CHECK(c.spectral_class == SpectralClass::Resolvent);
  REQUIRE(c.resolvent_sup.is_finite());
  CHECK_THAT(c.resolvent_sup.value(), WithinAbs(1.0, 1e-12));
}

TEST_CASE("residual branch and point precedence") {
  const auto zero = classify_direct_sum_point(ComplexPoint(0.0, 0.0), shift_diagonal_family());
  CHECK(zero.spectral_class == SpectralClass::ResidualSpectrum);
  CHECK(zero.witness_index == std::optional<std::size_t>(1));
  const auto one = classify_direct_sum_point(ComplexPoint(1.0, 0.0), shift_diagonal_family());
  CHECK(one.spectral_class == SpectralClass::PointSpectrum);
  CHECK(one.witness_index == std::optional<std::size_t>(2));
  const auto circle = classify_direct_sum_point(ComplexPoint(0.0, 1.0), shift_diagonal_family());
  CHECK(circle.spectral_class == SpectralClass::ContinuousSpectrum);
  CHECK(circle.witness_index == std::optional<std::size_t>(1));
  const auto outside = classify_direct_sum_point(ComplexPoint(-2.0, 0.0), shift_diagonal_family());
  CHECK(outside.spectral_class == SpectralClass::Resolvent);
  CHECK_THAT(outside.resolvent_sup.value(), WithinAbs(1.0, 1e-12));
}

TEST_CASE("unknown tail yields inconclusive") {
  const TailRule unknown =
      TailRule::parametric([](std::size_t n) { return scalar(static_cast<double>(n)); }, {});
  const OperatorFamily f({scalar(0.5)}, unknown);
  const auto c = classify_direct_sum_point(ComplexPoint(0.75, 0.0), f);
  CHECK(c.spectral_class == SpectralClass::Inconclusive);
  // A prefix eigenvalue settles the verdict without the tail.
  CHECK(classify_direct_sum_point(ComplexPoint(0.5, 0.0), f).spectral_class == SpectralClass::PointSpectrum);

  const TailRule unknown_sup = TailRule::parametric([](std::size_t n) { return scalar(static_cast<double>(n)); },
                                                    {DeclaredLimit::infinity(), DeclaredLimit::unknown(),
                                                     DeclaredLimit::infinity()});
  const auto d = classify_direct_sum_point(ComplexPoint(0.75, 0.0), OperatorFamily({scalar(0.5)}, unknown_sup));
  CHECK(d.spectral_class == SpectralClass::Inconclusive);
  CHECK(d.resolvent_sup.kind() == SupResult::Kind::LowerBoundOnly);
  CHECK_THAT(d.resolvent_sup.value(), WithinAbs(4.0, 1e-12));
}

TEST_CASE("resolvent sup of an ODE family is attained at the first coordinate") {
  const OperatorFamily f({std::make_shared<VectorODEOperator>(1.0, 0.0, 1.0)}, ode_power_tail(1.0, 1.0, 0.0, 1.0));
  const ComplexPoint z(-1.0, 0.0);
  const SupResult s = resolvent_norm_sup(z, f);
  REQUIRE(s.is_finite());
  const double first = f.coordinate(1)->resolvent_norm(z);
  CHECK_THAT(s.value(), WithinRel(first, 1e-14));
  CHECK(s.value() <= ode_resolvent_bound(z, VectorODEOperator(1.0, 0.0, 1.0)));
}

TEST_CASE("resolvent sup over a single coordinate is its norm") {
  Gen g(31);
  for (int i = 0; i < 50; ++i) {
    const Eigen::MatrixXcd a = random_matrix(g, g.integer(1, 5));
    const OperatorFamily f({matrix(a)}, TailRule::finite());
    const ComplexPoint z = g.point(-2.0, 2.0);
    if (std::static_pointer_cast<const FiniteMatrixOperator>(f.coordinate(1))->distance_to_spectrum(z) < 1e-6) continue;
    const SupResult s = resolvent_norm_sup(z, f);
    REQUIRE(s.is_finite());
    CHECK_THAT(s.value(), WithinRel(brute_resolvent_norm(a, z), 1e-10));
  }
  const OperatorFamily f({scalar(1.0)}, TailRule::finite());
  CHECK_THROWS_AS(resolvent_norm_sup(ComplexPoint(1.0, 0.0), f), SpectrumHit);
}

TEST_CASE("prefix resolvent sup equals the maximum block resolvent norm") {
  Gen g(32);
  for (int i = 0; i < 40; ++i) {
    std::vector<CoordinatePtr> ops;
    std::vector<Eigen::MatrixXcd> blocks;
    const int count = g.integer(2, 6);
    for (int b = 0; b < count; ++b) {
      blocks.push_back(random_matrix(g, g.integer(1, 4)));
      ops.push_back(matrix(blocks.back()));
    }
    const OperatorFamily f(ops, TailRule::finite());
    const ComplexPoint z = g.point(-2.0, 2.0);
    double oracle = 0.0;
    bool hit = false;
    for (const auto& b : blocks) {
      for (const Complex& e : brute_spectrum(b)) hit = hit || std::abs(e - z.value()) < 1e-6;
      if (!hit) oracle = std::max(oracle, brute_resolvent_norm(b, z));
    }
    if (hit) continue;
    CHECK_THAT(resolvent_norm_sup(z, f).value(), WithinAbs(oracle, 1e-10 * std::max(1.0, oracle)));
  }
}

TEST_CASE("point spectrum of matrix families matches the assembled eigenvalues") {
  Gen g(33);
  const Tolerance tol;
  for (int i = 0; i < 40; ++i) {
    std::vector<CoordinatePtr> ops;
    std::vector<Eigen::MatrixXcd> blocks;
    for (int b = g.integer(1, 5); b > 0; --b) {
      blocks.push_back(random_matrix(g, g.integer(1, 4)));
      ops.push_back(matrix(blocks.back()));
    }
    const OperatorFamily f(ops, TailRule::finite());
    const auto eigs = brute_spectrum(block_diag(blocks));
    // Probe at eigenvalues and at random points.
    for (int j = 0; j < 6; ++j) {
      const ComplexPoint z = j < 3 ? ComplexPoint(eigs[g.integer(0, static_cast<int>(eigs.size()) - 1)])
                                   : g.point(-2.0, 2.0);
      double dist = 1e300;
      for (const Complex& e : eigs) dist = std::min(dist, std::abs(e - z.value()));
      const auto c = classify_direct_sum_point(z, f, tol);
      if (dist < 1e-12) {
        CHECK(c.spectral_class == SpectralClass::PointSpectrum);
      } else if (dist > 1e-7) {
        CHECK(c.spectral_class == SpectralClass::Resolvent);
      }
    }
  }
}

TEST_CASE("classification invariants on random mixed families") {
  Gen g(34);
  const Tolerance tol;
  for (int i = 0; i < 60; ++i) {
    std::vector<CoordinatePtr> ops;
    for (int b = g.integer(1, 4); b > 0; --b) {
      switch (g.integer(0, 4)) {
        case 0: ops.push_back(std::make_shared<ShiftOperator>()); break;
        case 1: ops.push_back(std::make_shared<MultipointOperator>(0.0, g.uniform(0.5, 2.0))); break;
        case 2: ops.push_back(std::make_shared<DiagonalOperator>(PowerLawEntries{1.0, 1.0, g.uniform(-2, 0)})); break;
        case 3: ops.push_back(scalar(Complex(g.integer(-2, 2), 0.0))); break;
        default: ops.push_back(std::make_shared<VectorODEOperator>(g.uniform(0.5, 2.0), 0.0, 1.0)); break;
      }
    }
    const OperatorFamily f(ops, TailRule::finite());
    const ComplexPoint z = i % 3 == 0 ? ComplexPoint(g.integer(-2, 2), 0.0) : g.point(-2.5, 2.5);
    const auto c = classify_direct_sum_point(z, f, tol);
    CHECK(c == classify_direct_sum_point(z, f, tol));

    bool any_point = false;
    for (const auto& v : c.per_coordinate) any_point = any_point || v.spectral_class == SpectralClass::PointSpectrum;
    if (c.spectral_class == SpectralClass::PointSpectrum) {
      REQUIRE(c.witness_index);
      CHECK(f.coordinate(*c.witness_index)->classify_point(z, tol) == SpectralClass::PointSpectrum);
    }
    if (any_point) CHECK(c.spectral_class == SpectralClass::PointSpectrum);
    if (c.spectral_class == SpectralClass::Resolvent) CHECK(c.resolvent_sup.is_finite());
    CHECK(c.spectral_class != SpectralClass::Inconclusive);
  }
}

TEST_CASE("growing the prefix keeps point verdicts") {
  Gen g(35);
  for (int i = 0; i < 30; ++i) {
    std::vector<CoordinatePtr> ops{std::make_shared<MultipointOperator>(0.0, 1.0)};
    const ComplexPoint z(0.0, 2.0 * kPi * g.integer(-5, 5));
    for (int extra = 0; extra < 4; ++extra) {
      CHECK(classify_direct_sum_point(z, OperatorFamily(ops, TailRule::finite())).spectral_class ==
            SpectralClass::PointSpectrum);
      ops.push_back(g.integer(0, 1) ? std::static_pointer_cast<const CoordinateOperator>(std::make_shared<ShiftOperator>())
                                    : scalar(Complex(g.uniform(-3, 3), g.uniform(-3, 3))));
    }
  }
}

TEST_CASE("overlapping eigenvalues are all reported") {
  const OperatorFamily f({scalar(1.0), scalar(1.0)}, TailRule::finite());
  const auto c = classify_direct_sum_point(ComplexPoint(1.0, 0.0), f);
  CHECK(c.spectral_class == SpectralClass::PointSpectrum);
  CHECK(c.per_coordinate.size() == 2);
  CHECK(c.per_coordinate[1].spectral_class == SpectralClass::PointSpectrum);
}

TEST_CASE("scan grids") {
  const auto one = spectral_scan({0.0, 0.0, 2.0 * kPi, 2.0 * kPi}, {1, 1}, multipoint_family());
  REQUIRE(one.cells.size() == 1);
  CHECK(one.cells[0].spectral_class == SpectralClass::PointSpectrum);

  const OperatorFamily zero({scalar(0.0)}, TailRule::finite());
  const auto three = spectral_scan({-1.0, 1.0, -1.0, 1.0}, {3, 3}, zero);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      const auto expected = (i == 1 && j == 1) ? SpectralClass::PointSpectrum : SpectralClass::Resolvent;
      CHECK(three.at(i, j).spectral_class == expected);
    }
  }
  CHECK(three.at(2, 0).point == ComplexPoint(1.0, -1.0));

  const auto two = spectral_scan({0.0, 1.0, 0.0, 1.0}, {2, 2}, reciprocal_family());
  CHECK(two.at(0, 0).point == ComplexPoint(0.0, 0.0));
  CHECK(two.at(0, 0).spectral_class == SpectralClass::ContinuousSpectrum);
  CHECK(two.at(1, 0).spectral_class == SpectralClass::PointSpectrum);

  CHECK_THROWS_AS(spectral_scan({1.0, 0.0, 0.0, 1.0}, {2, 2}, zero), InvalidArgument);
  CHECK_THROWS_AS(spectral_scan({0.0, 0.0, 0.0, 1.0}, {2, 2}, zero), InvalidArgument);
  CHECK_THROWS_AS(spectral_scan({0.0, 1.0, 0.0, 1.0}, {0, 2}, zero), InvalidArgument);
}

TEST_CASE("parallel scan equals serial scan") {
  const ScanRegion region{-1.0, 8.0, -8.0, 8.0};
  const ScanGrid grid{21, 21};
  const auto serial = spectral_scan(region, grid, shift_diagonal_family());
  for (unsigned threads : {2u, 3u, 8u}) {
    const auto parallel = spectral_scan(region, grid, shift_diagonal_family(), {}, threads);
    CHECK(parallel.cells == serial.cells);
  }
  const auto mp = spectral_scan(region, grid, multipoint_family(), {}, 4);
  CHECK(mp.cells == spectral_scan(region, grid, multipoint_family()).cells);
}
