#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "squeeze/domain.hpp"
#include "test_util.hpp"

using namespace squeeze;

TEST_CASE("hermitian inner product") {
  CHECK(hermitian_inner(CVector{1.0, 0.0}, CVector{0.0, 1.0}) == cplx(0.0, 0.0));
  CHECK(hermitian_inner(CVector{0.6, 0.0}, CVector{0.6, 0.0}) == cplx(0.36, 0.0));
  // conj(i) * 1 = -i
  CHECK(hermitian_inner(CVector{cplx(0, 1), 0.0}, CVector{1.0, 0.0}) == cplx(0.0, -1.0));
  CHECK_THROWS_AS(hermitian_inner(CVector{1.0}, CVector{1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("conjugate symmetry") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const CVector a = testutil::gaussian_cvector(3, 11, i);
    const CVector z = testutil::gaussian_cvector(3, 12, i);
    const cplx lhs = hermitian_inner(a, z);
    const cplx rhs = std::conj(hermitian_inner(z, a));
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("minkowski gauge values") {
  const auto ball = ModelDomain::ball(2);
  const auto poly = ModelDomain::polydisk(2);
  CHECK(minkowski(ball, CVector{0.3, 0.4}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(minkowski(poly, CVector{0.5, 0.3}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(minkowski(ball, CVector{0.0, 0.0}) == 0.0);
  CHECK_THROWS_AS(minkowski(ball, CVector{0.1}), std::invalid_argument);
}

TEST_CASE("absolute homogeneity") {
  for (const auto kind : {ModelDomain::Kind::Ball, ModelDomain::Kind::Polydisk}) {
    const ModelDomain d{kind, 3};
    for (std::uint64_t i = 0; i < 500; ++i) {
      const CVector z = testutil::gaussian_cvector(3, 21, i);
      const cplx lam(testutil::gaussian(22, i, 0), testutil::gaussian(22, i, 1));
      const double lhs = minkowski(d, lam * z);
      const double rhs = std::abs(lam) * minkowski(d, z);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, rhs));
    }
  }
}

TEST_CASE("triangle inequality") {
  for (const auto kind : {ModelDomain::Kind::Ball, ModelDomain::Kind::Polydisk}) {
    const ModelDomain d{kind, 3};
    for (std::uint64_t i = 0; i < 500; ++i) {
      const CVector z = testutil::gaussian_cvector(3, 31, i);
      const CVector w = testutil::gaussian_cvector(3, 32, i);
      CHECK(minkowski(d, z + w) <= minkowski(d, z) + minkowski(d, w) + 1e-12);
    }
  }
}

TEST_CASE("ball gauge is unitarily invariant") {
  const auto ball = ModelDomain::ball(3);
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto U = testutil::random_unitary(3, 40 + i);
    const CVector z = testutil::gaussian_cvector(3, 41, i);
    CHECK(std::abs(minkowski(ball, testutil::apply_unitary(U, z)) - minkowski(ball, z)) < 1e-10);
  }
}

TEST_CASE("membership is strict") {
  const auto ball = ModelDomain::ball(2);
  const auto poly = ModelDomain::polydisk(2);
  CHECK(contains(ball, CVector{0.3, 0.4}, 1.0));
  CHECK_FALSE(contains(ball, CVector{0.3, 0.4}, 0.5));  // boundary point
  CHECK_FALSE(contains(poly, CVector{0.5, 0.3}, 0.4));
  CHECK_THROWS_AS(contains(ball, CVector{0.0, 0.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(contains(ball, CVector{0.0, 0.0}, 1.5), std::invalid_argument);
}

TEST_CASE("cvector validation") {
  CHECK_THROWS_AS(CVector(0), std::invalid_argument);
  CHECK(all_finite(CVector{0.1, cplx(0.2, -0.3)}));
  CVector bad{0.1, 0.2};
  bad[1] = cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_FALSE(all_finite(bad));
}
