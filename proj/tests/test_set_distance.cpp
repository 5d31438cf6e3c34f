#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "squeeze/sampling.hpp"
#include "squeeze/set_distance.hpp"
#include "test_util.hpp"

using namespace squeeze;

namespace {

constexpr double kOracleTol = 2e-3;
constexpr std::uint64_t kOracleSamples = 100000;

double mob(double s, double t) { return std::abs(s - t) / (1.0 - s * t); }

// Brute-force minimum over the moduli quarter circle m = r (cos a, sin a),
// independent of the production search path.
double quarter_circle_brute(const CVector& z, double r, int steps) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= steps; ++k) {
    const double a = 0.5 * std::numbers::pi * k / steps;
    const double m1 = r * std::cos(a);
    const double m2 = r * std::sin(a);
    best = std::min(best, std::max(mob(std::abs(z[0]), m1), mob(std::abs(z[1]), m2)));
  }
  return best;
}

}  // namespace

TEST_CASE("sphere shell in ball: closed form") {
  CHECK(dist_sphere_in_ball(CVector{0.0, 0.0}, 0.25) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(dist_sphere_in_ball(CVector{0.5, 0.0}, 0.25) ==
        doctest::Approx(2.0 / 7.0).epsilon(1e-15));
  CHECK(dist_sphere_in_ball(CVector{0.1, 0.0}, 0.25) ==
        doctest::Approx(0.15 / 0.975).epsilon(1e-15));
  // z on the shell
  CHECK(dist_sphere_in_ball(CVector{0.25, 0.0}, 0.25) == 0.0);
  CHECK_THROWS_AS(dist_sphere_in_ball(CVector{1.0, 0.2}, 0.25), std::domain_error);
}

TEST_CASE("sphere shell in ball: oracle confirmation") {
  const auto ball = ModelDomain::ball(2);
  const auto shell = BoundarySet::sphere_shell(2, 0.25);
  for (const auto& z : {CVector{0.5, 0.0}, CVector{0.1, 0.0}, CVector{cplx(0.2, 0.3), 0.4}}) {
    const double closed = dist_sphere_in_ball(z, 0.25);
    const double oracle = grid_min_oracle(ball, z, shell, kOracleSamples, 17);
    CHECK(closed <= oracle + 1e-12);
    CHECK(std::abs(closed - oracle) <= 1e-3);
  }
  // spot value straight from the oracle
  CHECK(std::abs(grid_min_oracle(ball, CVector{0.5, 0.0}, shell, kOracleSamples, 17) -
                 2.0 / 7.0) <= 1e-3);
}

TEST_CASE("polydisk shell in polydisk") {
  CHECK(dist_polydisk_shell_in_polydisk(CVector{0.75, 0.2}, 0.5) ==
        doctest::Approx(0.4).epsilon(1e-15));
  // From the center the nearest shell point sits at gauge radius r.
  CHECK(dist_polydisk_shell_in_polydisk(CVector{0.0, 0.0}, 0.5) ==
        doctest::Approx(0.5).epsilon(1e-6));
  // Strictly inside: numerical minimum against the oracle and against the
  // coordinatewise projection candidate (r - max|z_i|)/(1 - r max|z_i|).
  const CVector z{cplx(0.2, 0.05), 0.1};
  const double got = dist_polydisk_shell_in_polydisk(z, 0.5);
  const double oracle =
      grid_min_oracle(ModelDomain::polydisk(2), z, BoundarySet::polydisk_shell(2, 0.5),
                      2 * kOracleSamples, 19);
  CHECK(got <= oracle + 1e-5);
  CHECK(std::abs(got - oracle) <= kOracleTol);
  const double mz = max_mod(z);
  CHECK(got == doctest::Approx((0.5 - mz) / (1.0 - 0.5 * mz)).epsilon(1e-6));
}

TEST_CASE("sphere shell in polydisk") {
  // Symmetric input: the balanced moduli point is the minimizer.
  const CVector zs{0.5, 0.5};
  const double brute = quarter_circle_brute(zs, 0.25, 100000);
  const auto sym = dist_sphere_in_polydisk(zs, 0.25);
  const double candidate = (0.5 - 0.25 / std::sqrt(2.0)) / (1.0 - 0.5 * 0.25 / std::sqrt(2.0));
  CHECK(std::abs(sym.value - brute) <= kOracleTol);
  CHECK(sym.value == doctest::Approx(candidate).epsilon(2e-5));
  CHECK(sym.method == Method::GridRefine);

  // One active coordinate reduces to the disk distance.
  const auto axis = dist_sphere_in_polydisk(CVector{0.6, 0.0}, 0.25);
  CHECK(axis.value == doctest::Approx((0.6 - 0.25) / (1.0 - 0.25 * 0.6)).epsilon(2e-5));

  // At the origin the objective is max_i m_i, minimized by the balanced point.
  const auto center = dist_sphere_in_polydisk(CVector{0.0, 0.0}, 0.25);
  CHECK(center.value == doctest::Approx(0.25 / std::sqrt(2.0)).epsilon(2e-5));
  CHECK(std::abs(center.value - quarter_circle_brute(CVector{0.0, 0.0}, 0.25, 100000)) <=
        kOracleTol);
}

TEST_CASE("sphere shell in polydisk: full-shell oracle") {
  const auto poly = ModelDomain::polydisk(2);
  for (std::uint64_t i = 0; i < 20; ++i) {
    CVector z = testutil::random_polydisk_point(2, 120, i, 0.8);
    const double r = 0.15 + 0.25 * testutil::u01(121, i, 0);
    if (std::abs(norm(z) - r) < 0.1) z = cplx(0.5, 0.0) * z;
    const auto res = dist_sphere_in_polydisk(z, r);
    const double oracle = grid_min_oracle(poly, z, BoundarySet::sphere_shell(2, r),
                                          4 * kOracleSamples, 900 + i);
    CHECK(res.value <= oracle + 1e-5);
    CHECK(std::abs(res.value - oracle) <= kOracleTol);
    // argmin consistency
    CHECK(std::abs(tanh_c_polydisk(z, res.argmin) - res.value) <= 1e-9);
    CHECK(std::abs(norm(res.argmin) - r) <= 1e-9);
  }
}

TEST_CASE("polydisk shell in ball") {
  // At the origin the nearest shell point has a single nonzero coordinate.
  const auto center = dist_polydisk_shell_in_ball(CVector{0.0, 0.0}, 0.3);
  CHECK(center.value == doctest::Approx(0.3).epsilon(2e-5));

  // z on the shell
  const auto on_set = dist_generic(ModelDomain::ball(2), CVector{0.3, 0.1},
                                   BoundarySet::polydisk_shell(2, 0.3));
  CHECK(on_set.value == 0.0);

  CHECK_THROWS_AS(dist_polydisk_shell_in_ball(CVector{0.0, 0.0}, 0.8), std::invalid_argument);

  const auto ball = ModelDomain::ball(2);
  for (std::uint64_t i = 0; i < 20; ++i) {
    CVector z = testutil::random_ball_point(2, 130, i, 0.8);
    const double r = 0.1 + 0.35 * testutil::u01(131, i, 0);  // < 1/sqrt(2)
    if (std::abs(max_mod(z) - r) < 0.1) z = cplx(0.4, 0.0) * z;
    const auto res = dist_polydisk_shell_in_ball(z, r);
    const double oracle =
        grid_min_oracle(ball, z, BoundarySet::polydisk_shell(2, r), 4 * kOracleSamples, 950 + i);
    CHECK(res.value <= oracle + 1e-5);
    CHECK(std::abs(res.value - oracle) <= kOracleTol);
    CHECK(std::abs(tanh_c_ball(z, res.argmin) - res.value) <= 1e-9);
    CHECK(std::abs(max_mod(res.argmin) - r) <= 1e-9);
  }
}

TEST_CASE("hyperplane distances in the ball") {
  // Single plane through (0.6, 0) with normal e1, queried from the origin.
  const Hyperplane h{CVector{0.6, 0.0}, CVector{1.0, 0.0}};
  const auto from_zero = dist_hyperplanes_in_ball(CVector{0.0, 0.0}, {h});
  CHECK(from_zero.value == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(from_zero.method == Method::ClosedForm);

  // A point on the plane.
  const auto on_plane = dist_hyperplanes_in_ball(CVector{0.6, 0.3}, {h});
  CHECK(on_plane.value <= 1e-12);

  // Pushed-point arrangement: base at radius R with normal parallel to the
  // base gives distance R from the origin.
  const double r = 0.3, R = 0.6;
  CVector zi{cplx(0.18, 0.24), cplx(0.0, 0.0)};  // norm 0.3
  const CVector pi = cplx(R / r, 0.0) * zi;
  const Hyperplane hp{pi, zi - pi};
  const auto from_center = dist_hyperplanes_in_ball(CVector{0.0, 0.0}, {hp});
  CHECK(from_center.value == doctest::Approx(R).epsilon(1e-12));
}

TEST_CASE("hyperplane closed form matches the sampling oracle") {
  const auto ball = ModelDomain::ball(2);
  for (std::uint64_t i = 0; i < 30; ++i) {
    const CVector base = testutil::random_ball_point(2, 140, i, 0.7);
    CVector normal = testutil::gaussian_cvector(2, 141, i);
    const CVector z = testutil::random_ball_point(2, 142, i, 0.8);
    const auto set = BoundarySet::hyperplane_arrangement(2, {Hyperplane{base, normal}});
    const auto res = dist_hyperplanes_in_ball(z, set.planes);
    const double oracle = grid_min_oracle(ball, z, set, 4 * kOracleSamples, 700 + i);
    CHECK(res.value <= oracle + 1e-12);
    CHECK(std::abs(res.value - oracle) <= kOracleTol);
    CHECK(std::abs(tanh_c_ball(z, res.argmin) - res.value) <= 1e-9);
    CHECK(set.membership_residual(res.argmin) <= 1e-9);
    CHECK(norm(res.argmin) < 1.0);
  }
}

TEST_CASE("point sets and vertical planes enumerate exactly") {
  const auto poly = ModelDomain::polydisk(2);
  const auto ball = ModelDomain::ball(2);
  const CVector zero2{0.0, 0.0};
  const auto origin = BoundarySet::point_set(2, {zero2});
  for (std::uint64_t i = 0; i < 200; ++i) {
    const CVector zp = testutil::random_polydisk_point(2, 150, i);
    CHECK(dist_generic(poly, zp, origin).value == doctest::Approx(max_mod(zp)).epsilon(1e-14));
    const CVector zb = testutil::random_ball_point(2, 151, i);
    CHECK(dist_generic(ball, zb, origin).value == doctest::Approx(norm(zb)).epsilon(1e-14));
  }

  const auto planes = BoundarySet::vertical_hyperplanes(2, {cplx(0.6, 0.0)});
  const auto res = dist_generic(poly, zero2, planes);
  CHECK(res.value == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(res.argmin[0] == cplx(0.6, 0.0));

  // z on the set returns 0 with argmin z.
  const CVector on{cplx(0.6, 0.0), cplx(0.1, 0.2)};
  const auto hit = dist_generic(poly, on, planes);
  CHECK(hit.value == 0.0);
  CHECK(hit.argmin == on);

  CHECK_THROWS_AS(BoundarySet::point_set(2, {}), std::invalid_argument);
}

TEST_CASE("closed forms against the oracle on random inputs") {
  const auto ball = ModelDomain::ball(2);
  const auto poly = ModelDomain::polydisk(2);
  const int kInputs = 200;

  for (int i = 0; i < kInputs; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    const double r = 0.15 + 0.2 * testutil::u01(160, idx, 9);

    // Sphere shell in the ball, both sides of the shell. Values close to the
    // set are skipped: there the objective is conical and min-sampling only
    // converges linearly, outside what this budget resolves.
    {
      const CVector z = testutil::random_ball_point(2, 161, idx, 0.8);
      const double closed = dist_sphere_in_ball(z, r);
      if (closed >= 0.15) {
        const double oracle =
            grid_min_oracle(ball, z, BoundarySet::sphere_shell(2, r), kOracleSamples, idx);
        CHECK(closed <= oracle + 1e-12);
        CHECK(std::abs(closed - oracle) <= kOracleTol);
      }
    }

    // Polydisk shell in the polydisk, outside branch.
    {
      const double rp = 0.2 + 0.15 * testutil::u01(160, idx, 10);
      CVector z = testutil::random_polydisk_point(2, 162, idx, 0.75);
      if (max_mod(z) <= rp) z[0] = std::polar(rp + 0.8 * (0.75 - rp), 0.3 * i);
      const double closed = dist_polydisk_shell_in_polydisk(z, rp);
      if (closed >= 0.15) {
        const double oracle =
            grid_min_oracle(poly, z, BoundarySet::polydisk_shell(2, rp), kOracleSamples, idx);
        CHECK(closed <= oracle + 1e-12);
        CHECK(std::abs(closed - oracle) <= kOracleTol);
      }
    }

    // Point sets: enumeration on both sides makes the comparison exact.
    {
      std::vector<CVector> pts;
      for (std::uint64_t k = 0; k < 4; ++k)
        pts.push_back(testutil::random_polydisk_point(2, 163 + k, idx, 0.85));
      const auto set = BoundarySet::point_set(2, pts);
      const CVector z = testutil::random_polydisk_point(2, 167, idx, 0.9);
      const double closed = dist_generic(poly, z, set).value;
      const double oracle = grid_min_oracle(poly, z, set, kOracleSamples, idx);
      CHECK(closed <= oracle + 1e-12);
      CHECK(std::abs(closed - oracle) <= 1e-12);
    }

    // Vertical hyperplanes, keeping z1 off the planes so the slice sampling
    // resolves the minimum.
    {
      std::vector<cplx> ps;
      for (std::uint32_t k = 0; k < 3; ++k)
        ps.push_back(std::polar(0.2 + 0.6 * testutil::u01(168, idx, k),
                                6.28 * testutil::u01(169, idx, k)));
      CVector z = testutil::random_polydisk_point(2, 170, idx, 0.7);
      double dmin = 1.0;
      for (const auto& p : ps) dmin = std::min(dmin, mobius_dist(p, z[0]));
      if (dmin < 0.05) continue;
      const auto set = BoundarySet::vertical_hyperplanes(2, ps);
      const double closed = dist_generic(poly, z, set).value;
      const double oracle = grid_min_oracle(poly, z, set, kOracleSamples, idx);
      CHECK(closed <= oracle + 1e-12);
      CHECK(std::abs(closed - oracle) <= kOracleTol);
    }
  }
}

TEST_CASE("distance to the solid ball equals distance to its shell") {
  // Convexity: from outside, the nearest point of the solid ball lies on the
  // shell. The solid-ball oracle lives only in this test.
  rng::KroneckerSeq seq(2 * 2, 777);
  for (std::uint64_t i = 0; i < 8; ++i) {
    const double r = 0.2 + 0.2 * testutil::u01(180, i, 0);
    CVector z = testutil::random_ball_point(2, 181, i, 0.8);
    if (norm(z) <= r + 0.1) z = cplx((r + 0.3) / std::max(norm(z), 1e-9), 0.0) * z;
    CVector w(2);
    double solid = std::numeric_limits<double>::infinity();
    for (std::uint64_t k = 0; k < 10 * kOracleSamples; ++k) {
      sphere_point(seq, k, r, w);
      const double scale = std::pow(seq.coord(k, 3), 1.0 / 4.0);
      solid = std::min(solid, tanh_c_ball(z, cplx(scale, 0.0) * w));
    }
    CHECK(std::abs(solid - dist_sphere_in_ball(z, r)) <= kOracleTol);
    CHECK(dist_sphere_in_ball(z, r) <= solid + 1e-12);
  }
}

TEST_CASE("monotone under set inclusion") {
  // Removing the cap leaves a subset, so the distance can only grow.
  const auto ball = ModelDomain::ball(2);
  CVector q(2);
  q[1] = 0.4;
  const auto shell = BoundarySet::sphere_shell(2, 0.4);
  const auto capped = BoundarySet::sphere_shell_minus_cap(2, 0.4, q, 0.15);
  for (std::uint64_t i = 0; i < 10; ++i) {
    const CVector z = testutil::random_ball_point(2, 190, i, 0.85);
    const double full = dist_generic(ball, z, shell).value;
    const double part = dist_generic(ball, z, capped).value;
    CHECK(full <= part + 1e-9);
  }
}

TEST_CASE("cap-deleted shell distance is self-consistent") {
  const auto ball = ModelDomain::ball(2);
  CVector q(2);
  q[1] = 0.5;
  const auto capped = BoundarySet::sphere_shell_minus_cap(2, 0.5, q, 0.05);
  for (std::uint64_t i = 0; i < 8; ++i) {
    CVector z = testutil::random_ball_point(2, 195, i, 0.75);
    if (std::abs(norm(z) - 0.5) < 0.12) z = cplx(0.3 / std::max(norm(z), 1e-12), 0.0) * z;
    // Keep the radial shell point clear of the cap: a minimizer pinned to the
    // cap rim converges too slowly for the sampling oracle to confirm.
    if (dist_euclid(cplx(0.5 / norm(z), 0.0) * z, q) < 0.1) z[1] = -z[1];
    const auto res = dist_generic(ball, z, capped);
    CHECK(std::abs(tanh_c_ball(z, res.argmin) - res.value) <= 1e-9);
    CHECK(capped.membership_residual(res.argmin) <= 1e-9);
    const double oracle = grid_min_oracle(ball, z, capped, 4 * kOracleSamples, 400 + i);
    CHECK(res.value <= oracle + 1e-5);
    CHECK(std::abs(res.value - oracle) <= kOracleTol);
  }
}

TEST_CASE("oracle determinism and subset bound") {
  const auto ball = ModelDomain::ball(2);
  const auto shell = BoundarySet::sphere_shell(2, 0.3);
  const CVector z{cplx(0.5, 0.1), cplx(-0.2, 0.3)};
  const double a = grid_min_oracle(ball, z, shell, 50000, 42);
  const double b = grid_min_oracle(ball, z, shell, 50000, 42);
  CHECK(a == b);
  CHECK(dist_sphere_in_ball(z, 0.3) <= a + 1e-12);
  CHECK_THROWS_AS(grid_min_oracle(ball, z, shell, 10, 42), std::invalid_argument);
}
