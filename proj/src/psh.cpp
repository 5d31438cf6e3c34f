#include "squeeze/psh.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "squeeze/sampling.hpp"

namespace squeeze {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_disc_args(const Field& f, const CVector& center, const CVector& direction,
                     double radius, int quad_n) {
  if (center.dim() != f.dim || direction.dim() != f.dim)
    throw std::invalid_argument("circle_mean: dimension mismatch");
  if (std::abs(norm(direction) - 1.0) > 1e-12)
    throw std::invalid_argument("circle_mean: direction must be a unit vector");
  if (!(radius > 0.0)) throw std::invalid_argument("circle_mean: radius must be positive");
  if (quad_n < 16 || quad_n % 2 != 0)
    throw std::invalid_argument("circle_mean: quad_n must be even and >= 16");
}

CVector circle_point(const CVector& center, const CVector& direction, double radius,
                     double theta) {
  return center + std::polar(radius, theta) * direction;
}

}  // namespace

double circle_mean(const Field& f, const CVector& center, const CVector& direction,
                   double radius, int quad_n) {
  check_disc_args(f, center, direction, radius, quad_n);
  double sum = 0.0;
  for (int k = 0; k < quad_n; ++k) {
    const double theta = kTwoPi * k / quad_n;
    const CVector p = circle_point(center, direction, radius, theta);
    if (!f.contains(p)) {
      std::ostringstream msg;
      msg << "circle_mean: circle leaves the domain of " << f.label << " at theta=" << theta;
      throw std::domain_error(msg.str());
    }
    sum += f.eval(p);
  }
  return sum / quad_n;
}

std::optional<Violation> submean_check(const Field& f, const CVector& center,
                                       const CVector& direction, double radius, int quad_n,
                                       double tol) {
  check_disc_args(f, center, direction, radius, quad_n);
  if (!f.contains(center)) throw std::domain_error("submean_check: center outside the domain");
  const double v0 = f.eval(center);
  const double mean = circle_mean(f, center, direction, radius, quad_n);
  const double deficit = v0 - mean;
  if (deficit > tol) return Violation{center, direction, radius, v0, mean, deficit};
  return std::nullopt;
}

PshReport scan_psh(const Field& f, const std::vector<CVector>& centers, int directions,
                   const std::vector<double>& radii, int quad_n, double tol,
                   std::uint64_t seed) {
  if (directions < 1) throw std::invalid_argument("scan_psh: directions must be >= 1");
  PshReport report;
  report.quadrature_n = quad_n;

  const std::size_t total = centers.size() * static_cast<std::size_t>(directions) * radii.size();
  std::vector<std::optional<Violation>> slots(total);
  std::vector<char> feasible(total, 0);

  rng::KroneckerSeq seq(std::max(1, 2 * f.dim - 1), seed);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
    const std::size_t i = static_cast<std::size_t>(idx);
    const std::size_t per_center = static_cast<std::size_t>(directions) * radii.size();
    const std::size_t ci = i / per_center;
    const std::size_t di = (i % per_center) / radii.size();
    const std::size_t ri = i % radii.size();

    CVector dir(f.dim);
    sphere_point(seq, ci * static_cast<std::size_t>(directions) + di, 1.0, dir);
    const CVector& center = centers[ci];
    const double radius = radii[ri];

    // Feasibility: the center and the whole sampled circle stay inside.
    bool ok = f.contains(center);
    for (int k = 0; ok && k < quad_n; ++k)
      ok = f.contains(circle_point(center, dir, radius, kTwoPi * k / quad_n));
    if (!ok) continue;
    feasible[i] = 1;
    slots[i] = submean_check(f, center, dir, radius, quad_n, tol);
  }

  for (std::size_t i = 0; i < total; ++i) {
    if (!feasible[i]) {
      ++report.skipped;
      continue;
    }
    ++report.scanned;
    if (slots[i]) report.violations.push_back(*slots[i]);
  }
  return report;
}

PshReport shell_cap_certificate(double r, double eps, int n, int quad_n, std::uint64_t budget,
                                std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("shell_cap_certificate: needs n >= 2");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("shell_cap_certificate: bad radius");
  if (!(eps > 0.0)) throw std::invalid_argument("shell_cap_certificate: cap radius must be positive");
  if (r + eps > 1.0)
    throw std::invalid_argument("shell_cap_certificate: cap ball must stay inside the unit ball");
  if (eps > r)
    throw std::invalid_argument(
        "shell_cap_certificate: cap too large, the slice minimizers would be removed");

  CVector q(n);
  q[n - 1] = r;
  const auto set = BoundarySet::sphere_shell_minus_cap(n, r, q, eps);
  const auto omega = ModelDomain::ball(n);
  Field field = set_distance_field(omega, set, budget, seed);

  // Slice identity along the first coordinate axis, which stays clear of the
  // cap around (0, ..., 0, r).
  constexpr int kSlicePoints = 20;
  constexpr double kSliceTol = 2e-3;
  for (int k = 0; k < kSlicePoints; ++k) {
    const double t = r * (k + 0.5) / kSlicePoints;
    CVector z(n);
    z[0] = std::polar(t, 0.4 * k);
    const double expected = (r - t) / (1.0 - r * t);
    const double got = field.eval(z);
    if (std::abs(got - expected) > kSliceTol) {
      std::ostringstream msg;
      msg << "shell_cap_certificate: slice identity failed at t=" << t << " (got " << got
          << ", expected " << expected << ")";
      throw std::runtime_error(msg.str());
    }
  }

  PshReport report;
  report.quadrature_n = quad_n;
  report.scanned = 1;
  CVector center(n);
  const auto violation = submean_check(field, center, unit_axis(n, 0), r / 2.0, quad_n, 1e-6);
  if (violation) report.violations.push_back(*violation);
  return report;
}

Field max_modulus_field(int n) {
  Field f;
  f.dim = n;
  f.label = "max-modulus";
  f.eval = [](const CVector& z) { return max_mod(z); };
  f.contains = [n](const CVector& z) { return z.dim() == n && max_mod(z) < 1.0; };
  return f;
}

Field norm_field(int n) {
  Field f;
  f.dim = n;
  f.label = "norm";
  f.eval = [](const CVector& z) { return norm(z); };
  f.contains = [n](const CVector& z) { return z.dim() == n && norm(z) < 1.0; };
  return f;
}

Field slice_distance_field(int n, double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("slice_distance_field: bad radius");
  Field f;
  f.dim = n;
  f.label = "slice-distance";
  f.eval = [r](const CVector& z) {
    const double nz = norm(z);
    return (r - nz) / (1.0 - r * nz);
  };
  f.contains = [n, r](const CVector& z) { return z.dim() == n && norm(z) < r; };
  return f;
}

Field set_distance_field(const ModelDomain& omega, const BoundarySet& s, std::uint64_t budget,
                         std::uint64_t seed) {
  Field f;
  f.dim = omega.dim;
  f.label = "set-distance";
  f.eval = [omega, s, budget, seed](const CVector& z) {
    return dist_generic(omega, z, s, budget, seed).value;
  };
  f.contains = [omega, s](const CVector& z) {
    return z.dim() == omega.dim && contains(omega, z, 1.0) && s.membership_residual(z) > 1e-12;
  };
  return f;
}

}  // namespace squeeze
