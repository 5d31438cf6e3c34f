#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "squeeze/squeezing.hpp"

namespace squeeze {

// Scalar field on a domain of C^n plus a membership test for that domain.
struct Field {
  std::function<double(const CVector&)> eval;
  std::function<bool(const CVector&)> contains;
  std::string label;
  int dim = 1;
};

// One disproved sub-mean-value inequality: the field value at the center
// exceeds its average over the circle center + radius * e^(i theta) * direction.
struct Violation {
  CVector center;
  CVector direction;  // unit vector
  double radius = 0.0;
  double center_value = 0.0;
  double circle_mean = 0.0;
  double deficit = 0.0;  // center_value - circle_mean
};

struct PshReport {
  std::vector<Violation> violations;
  std::uint64_t scanned = 0;  // discs actually tested
  std::uint64_t skipped = 0;  // discs leaving the domain
  int quadrature_n = 0;
};

// Trapezoidal average over quad_n equispaced angles; for the full period this
// is the plain sample mean and is exact for trigonometric polynomials of
// degree below quad_n / 2. Throws if any sampled point leaves the domain.
double circle_mean(const Field& f, const CVector& center, const CVector& direction,
                   double radius, int quad_n);

// Violation record iff f(center) - circle_mean > tol.
std::optional<Violation> submean_check(const Field& f, const CVector& center,
                                       const CVector& direction, double radius, int quad_n,
                                       double tol);

// Sweeps centers x seeded random unit directions x radii; infeasible discs
// are skipped and counted. Deterministic for a given seed; violations are
// ordered by (center, direction, radius) index.
PshReport scan_psh(const Field& f, const std::vector<CVector>& centers, int directions,
                   const std::vector<double>& radii, int quad_n, double tol,
                   std::uint64_t seed);

// Certificate for the ball with a cap-deleted sphere shell removed: checks
// the slice identity d(z) = (r - ||z||)/(1 - r ||z||) on the first-coordinate
// slice against the numerical set distance (20 points, 2e-3), then records
// the sub-mean-value violation of the numerical field at the origin with
// circle radius r/2.
PshReport shell_cap_certificate(double r, double eps, int n, int quad_n = 512,
                                std::uint64_t budget = kDefaultBudget,
                                std::uint64_t seed = kDefaultSeed);

// Ready-made fields.
Field max_modulus_field(int n);                      // max_i |z_i| on the unit polydisk
Field norm_field(int n);                             // ||z|| on the unit ball
Field slice_distance_field(int n, double r);         // (r - ||z||)/(1 - r||z||) on the open r-ball
Field set_distance_field(const ModelDomain& omega, const BoundarySet& s,
                         std::uint64_t budget = kDefaultBudget,
                         std::uint64_t seed = kDefaultSeed);

}  // namespace squeeze
