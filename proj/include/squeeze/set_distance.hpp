#pragma once

#include <cstdint>

#include "squeeze/boundary_set.hpp"
#include "squeeze/caratheodory.hpp"
#include "squeeze/domain.hpp"

namespace squeeze {

constexpr std::uint64_t kDefaultBudget = 10000;
constexpr std::uint64_t kDefaultOracleSamples = 100000;
constexpr std::uint64_t kDefaultSeed = 77001144;

enum class Method { ClosedForm, GridRefine, Sampling };

const char* method_name(Method m);

struct MinimizerResult {
  double value = 0.0;
  CVector argmin;
  Method method = Method::ClosedForm;
  std::uint64_t samples = 0;  // objective evaluations spent
  bool converged = true;      // false when refinement still moved > 1e-6
};

// min over {||w|| = r} of tanh_c_ball(z, w): |(||z|| - r)| / (1 - r ||z||).
// Vanishes when z lies on the shell.
double dist_sphere_in_ball(const CVector& z, double r);

// min over the polydisk shell of tanh_c_polydisk(z, .). Closed form
// max_i (max{|z_i|, r} - r) / (1 - r |z_i|) once some |z_i| >= r; from
// strictly inside the r-polydisk the minimum is computed numerically (no
// formula is claimed for that regime).
double dist_polydisk_shell_in_polydisk(const CVector& z, double r,
                                       std::uint64_t budget = kDefaultBudget,
                                       std::uint64_t seed = kDefaultSeed);

// min over {||w|| = r} of tanh_c_polydisk(z, w). The objective depends only
// on the moduli of w, so the search runs on the nonnegative orthant of the
// radius-r sphere in R^n.
MinimizerResult dist_sphere_in_polydisk(const CVector& z, double r,
                                        std::uint64_t budget = kDefaultBudget,
                                        std::uint64_t seed = kDefaultSeed);

// min over the polydisk shell of tanh_c_ball(z, w), for 0 < r < 1/sqrt(n) so
// the closed r-polydisk sits inside the ball. Moduli-only search with the
// optimal phase alignment folded into the objective.
MinimizerResult dist_polydisk_shell_in_ball(const CVector& z, double r,
                                            std::uint64_t budget = kDefaultBudget,
                                            std::uint64_t seed = kDefaultSeed);

// min over i of min over H_i intersected with the ball of tanh_c_ball(z, .).
// Exact: the ball automorphism sending z to 0 maps each affine hyperplane to
// an affine hyperplane, where the minimum is the Euclidean distance from the
// origin.
MinimizerResult dist_hyperplanes_in_ball(const CVector& z, const std::vector<Hyperplane>& planes);

// d_{c_Omega}^S(z): dispatches to a closed form where one exists, otherwise
// quasi-uniform seeding plus shrinking coordinate descent. z on S gives 0.
MinimizerResult dist_generic(const ModelDomain& d, const CVector& z, const BoundarySet& s,
                             std::uint64_t budget = kDefaultBudget,
                             std::uint64_t seed = kDefaultSeed);

// Independent brute-force upper bound: the minimum of tanh_c(d, z, .) over
// `samples` quasi-uniform points of S (exact enumeration for point sets).
// Never refines; used as the oracle the closed forms are tested against.
double grid_min_oracle(const ModelDomain& d, const CVector& z, const BoundarySet& s,
                       std::uint64_t samples = kDefaultOracleSamples,
                       std::uint64_t seed = kDefaultSeed);

}  // namespace squeeze
