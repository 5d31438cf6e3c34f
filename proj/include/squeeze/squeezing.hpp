#pragma once

#include <optional>
#include <string_view>

#include "squeeze/set_distance.hpp"

namespace squeeze {

// Lower/upper bound pair for invariants known only up to two-sided bounds.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// s_{A^n_r}(z) = e~(z) = (||z|| - r)/(1 - r ||z||) on the n-dim annulus
// r < ||z|| < 1, n >= 2.
double squeeze_annulus_ball(const CVector& z, double r);

// s of the polydisk with a closed concentric polydisk removed:
// max_i (max{|z_i|, r} - r)/(1 - r |z_i|).
double squeeze_polydisk_minus_polydisk(const CVector& z, double r);

// s = e~ of the polydisk with a closed ball removed; numerical minimum over
// the sphere shell.
double squeeze_polydisk_minus_ball(const CVector& z, double r,
                                   std::uint64_t budget = kDefaultBudget,
                                   std::uint64_t seed = kDefaultSeed);

// s = e~ of the ball with a closed polydisk removed (0 < r < 1/sqrt(n)).
double squeeze_ball_minus_polydisk(const CVector& z, double r,
                                   std::uint64_t budget = kDefaultBudget,
                                   std::uint64_t seed = kDefaultSeed);

// Two-sided bounds for the punctured polydisk:
// [min{||z||/sqrt(n), 1/sqrt(n)}, min{max_i |z_i|, 1/sqrt(n)}]. Collapses to
// 1/sqrt(n) once ||z|| >= 1 and to the common modulus when all |z_i| agree.
Interval squeeze_bounds_punctured_polydisk(const CVector& z);

// Bounds for the punctured disk times a polydisk:
// [|z_1|/sqrt(1 + (n-1)|z_1|^2), min{|z_1|, 1/sqrt(n)}].
Interval squeeze_bounds_punctured_disk_times_polydisk(const CVector& z);

// Polydisk-model squeezing of the punctured ball: min{||z||, 1/sqrt(n)},
// n >= 2.
double squeeze_punctured_ball_polydisk_model(const CVector& z);

// One-variable results: s_{D*}(z) = |z|, s_{A_r}(z) = max{|z|, r/|z|}, and
// the punctured ball s(z) = ||z|| in any dimension.
double squeeze_punctured_disk_1d(cplx z);
double squeeze_annulus_1d(cplx z, double r);
double squeeze_punctured_ball(const CVector& z);

// Squeezing of Omega minus a compact set as the set distance, together with
// which Fridman equalities the hypotheses grant: s = e~ (Caratheodory) and
// e~ = e (Kobayashi, codimension >= 2 analytic sets only).
struct SqueezeSetResult {
  MinimizerResult min;
  bool caratheodory_fridman_equal = false;
  bool kobayashi_fridman_equal = false;
};

SqueezeSetResult squeeze_omega_minus_set(const ModelDomain& omega, const BoundarySet& s,
                                         const CVector& z,
                                         std::uint64_t budget = kDefaultBudget,
                                         std::uint64_t seed = kDefaultSeed);

bool caratheodory_fridman_equal(const ModelDomain& omega, const BoundarySet& s);
bool kobayashi_fridman_equal(const BoundarySet& s);

// Catalog domains addressable from the CLI and the scanners.
struct DomainSpec {
  enum class Kind {
    AnnulusBall,
    PolydiskMinusPolydisk,
    PolydiskMinusBall,
    BallMinusPolydisk,
    PuncturedPolydisk,
    PuncturedDiskTimesPolydisk,
    PuncturedBallPolydiskModel,
    PuncturedDisk1D,
    Annulus1D,
    OmegaMinusSet,
  };

  Kind kind = Kind::AnnulusBall;
  int dim = 2;
  double r = 0.25;
  ModelDomain omega;  // OmegaMinusSet only
  BoundarySet set;    // OmegaMinusSet only

  bool contains(const CVector& z) const;
  bool returns_interval() const;
  void validate() const;

  static std::optional<Kind> kind_from_name(std::string_view name);
  static std::string_view kind_name(Kind k);
};

struct EvalResult {
  bool is_interval = false;
  double value = 0.0;
  Interval interval;
};

EvalResult eval_domain(const DomainSpec& spec, const CVector& z,
                       std::uint64_t budget = kDefaultBudget,
                       std::uint64_t seed = kDefaultSeed);

}  // namespace squeeze
