#include "squeeze/squeezing.hpp"

#include <cmath>
#include <stdexcept>

namespace squeeze {

double squeeze_annulus_ball(const CVector& z, double r) {
  if (z.dim() < 2) throw std::invalid_argument("squeeze_annulus_ball: needs n >= 2");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("squeeze_annulus_ball: bad radius");
  const double nz = norm(z);
  if (!(nz > r && nz < 1.0))
    throw std::domain_error("squeeze_annulus_ball: z outside the annulus");
  return (nz - r) / (1.0 - r * nz);
}

double squeeze_polydisk_minus_polydisk(const CVector& z, double r) {
  if (z.dim() < 2) throw std::invalid_argument("squeeze_polydisk_minus_polydisk: needs n >= 2");
  if (!(r > 0.0 && r < 1.0))
    throw std::invalid_argument("squeeze_polydisk_minus_polydisk: bad radius");
  const double mz = max_mod(z);
  if (!(mz < 1.0) || !(mz > r))
    throw std::domain_error("squeeze_polydisk_minus_polydisk: z outside the domain");
  double best = 0.0;
  for (int i = 0; i < z.dim(); ++i) {
    const double m = std::abs(z[i]);
    best = std::max(best, (std::max(m, r) - r) / (1.0 - r * m));
  }
  return best;
}

double squeeze_polydisk_minus_ball(const CVector& z, double r, std::uint64_t budget,
                                   std::uint64_t seed) {
  if (!(norm(z) > r))
    throw std::domain_error("squeeze_polydisk_minus_ball: z inside the removed ball");
  return dist_sphere_in_polydisk(z, r, budget, seed).value;
}

double squeeze_ball_minus_polydisk(const CVector& z, double r, std::uint64_t budget,
                                   std::uint64_t seed) {
  if (!(max_mod(z) > r))
    throw std::domain_error("squeeze_ball_minus_polydisk: z inside the removed polydisk");
  return dist_polydisk_shell_in_ball(z, r, budget, seed).value;
}

Interval squeeze_bounds_punctured_polydisk(const CVector& z) {
  const int n = z.dim();
  if (n < 2) throw std::invalid_argument("squeeze_bounds_punctured_polydisk: needs n >= 2");
  const double mz = max_mod(z);
  if (!(mz < 1.0)) throw std::domain_error("squeeze_bounds_punctured_polydisk: z outside the polydisk");
  if (!(mz > 0.0)) throw std::domain_error("squeeze_bounds_punctured_polydisk: z = 0");
  const double isq = 1.0 / std::sqrt(static_cast<double>(n));
  return {std::min(norm(z) * isq, isq), std::min(mz, isq)};
}

Interval squeeze_bounds_punctured_disk_times_polydisk(const CVector& z) {
  const int n = z.dim();
  const double mz = max_mod(z);
  if (!(mz < 1.0))
    throw std::domain_error("squeeze_bounds_punctured_disk_times_polydisk: z outside the polydisk");
  const double m1 = std::abs(z[0]);
  if (!(m1 > 0.0)) throw std::domain_error("squeeze_bounds_punctured_disk_times_polydisk: z_1 = 0");
  const double lo = m1 / std::sqrt(1.0 + (n - 1) * m1 * m1);
  const double hi = std::min(m1, 1.0 / std::sqrt(static_cast<double>(n)));
  return {lo, hi};
}

double squeeze_punctured_ball_polydisk_model(const CVector& z) {
  if (z.dim() < 2) throw std::invalid_argument("squeeze_punctured_ball_polydisk_model: needs n >= 2");
  const double nz = norm(z);
  if (!(nz > 0.0 && nz < 1.0))
    throw std::domain_error("squeeze_punctured_ball_polydisk_model: z outside the punctured ball");
  return std::min(nz, 1.0 / std::sqrt(static_cast<double>(z.dim())));
}

double squeeze_punctured_disk_1d(cplx z) {
  const double m = std::abs(z);
  if (!(m > 0.0 && m < 1.0))
    throw std::domain_error("squeeze_punctured_disk_1d: z outside the punctured disk");
  return m;
}

double squeeze_annulus_1d(cplx z, double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("squeeze_annulus_1d: bad radius");
  const double m = std::abs(z);
  if (!(m > r && m < 1.0)) throw std::domain_error("squeeze_annulus_1d: z outside the annulus");
  return std::max(m, r / m);
}

double squeeze_punctured_ball(const CVector& z) {
  const double nz = norm(z);
  if (!(nz > 0.0 && nz < 1.0))
    throw std::domain_error("squeeze_punctured_ball: z outside the punctured ball");
  return nz;
}

bool caratheodory_fridman_equal(const ModelDomain& omega, const BoundarySet& s) {
  switch (s.kind) {
    case BoundarySet::Kind::PointSet:
    case BoundarySet::Kind::HyperplaneArrangement:
    case BoundarySet::Kind::VerticalHyperplanes:
      return true;  // analytic deleted sets
    case BoundarySet::Kind::SphereShell:
    case BoundarySet::Kind::SphereShellMinusCap:
      return true;  // strictly pseudoconvex shell pieces
    case BoundarySet::Kind::PolydiskShell:
      // The polydisk shell is Levi flat; only the ball-ambient equality is
      // established, the polydisk-ambient value is the squeezing function
      // alone.
      return omega.kind == ModelDomain::Kind::Ball;
  }
  return false;
}

bool kobayashi_fridman_equal(const BoundarySet& s) {
  // Needs an analytic deleted set of codimension at least two.
  return s.kind == BoundarySet::Kind::PointSet && s.dim >= 2;
}

SqueezeSetResult squeeze_omega_minus_set(const ModelDomain& omega, const BoundarySet& s,
                                         const CVector& z, std::uint64_t budget,
                                         std::uint64_t seed) {
  SqueezeSetResult out;
  out.min = dist_generic(omega, z, s, budget, seed);
  out.caratheodory_fridman_equal = caratheodory_fridman_equal(omega, s);
  out.kobayashi_fridman_equal = kobayashi_fridman_equal(s);
  return out;
}

bool DomainSpec::returns_interval() const {
  return kind == Kind::PuncturedPolydisk || kind == Kind::PuncturedDiskTimesPolydisk;
}

void DomainSpec::validate() const {
  switch (kind) {
    case Kind::AnnulusBall:
    case Kind::PolydiskMinusPolydisk:
    case Kind::PolydiskMinusBall:
      if (dim < 2) throw std::invalid_argument("domain needs dimension >= 2");
      if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("radius must lie in (0,1)");
      break;
    case Kind::BallMinusPolydisk:
      if (dim < 2) throw std::invalid_argument("domain needs dimension >= 2");
      if (!(r > 0.0 && r < 1.0 / std::sqrt(static_cast<double>(dim))))
        throw std::invalid_argument("radius must lie in (0, 1/sqrt(n))");
      break;
    case Kind::PuncturedPolydisk:
    case Kind::PuncturedBallPolydiskModel:
      if (dim < 2) throw std::invalid_argument("domain needs dimension >= 2");
      break;
    case Kind::PuncturedDiskTimesPolydisk:
      if (dim < 1) throw std::invalid_argument("domain needs dimension >= 1");
      break;
    case Kind::PuncturedDisk1D:
      if (dim != 1) throw std::invalid_argument("domain is one-dimensional");
      break;
    case Kind::Annulus1D:
      if (dim != 1) throw std::invalid_argument("domain is one-dimensional");
      if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("radius must lie in (0,1)");
      break;
    case Kind::OmegaMinusSet:
      if (omega.dim != dim || set.dim != dim)
        throw std::invalid_argument("omega-minus-set dimensions disagree");
      break;
  }
}

bool DomainSpec::contains(const CVector& z) const {
  if (z.dim() != dim) return false;
  switch (kind) {
    case Kind::AnnulusBall: {
      const double nz = norm(z);
      return nz > r && nz < 1.0;
    }
    case Kind::PolydiskMinusPolydisk: {
      const double mz = max_mod(z);
      return mz > r && mz < 1.0;
    }
    case Kind::PolydiskMinusBall:
      return max_mod(z) < 1.0 && norm(z) > r;
    case Kind::BallMinusPolydisk:
      return norm(z) < 1.0 && max_mod(z) > r;
    case Kind::PuncturedPolydisk: {
      const double mz = max_mod(z);
      return mz > 0.0 && mz < 1.0;
    }
    case Kind::PuncturedDiskTimesPolydisk:
      return max_mod(z) < 1.0 && std::abs(z[0]) > 0.0;
    case Kind::PuncturedBallPolydiskModel: {
      const double nz = norm(z);
      return nz > 0.0 && nz < 1.0;
    }
    case Kind::PuncturedDisk1D: {
      const double m = std::abs(z[0]);
      return m > 0.0 && m < 1.0;
    }
    case Kind::Annulus1D: {
      const double m = std::abs(z[0]);
      return m > r && m < 1.0;
    }
    case Kind::OmegaMinusSet:
      return squeeze::contains(omega, z, 1.0) && set.membership_residual(z) > 1e-12;
  }
  return false;
}

std::optional<DomainSpec::Kind> DomainSpec::kind_from_name(std::string_view name) {
  if (name == "annulus-ball") return Kind::AnnulusBall;
  if (name == "polydisk-minus-polydisk") return Kind::PolydiskMinusPolydisk;
  if (name == "polydisk-minus-ball") return Kind::PolydiskMinusBall;
  if (name == "ball-minus-polydisk") return Kind::BallMinusPolydisk;
  if (name == "punctured-polydisk") return Kind::PuncturedPolydisk;
  if (name == "punctured-disk-polydisk") return Kind::PuncturedDiskTimesPolydisk;
  if (name == "punctured-ball-polydisk-model") return Kind::PuncturedBallPolydiskModel;
  if (name == "punctured-disk") return Kind::PuncturedDisk1D;
  if (name == "annulus-1d") return Kind::Annulus1D;
  if (name == "omega-minus-set") return Kind::OmegaMinusSet;
  return std::nullopt;
}

std::string_view DomainSpec::kind_name(Kind k) {
  switch (k) {
    case Kind::AnnulusBall: return "annulus-ball";
    case Kind::PolydiskMinusPolydisk: return "polydisk-minus-polydisk";
    case Kind::PolydiskMinusBall: return "polydisk-minus-ball";
    case Kind::BallMinusPolydisk: return "ball-minus-polydisk";
    case Kind::PuncturedPolydisk: return "punctured-polydisk";
    case Kind::PuncturedDiskTimesPolydisk: return "punctured-disk-polydisk";
    case Kind::PuncturedBallPolydiskModel: return "punctured-ball-polydisk-model";
    case Kind::PuncturedDisk1D: return "punctured-disk";
    case Kind::Annulus1D: return "annulus-1d";
    case Kind::OmegaMinusSet: return "omega-minus-set";
  }
  return "unknown";
}

EvalResult eval_domain(const DomainSpec& spec, const CVector& z, std::uint64_t budget,
                       std::uint64_t seed) {
  EvalResult out;
  switch (spec.kind) {
    case DomainSpec::Kind::AnnulusBall:
      out.value = squeeze_annulus_ball(z, spec.r);
      return out;
    case DomainSpec::Kind::PolydiskMinusPolydisk:
      out.value = squeeze_polydisk_minus_polydisk(z, spec.r);
      return out;
    case DomainSpec::Kind::PolydiskMinusBall:
      out.value = squeeze_polydisk_minus_ball(z, spec.r, budget, seed);
      return out;
    case DomainSpec::Kind::BallMinusPolydisk:
      out.value = squeeze_ball_minus_polydisk(z, spec.r, budget, seed);
      return out;
    case DomainSpec::Kind::PuncturedPolydisk:
      out.is_interval = true;
      out.interval = squeeze_bounds_punctured_polydisk(z);
      return out;
    case DomainSpec::Kind::PuncturedDiskTimesPolydisk:
      out.is_interval = true;
      out.interval = squeeze_bounds_punctured_disk_times_polydisk(z);
      return out;
    case DomainSpec::Kind::PuncturedBallPolydiskModel:
      out.value = squeeze_punctured_ball_polydisk_model(z);
      return out;
    case DomainSpec::Kind::PuncturedDisk1D:
      out.value = squeeze_punctured_disk_1d(z[0]);
      return out;
    case DomainSpec::Kind::Annulus1D:
      out.value = squeeze_annulus_1d(z[0], spec.r);
      return out;
    case DomainSpec::Kind::OmegaMinusSet:
      out.value = squeeze_omega_minus_set(spec.omega, spec.set, z, budget, seed).min.value;
      return out;
  }
  throw std::logic_error("eval_domain: unknown kind");
}

}  // namespace squeeze
