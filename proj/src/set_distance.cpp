#include "squeeze/set_distance.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "squeeze/kernels.hpp"
#include "squeeze/sampling.hpp"

namespace squeeze {

namespace {

constexpr double kOnSetTol = 1e-12;
constexpr double kStopTol = 1e-9;
constexpr double kConvergedTol = 1e-6;
constexpr int kRounds = 5;
constexpr double kShrink = 0.1;
constexpr int kMaxSweeps = 40;

double mobius_mod(double s, double t) { return std::abs(s - t) / (1.0 - s * t); }

void check_budget(std::uint64_t budget) {
  if (budget < 1000) throw std::invalid_argument("budget must be >= 1000");
}

struct Descent {
  double value = 0.0;
  std::vector<double> theta;
  std::uint64_t evals = 0;
  bool converged = true;
};

// Derivative-free shrinking-step coordinate search: kRounds rounds, the step
// shrinking by kShrink each round, each round sweeping coordinates until the
// sweep gain drops below kStopTol.
template <class Obj>
Descent coordinate_descent(Obj&& obj, std::vector<double> theta, double value, double step) {
  Descent out;
  out.evals = 0;
  double round_gain = 0.0;
  for (int round = 0; round < kRounds; ++round) {
    const double round_start = value;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      const double sweep_start = value;
      for (std::size_t k = 0; k < theta.size(); ++k) {
        for (const double sign : {1.0, -1.0}) {
          const double saved = theta[k];
          theta[k] = saved + sign * step;
          ++out.evals;
          const auto v = obj(theta);
          if (v && *v < value) {
            value = *v;
          } else {
            theta[k] = saved;
          }
        }
      }
      if (sweep_start - value < kStopTol) break;
    }
    round_gain = round_start - value;
    step *= kShrink;
    if (round > 0 && round_gain < kStopTol) break;
  }
  out.value = value;
  out.theta = std::move(theta);
  out.converged = round_gain <= kConvergedTol;
  return out;
}

CVector aligned_point(const CVector& z, const std::vector<double>& moduli) {
  CVector w(z.dim());
  for (int j = 0; j < z.dim(); ++j) {
    const double phi = std::abs(z[j]) > 0.0 ? std::arg(z[j]) : 0.0;
    w[j] = std::polar(moduli[static_cast<std::size_t>(j)], phi);
  }
  return w;
}

struct PlaneDist {
  double value;
  CVector argmin;
};

// Distance from z to one affine hyperplane inside the ball. The involutive
// automorphism swapping z and 0 carries the plane to another affine plane
// {u : <u, vt> = c}, where the minimum of the norm is |c| / ||vt||.
PlaneDist plane_dist_ball(const CVector& z, const Hyperplane& h) {
  const CVector foot = hyperplane_foot(h);
  if (!(norm(foot) < 1.0)) throw std::domain_error("hyperplane misses the unit ball");
  const double nz2 = norm2(z);
  if (nz2 < 1e-28) return {norm(foot), foot};

  const CVector& v = h.normal;
  const double s = std::sqrt(1.0 - nz2);
  const cplx zv = hermitian_inner(v, z);     // <z, v>
  const cplx pv = hermitian_inner(v, foot);  // <foot, v>
  const cplx beta = (s - 1.0) * zv / nz2 + pv;
  const cplx c = pv - zv;
  CVector vt(z.dim());
  for (int j = 0; j < z.dim(); ++j) vt[j] = std::conj(beta) * z[j] - s * v[j];
  const double nvt2 = norm2(vt);
  if (!(nvt2 > 0.0)) throw std::logic_error("degenerate hyperplane image");
  const double value = std::abs(c) / std::sqrt(nvt2);
  const CVector u = (c / nvt2) * vt;
  return {value, ball_involution(z, u)};
}

MinimizerResult seeded_refine(const ModelDomain& d, const CVector& z, const BoundarySet& s,
                              std::uint64_t budget, std::uint64_t seed);

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed-form";
    case Method::GridRefine: return "grid-refine";
    case Method::Sampling: return "sampling";
  }
  return "unknown";
}

double dist_sphere_in_ball(const CVector& z, double r) {
  const double nz = norm(z);
  if (!(nz < 1.0)) throw std::domain_error("dist_sphere_in_ball: z outside the open ball");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("dist_sphere_in_ball: bad radius");
  return std::abs(nz - r) / (1.0 - r * nz);
}

double dist_polydisk_shell_in_polydisk(const CVector& z, double r, std::uint64_t budget,
                                       std::uint64_t seed) {
  const double mz = max_mod(z);
  if (!(mz < 1.0))
    throw std::domain_error("dist_polydisk_shell_in_polydisk: z outside the open polydisk");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("dist_polydisk_shell_in_polydisk: bad radius");
  if (mz >= r) {
    double best = 0.0;
    for (int i = 0; i < z.dim(); ++i) {
      const double m = std::abs(z[i]);
      best = std::max(best, (std::max(m, r) - r) / (1.0 - r * m));
    }
    return best;
  }
  return seeded_refine(ModelDomain::polydisk(z.dim()), z,
                       BoundarySet::polydisk_shell(z.dim(), r), budget, seed)
      .value;
}

MinimizerResult dist_sphere_in_polydisk(const CVector& z, double r, std::uint64_t budget,
                                        std::uint64_t seed) {
  if (!(max_mod(z) < 1.0))
    throw std::domain_error("dist_sphere_in_polydisk: z outside the open polydisk");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("dist_sphere_in_polydisk: bad radius");
  check_budget(budget);

  const int n = z.dim();
  std::vector<double> zm(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) zm[static_cast<std::size_t>(j)] = std::abs(z[j]);

  auto value_at = [&](const std::vector<double>& m) {
    double best = 0.0;
    for (int j = 0; j < n; ++j)
      best = std::max(best, mobius_mod(zm[static_cast<std::size_t>(j)], m[static_cast<std::size_t>(j)]));
    return best;
  };

  rng::KroneckerSeq seq(n, seed);
  std::vector<double> proto(static_cast<std::size_t>(n));
  const auto best = kernels::min_over(budget, proto,
                                      [&](std::uint64_t i, std::vector<double>& m) -> std::optional<double> {
                                        orthant_sphere_moduli(seq, i, r, m);
                                        return value_at(m);
                                      });

  std::vector<double> m0(static_cast<std::size_t>(n));
  orthant_sphere_moduli(seq, best.index, r, m0);

  // Chart: fold the real offsets back onto the orthant sphere of radius r.
  std::vector<double> scratch(static_cast<std::size_t>(n));
  auto obj = [&](const std::vector<double>& theta) -> std::optional<double> {
    double nn = 0.0;
    for (int j = 0; j < n; ++j) {
      const auto k = static_cast<std::size_t>(j);
      scratch[k] = std::abs(m0[k] + theta[k]);
      nn += scratch[k] * scratch[k];
    }
    if (!(nn > 0.0)) return std::nullopt;
    const double sc = r / std::sqrt(nn);
    for (auto& x : scratch) x *= sc;
    return value_at(scratch);
  };

  auto ref = coordinate_descent(obj, std::vector<double>(static_cast<std::size_t>(n), 0.0),
                                best.value, 0.25 * r);
  double nn = 0.0;
  for (int j = 0; j < n; ++j) {
    const auto k = static_cast<std::size_t>(j);
    m0[k] = std::abs(m0[k] + ref.theta[k]);
    nn += m0[k] * m0[k];
  }
  const double sc = r / std::sqrt(nn);
  for (auto& x : m0) x *= sc;

  MinimizerResult out;
  out.value = ref.value;
  out.argmin = aligned_point(z, m0);
  out.method = Method::GridRefine;
  out.samples = budget + ref.evals;
  out.converged = ref.converged;
  return out;
}

MinimizerResult dist_polydisk_shell_in_ball(const CVector& z, double r, std::uint64_t budget,
                                            std::uint64_t seed) {
  const int n = z.dim();
  const double nz2 = norm2(z);
  if (!(nz2 < 1.0)) throw std::domain_error("dist_polydisk_shell_in_ball: z outside the open ball");
  if (!(r > 0.0 && r < 1.0 / std::sqrt(static_cast<double>(n))))
    throw std::invalid_argument("dist_polydisk_shell_in_ball: need 0 < r < 1/sqrt(n)");
  check_budget(budget);

  std::vector<double> zm(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) zm[static_cast<std::size_t>(j)] = std::abs(z[j]);

  // Objective with the optimal phase alignment folded in: |1 - <w,z>| becomes
  // 1 - sum m_i |z_i|.
  auto value_at = [&](const std::vector<double>& m) {
    double nw2 = 0.0, ip = 0.0;
    for (int j = 0; j < n; ++j) {
      const auto k = static_cast<std::size_t>(j);
      nw2 += m[k] * m[k];
      ip += m[k] * zm[k];
    }
    const double den = (1.0 - ip) * (1.0 - ip);
    const double bracket = std::clamp(1.0 - (1.0 - nw2) * (1.0 - nz2) / den, 0.0, 1.0);
    return std::sqrt(bracket);
  };

  // Seeds stratified over the n faces {m_face = r}.
  rng::KroneckerSeq seq(std::max(1, n - 1), seed);
  std::vector<double> proto(static_cast<std::size_t>(n));
  const auto best = kernels::min_over(budget, proto,
                                      [&](std::uint64_t i, std::vector<double>& m) -> std::optional<double> {
                                        const int face = static_cast<int>(i % static_cast<std::uint64_t>(n));
                                        int stream = 0;
                                        for (int j = 0; j < n; ++j) {
                                          const auto k = static_cast<std::size_t>(j);
                                          m[k] = j == face ? r : r * seq.coord(i, stream++);
                                        }
                                        return value_at(m);
                                      });

  const int face = static_cast<int>(best.index % static_cast<std::uint64_t>(n));
  std::vector<double> m0(static_cast<std::size_t>(n));
  {
    int stream = 0;
    for (int j = 0; j < n; ++j) {
      const auto k = static_cast<std::size_t>(j);
      m0[k] = j == face ? r : r * seq.coord(best.index, stream++);
    }
  }

  std::vector<double> scratch(static_cast<std::size_t>(n));
  auto obj = [&](const std::vector<double>& theta) -> std::optional<double> {
    int t = 0;
    for (int j = 0; j < n; ++j) {
      const auto k = static_cast<std::size_t>(j);
      scratch[k] = j == face ? r : std::clamp(m0[k] + theta[static_cast<std::size_t>(t++)], 0.0, r);
    }
    return value_at(scratch);
  };

  auto ref = coordinate_descent(obj, std::vector<double>(static_cast<std::size_t>(std::max(0, n - 1)), 0.0),
                                best.value, 0.25 * r);
  {
    int t = 0;
    for (int j = 0; j < n; ++j) {
      const auto k = static_cast<std::size_t>(j);
      m0[k] = j == face ? r : std::clamp(m0[k] + ref.theta[static_cast<std::size_t>(t++)], 0.0, r);
    }
  }

  MinimizerResult out;
  out.value = ref.value;
  out.argmin = aligned_point(z, m0);
  out.method = Method::GridRefine;
  out.samples = budget + ref.evals;
  out.converged = ref.converged;
  return out;
}

MinimizerResult dist_hyperplanes_in_ball(const CVector& z, const std::vector<Hyperplane>& planes) {
  if (planes.empty()) throw std::invalid_argument("dist_hyperplanes_in_ball: empty arrangement");
  if (!(norm2(z) < 1.0)) throw std::domain_error("dist_hyperplanes_in_ball: z outside the open ball");
  MinimizerResult out;
  bool first = true;
  for (const auto& h : planes) {
    const PlaneDist pd = plane_dist_ball(z, h);
    if (first || pd.value < out.value) {
      out.value = pd.value;
      out.argmin = pd.argmin;
      first = false;
    }
  }
  out.method = Method::ClosedForm;
  out.samples = planes.size();
  out.converged = true;
  return out;
}

namespace {

// Grid seeding over the set's own sampler followed by a chart-based local
// descent. Handles the kinds with no closed form: the cap-deleted sphere
// shell in either domain, the polydisk shell from inside the polydisk, and
// hyperplane arrangements inside the polydisk.
MinimizerResult seeded_refine(const ModelDomain& d, const CVector& z, const BoundarySet& s,
                              std::uint64_t budget, std::uint64_t seed) {
  check_budget(budget);
  SetSampler sampler(s, seed);
  const std::uint64_t count = sampler.effective_count(budget);
  CVector proto(s.dim);

  const auto best = kernels::min_over(count, proto,
                                      [&](std::uint64_t i, CVector& w) -> std::optional<double> {
                                        if (!sampler.point(i, w)) return std::nullopt;
                                        if (!contains(d, w, 1.0)) return std::nullopt;
                                        return tanh_c(d, z, w);
                                      });
  if (!best.valid())
    throw std::runtime_error("dist_generic: no feasible point of the set inside the domain");

  CVector w0(s.dim);
  sampler.point(best.index, w0);
  const int n = s.dim;

  MinimizerResult out;
  out.method = Method::GridRefine;

  switch (s.kind) {
    case BoundarySet::Kind::SphereShell:
    case BoundarySet::Kind::SphereShellMinusCap: {
      const double r = s.radius;
      CVector w(n);
      auto decode = [&](const std::vector<double>& theta) -> bool {
        double nn = 0.0;
        for (int j = 0; j < n; ++j) {
          const auto k = static_cast<std::size_t>(j);
          w[j] = w0[j] / r + cplx(theta[2 * k], theta[2 * k + 1]);
          nn += std::norm(w[j]);
        }
        if (!(nn > 1e-18)) return false;
        const double sc = r / std::sqrt(nn);
        for (int j = 0; j < n; ++j) w[j] *= sc;
        return true;
      };
      auto obj = [&](const std::vector<double>& theta) -> std::optional<double> {
        if (!decode(theta)) return std::nullopt;
        if (s.kind == BoundarySet::Kind::SphereShellMinusCap &&
            dist_euclid(w, s.cap_center) < s.cap_radius)
          return std::nullopt;
        if (!contains(d, w, 1.0)) return std::nullopt;
        return tanh_c(d, z, w);
      };
      auto ref = coordinate_descent(obj, std::vector<double>(static_cast<std::size_t>(2 * n), 0.0),
                                    best.value, 0.25);
      decode(ref.theta);
      out.value = ref.value;
      out.argmin = w;
      out.samples = count + ref.evals;
      out.converged = ref.converged;
      return out;
    }

    case BoundarySet::Kind::PolydiskShell: {
      const double r = s.radius;
      int face = 0;
      for (int j = 1; j < n; ++j)
        if (std::abs(w0[j]) > std::abs(w0[face])) face = j;
      const double phi0 = std::arg(w0[face]);
      CVector w(n);
      auto decode = [&](const std::vector<double>& theta) {
        int t = 0;
        for (int j = 0; j < n; ++j) {
          if (j == face) {
            w[j] = std::polar(r, phi0 + theta[0]);
          } else {
            w[j] = w0[j] + cplx(theta[static_cast<std::size_t>(1 + 2 * t)],
                                theta[static_cast<std::size_t>(2 + 2 * t)]);
            const double m = std::abs(w[j]);
            if (m > r) w[j] *= r / m;
            ++t;
          }
        }
      };
      auto obj = [&](const std::vector<double>& theta) -> std::optional<double> {
        decode(theta);
        if (!contains(d, w, 1.0)) return std::nullopt;
        return tanh_c(d, z, w);
      };
      auto ref = coordinate_descent(obj,
                                    std::vector<double>(static_cast<std::size_t>(2 * n - 1), 0.0),
                                    best.value, 0.25 * r);
      decode(ref.theta);
      out.value = ref.value;
      out.argmin = w;
      out.samples = count + ref.evals;
      out.converged = ref.converged;
      return out;
    }

    case BoundarySet::Kind::HyperplaneArrangement: {
      // Refine within the plane the best seed landed on.
      const auto& h = s.planes[best.index % s.planes.size()];
      const CVector base = hyperplane_foot(h);
      const auto basis = orthogonal_complement_basis(h.normal);
      const int k = n - 1;
      // Seed parameters of w0 in the chart: t_j = <w0 - base, b_j>.
      std::vector<double> theta0(static_cast<std::size_t>(2 * k), 0.0);
      const CVector off = w0 - base;
      for (int j = 0; j < k; ++j) {
        const cplx t = hermitian_inner(basis[static_cast<std::size_t>(j)], off);
        theta0[static_cast<std::size_t>(2 * j)] = t.real();
        theta0[static_cast<std::size_t>(2 * j + 1)] = t.imag();
      }
      CVector w(n);
      auto decode = [&](const std::vector<double>& theta) {
        w = base;
        for (int j = 0; j < k; ++j) {
          const cplx t(theta[static_cast<std::size_t>(2 * j)],
                       theta[static_cast<std::size_t>(2 * j + 1)]);
          w = w + t * basis[static_cast<std::size_t>(j)];
        }
      };
      auto obj = [&](const std::vector<double>& theta) -> std::optional<double> {
        decode(theta);
        if (!contains(d, w, 1.0)) return std::nullopt;
        return tanh_c(d, z, w);
      };
      auto ref = coordinate_descent(obj, theta0, best.value, 0.25);
      decode(ref.theta);
      out.value = ref.value;
      out.argmin = w;
      out.samples = count + ref.evals;
      out.converged = ref.converged;
      return out;
    }

    default:
      throw std::logic_error("seeded_refine: kind handled elsewhere");
  }
}

}  // namespace

MinimizerResult dist_generic(const ModelDomain& d, const CVector& z, const BoundarySet& s,
                             std::uint64_t budget, std::uint64_t seed) {
  if (d.dim != s.dim || d.dim != z.dim())
    throw std::invalid_argument("dist_generic: dimension mismatch");
  if (!contains(d, z, 1.0)) throw std::domain_error("dist_generic: z outside the domain");

  if (s.membership_residual(z) <= kOnSetTol) {
    MinimizerResult out;
    out.value = 0.0;
    out.argmin = z;
    out.method = Method::ClosedForm;
    return out;
  }

  const bool ball = d.kind == ModelDomain::Kind::Ball;
  switch (s.kind) {
    case BoundarySet::Kind::SphereShell: {
      if (ball) {
        MinimizerResult out;
        out.value = dist_sphere_in_ball(z, s.radius);
        const double nz = norm(z);
        out.argmin = nz > 0.0 ? (cplx(s.radius / nz, 0.0) * z)
                              : (cplx(s.radius, 0.0) * unit_axis(d.dim, 0));
        out.method = Method::ClosedForm;
        return out;
      }
      return dist_sphere_in_polydisk(z, s.radius, budget, seed);
    }

    case BoundarySet::Kind::PolydiskShell: {
      if (ball) return dist_polydisk_shell_in_ball(z, s.radius, budget, seed);
      if (max_mod(z) >= s.radius) {
        // Closed form; the minimizer keeps inner coordinates and pulls the
        // outer ones radially onto the shell.
        MinimizerResult out;
        out.value = dist_polydisk_shell_in_polydisk(z, s.radius, budget, seed);
        CVector w(z);
        for (int j = 0; j < z.dim(); ++j) {
          const double m = std::abs(z[j]);
          if (m > s.radius) w[j] *= s.radius / m;
        }
        out.argmin = w;
        out.method = Method::ClosedForm;
        return out;
      }
      return seeded_refine(d, z, s, budget, seed);
    }

    case BoundarySet::Kind::SphereShellMinusCap:
      return seeded_refine(d, z, s, budget, seed);

    case BoundarySet::Kind::HyperplaneArrangement:
      if (ball) return dist_hyperplanes_in_ball(z, s.planes);
      return seeded_refine(d, z, s, budget, seed);

    case BoundarySet::Kind::VerticalHyperplanes: {
      if (ball) {
        std::vector<Hyperplane> planes;
        planes.reserve(s.vertical.size());
        for (const auto& p : s.vertical) {
          Hyperplane h{CVector(d.dim), unit_axis(d.dim, 0)};
          h.base[0] = p;
          planes.push_back(std::move(h));
        }
        return dist_hyperplanes_in_ball(z, planes);
      }
      MinimizerResult out;
      bool first = true;
      for (const auto& p : s.vertical) {
        const double v = mobius_dist(p, z[0]);
        if (first || v < out.value) {
          CVector w(z);
          w[0] = p;
          out.value = v;
          out.argmin = std::move(w);
          first = false;
        }
      }
      out.method = Method::ClosedForm;
      out.samples = s.vertical.size();
      return out;
    }

    case BoundarySet::Kind::PointSet: {
      MinimizerResult out;
      bool first = true;
      for (const auto& q : s.points) {
        const double v = tanh_c(d, z, q);
        if (first || v < out.value) {
          out.value = v;
          out.argmin = q;
          first = false;
        }
      }
      out.method = Method::ClosedForm;
      out.samples = s.points.size();
      return out;
    }
  }
  throw std::logic_error("dist_generic: unknown set kind");
}

double grid_min_oracle(const ModelDomain& d, const CVector& z, const BoundarySet& s,
                       std::uint64_t samples, std::uint64_t seed) {
  if (d.dim != s.dim || d.dim != z.dim())
    throw std::invalid_argument("grid_min_oracle: dimension mismatch");
  if (samples < 1000) throw std::invalid_argument("grid_min_oracle: samples must be >= 1000");
  if (!contains(d, z, 1.0)) throw std::domain_error("grid_min_oracle: z outside the domain");

  SetSampler sampler(s, seed);
  const std::uint64_t count = sampler.effective_count(samples);
  CVector proto(s.dim);
  const auto best = kernels::min_over(count, proto,
                                      [&](std::uint64_t i, CVector& w) -> std::optional<double> {
                                        if (!sampler.point(i, w)) return std::nullopt;
                                        if (!contains(d, w, 1.0)) return std::nullopt;
                                        return tanh_c(d, z, w);
                                      });
  if (!best.valid()) throw std::runtime_error("grid_min_oracle: no feasible sample");
  return best.value;
}

}  // namespace squeeze
