#include "squeeze/constructions.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "squeeze/kernels.hpp"
#include "squeeze/sampling.hpp"

namespace squeeze {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFeasibilityMargin = 1e-4;
constexpr std::uint64_t kDeltaSeed = 0x64656c7461ULL;
constexpr std::uint64_t kCoverSeed = 0x636f766572ULL;

void check_rR(double r, double R) {
  if (!(r > 0.0 && r < R && R < 1.0))
    throw std::invalid_argument("construction needs 0 < r < R < 1");
}

// Probes of the boundary sphere of B(center, delta); tanh_c(p, .) composed
// with a holomorphic map is plurisubharmonic, so its sup over the closed
// ball is attained there.
double sampled_sup_tanh_c(const ModelDomain& d, const CVector& p, const CVector& center,
                          double delta, std::uint64_t probes, std::uint64_t seed) {
  rng::KroneckerSeq seq(std::max(1, 2 * d.dim - 1), seed);
  CVector proto(d.dim);
  const auto worst = kernels::max_over(probes, proto,
                                       [&](std::uint64_t i, CVector& w) -> std::optional<double> {
                                         sphere_point(seq, i, delta, w);
                                         w = center + w;
                                         if (!contains(d, w, 1.0)) return std::nullopt;
                                         return tanh_c(d, p, w);
                                       });
  if (!worst.valid()) throw std::runtime_error("delta probe ball misses the domain");
  return worst.value;
}

std::vector<CVector> shell_cover_points(int n, double r, int count) {
  rng::KroneckerSeq seq(std::max(1, 2 * n - 1), kCoverSeed);
  std::vector<CVector> pts(static_cast<std::size_t>(count), CVector(n));
  for (int i = 0; i < count; ++i) sphere_point(seq, static_cast<std::uint64_t>(i), r, pts[static_cast<std::size_t>(i)]);
  return pts;
}

double nearest_distance(const CVector& w, const std::vector<CVector>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) best = std::min(best, dist_euclid(w, p));
  return best;
}

// Largest over sampled shell points of the distance to the nearest z_i.
double sampled_cover_gap(const std::vector<CVector>& centers, int n, double r,
                         std::uint64_t samples, std::uint64_t seed) {
  rng::KroneckerSeq seq(std::max(1, 2 * n - 1), seed);
  CVector proto(n);
  const auto worst = kernels::max_over(samples, proto,
                                       [&](std::uint64_t i, CVector& w) -> std::optional<double> {
                                         sphere_point(seq, i, r, w);
                                         return nearest_distance(w, centers);
                                       });
  return worst.value;
}

nlohmann::ordered_json cplx_json(const cplx& c) { return {c.real(), c.imag()}; }

nlohmann::ordered_json cvector_json(const CVector& z) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : z.coords) arr.push_back(cplx_json(c));
  return arr;
}

cplx cplx_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

CVector cvector_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("expected coordinate array");
  CVector z(static_cast<int>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) z[static_cast<int>(i)] = cplx_from_json(j[i]);
  return z;
}

}  // namespace

const char* Config::kind_name(Kind k) {
  switch (k) {
    case Kind::DiskPoints: return "disk-points";
    case Kind::BallHyperplanes: return "ball-hyperplanes";
    case Kind::PolydiskVerticalPlanes: return "polydisk-vertical-planes";
  }
  return "unknown";
}

ModelDomain Config::omega() const {
  switch (kind) {
    case Kind::DiskPoints: return ModelDomain::polydisk(1);
    case Kind::BallHyperplanes: return ModelDomain::ball(dim);
    case Kind::PolydiskVerticalPlanes: return ModelDomain::polydisk(dim);
  }
  throw std::logic_error("Config: unknown kind");
}

void Config::validate() const {
  check_rR(r, R);
  if (m <= 0 || static_cast<int>(sample_points.size()) != m ||
      static_cast<int>(pushed_points.size()) != m)
    throw std::invalid_argument("Config: point counts disagree with m");
  if (!(delta > 0.0) || r + delta >= 1.0)
    throw std::invalid_argument("Config: delta must be positive with r + delta < 1");
  const double push = R / r;
  for (int i = 0; i < m; ++i) {
    const CVector& z = sample_points[static_cast<std::size_t>(i)];
    const CVector& p = pushed_points[static_cast<std::size_t>(i)];
    const double on_shell = kind == Kind::BallHyperplanes
                                ? std::abs(norm(z) - r)
                                : std::abs(std::abs(z[0]) - r);
    if (on_shell > 1e-12) throw std::invalid_argument("Config: sample point off the shell");
    for (int j = 0; j < dim; ++j)
      if (p[j] != push * z[j]) throw std::invalid_argument("Config: pushed point is not (R/r) z");
  }
}

bool delta_feasible(double r, double R, int n, double delta, std::uint64_t probes) {
  check_rR(r, R);
  if (n < 1) throw std::invalid_argument("delta_feasible: dimension must be >= 1");
  if (!(delta > 0.0) || r + delta >= 1.0) return false;
  // Unitary invariance lets us fix z = (r, 0, ..., 0), p = (R, 0, ..., 0).
  CVector z(n), p(n);
  z[0] = r;
  p[0] = R;
  const double sup =
      sampled_sup_tanh_c(ModelDomain::ball(n), p, z, delta, probes, kDeltaSeed);
  return sup < R - kFeasibilityMargin;
}

double feasible_delta(double r, double R, int n, std::uint64_t probes) {
  check_rR(r, R);
  // The bisection brackets the sampled-feasibility boundary; the returned
  // delta sits 5% inside it, since the sampled sup can sit below the true sup
  // by more than the bisection margin right at the boundary.
  constexpr double kPullback = 0.95;
  double hi = 1.0 - r - 1e-9;
  if (delta_feasible(r, R, n, hi, probes)) return kPullback * hi;
  double lo = std::min(0.5 * (1.0 - r), 1e-3);
  while (!delta_feasible(r, R, n, lo, probes)) {
    lo *= 0.25;
    if (lo < 1e-12) throw std::runtime_error("feasible_delta: no feasible delta found");
  }
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (delta_feasible(r, R, n, mid, probes))
      lo = mid;
    else
      hi = mid;
  }
  return kPullback * lo;
}

Config example_disk_config(double r, double R) {
  check_rR(r, R);
  const double bound = (r - r * R * R) / (1.0 + R * R);
  int m = 0;
  double delta = 0.0;
  for (int cand = 2; cand < 10000000; ++cand) {
    delta = r * std::sqrt(2.0 - 2.0 * std::cos(kTwoPi / cand));
    if (delta < bound && r + delta < 1.0) {
      m = cand;
      break;
    }
  }
  if (m == 0) throw std::runtime_error("example_disk_config: no admissible m");

  Config cfg;
  cfg.kind = Config::Kind::DiskPoints;
  cfg.dim = 1;
  cfg.r = r;
  cfg.R = R;
  cfg.delta = delta;
  cfg.m = m;
  const double push = R / r;
  std::vector<CVector> deleted;
  for (int j = 0; j < m; ++j) {
    CVector z(1), p(1);
    z[0] = std::polar(r, kTwoPi * j / m);
    p[0] = push * z[0];
    cfg.sample_points.push_back(z);
    cfg.pushed_points.push_back(p);
    deleted.push_back(p);
  }
  cfg.deleted_set = BoundarySet::point_set(1, std::move(deleted));
  return cfg;
}

Config build_ball_config(double r, double R, int n, std::uint64_t budget) {
  check_rR(r, R);
  if (n < 2) throw std::invalid_argument("build_ball_config: needs n >= 2");
  if (n > 3)
    throw std::invalid_argument(
        "build_ball_config: shell coverings above n = 3 exceed the supported budget");

  const double delta = feasible_delta(r, R, n, std::max<std::uint64_t>(budget, 4096));
  const std::uint64_t gap_samples = std::max<std::uint64_t>(budget, 4096);

  int count = 16;
  std::vector<CVector> centers;
  double gap = 0.0;
  for (;;) {
    centers = shell_cover_points(n, r, count);
    gap = sampled_cover_gap(centers, n, r, gap_samples, kCoverSeed + 1);
    if (gap < 0.9 * delta) break;
    if (count > 200000) {
      std::ostringstream msg;
      msg << "build_ball_config: covering not verified at m=" << count
          << ", sampled gap " << gap << " vs delta " << delta;
      throw std::runtime_error(msg.str());
    }
    count += count / 2 + 1;
  }

  Config cfg;
  cfg.kind = Config::Kind::BallHyperplanes;
  cfg.dim = n;
  cfg.r = r;
  cfg.R = R;
  cfg.delta = delta;
  cfg.m = count;
  const double push = R / r;
  std::vector<Hyperplane> planes;
  for (const auto& z : centers) {
    const CVector p = cplx(push, 0.0) * z;
    cfg.sample_points.push_back(z);
    cfg.pushed_points.push_back(p);
    planes.push_back(Hyperplane{p, z - p});
  }
  cfg.deleted_set = BoundarySet::hyperplane_arrangement(n, std::move(planes));
  return cfg;
}

Config build_polydisk_config(double r, double R, int n) {
  check_rR(r, R);
  if (n < 2) throw std::invalid_argument("build_polydisk_config: needs n >= 2");
  const Config disk = example_disk_config(r, R);

  Config cfg;
  cfg.kind = Config::Kind::PolydiskVerticalPlanes;
  cfg.dim = n;
  cfg.r = r;
  cfg.R = R;
  cfg.delta = disk.delta;
  cfg.m = disk.m;
  std::vector<cplx> verticals;
  for (int j = 0; j < disk.m; ++j) {
    CVector z(n), p(n);
    z[0] = disk.sample_points[static_cast<std::size_t>(j)][0];
    p[0] = disk.pushed_points[static_cast<std::size_t>(j)][0];
    cfg.sample_points.push_back(z);
    cfg.pushed_points.push_back(p);
    verticals.push_back(p[0]);
  }
  cfg.deleted_set = BoundarySet::vertical_hyperplanes(n, std::move(verticals));
  return cfg;
}

VerificationReport verify_config(const Config& cfg, std::uint64_t samples, std::uint64_t seed) {
  VerificationReport rep;
  rep.samples = samples;
  rep.seed = seed;
  const ModelDomain omega = cfg.omega();
  const bool slice = cfg.kind != Config::Kind::BallHyperplanes;
  const int n = cfg.dim;

  // (1) covering: sampled shell (or slice circle) points all within delta of
  // some z_i.
  try {
    rng::KroneckerSeq seq(slice ? 1 : 2 * n - 1, seed);
    CVector proto(n);
    const auto worst =
        kernels::max_over(samples, proto, [&](std::uint64_t i, CVector& w) -> std::optional<double> {
          if (slice) {
            for (int j = 1; j < n; ++j) w[j] = 0.0;
            w[0] = std::polar(cfg.r, kTwoPi * seq.coord(i, 0));
          } else {
            sphere_point(seq, i, cfg.r, w);
          }
          return nearest_distance(w, cfg.sample_points);
        });
    rep.worst_gap = worst.value;
    rep.covering_ok = worst.valid() && worst.value < cfg.delta;
  } catch (const std::exception&) {
    rep.covering_ok = false;
  }

  // (2) feasibility: sampled sup of tanh_c(p_i, .) over each delta-ball
  // stays below R.
  try {
    const std::uint64_t probes =
        std::max<std::uint64_t>(1000, samples / static_cast<std::uint64_t>(std::max(cfg.m, 1)));
    double worst = 0.0;
    for (int i = 0; i < cfg.m; ++i) {
      const double sup = sampled_sup_tanh_c(omega, cfg.pushed_points[static_cast<std::size_t>(i)],
                                            cfg.sample_points[static_cast<std::size_t>(i)],
                                            cfg.delta, probes, seed + 1 + static_cast<std::uint64_t>(i));
      worst = std::max(worst, sup);
    }
    rep.worst_feasibility = worst;
    rep.feasibility_ok = worst < cfg.R;
  } catch (const std::exception&) {
    rep.feasibility_ok = false;
  }

  // (3) the distance from the origin to the deleted set equals R.
  try {
    CVector origin(n);
    rep.center_value = dist_generic(omega, origin, cfg.deleted_set, kDefaultBudget, seed).value;
    rep.center_ok = std::abs(rep.center_value - cfg.R) <= 1e-9;
  } catch (const std::exception&) {
    rep.center_ok = false;
  }

  // (4) sampled shell (or slice) values of the distance all below R.
  try {
    rng::KroneckerSeq seq(slice ? 1 : 2 * n - 1, seed + 101);
    CVector proto(n);
    const auto worst =
        kernels::max_over(samples, proto, [&](std::uint64_t i, CVector& w) -> std::optional<double> {
          if (slice) {
            for (int j = 1; j < n; ++j) w[j] = 0.0;
            w[0] = std::polar(cfg.r, kTwoPi * seq.coord(i, 0));
          } else {
            sphere_point(seq, i, cfg.r, w);
          }
          return dist_generic(omega, w, cfg.deleted_set, 1000, seed).value;
        });
    rep.boundary_max = worst.value;
    rep.boundary_ok = worst.valid() && worst.value < cfg.R;
  } catch (const std::exception&) {
    rep.boundary_ok = false;
  }

  return rep;
}

Field distance_field(const Config& cfg, std::uint64_t budget, std::uint64_t seed) {
  Field f = set_distance_field(cfg.omega(), cfg.deleted_set, budget, seed);
  f.label = Config::kind_name(cfg.kind);
  return f;
}

nlohmann::ordered_json config_to_json(const Config& cfg) {
  nlohmann::ordered_json j;
  j["kind"] = Config::kind_name(cfg.kind);
  j["dim"] = cfg.dim;
  j["r"] = cfg.r;
  j["R"] = cfg.R;
  j["m"] = cfg.m;
  j["delta"] = cfg.delta;
  auto zs = nlohmann::ordered_json::array();
  for (const auto& z : cfg.sample_points) zs.push_back(cvector_json(z));
  j["samplePoints"] = zs;
  auto ps = nlohmann::ordered_json::array();
  for (const auto& p : cfg.pushed_points) ps.push_back(cvector_json(p));
  j["pushedPoints"] = ps;
  switch (cfg.kind) {
    case Config::Kind::DiskPoints:
      j["planes"] = nullptr;
      break;
    case Config::Kind::BallHyperplanes: {
      nlohmann::ordered_json planes;
      planes["type"] = "hyperplanes";
      auto items = nlohmann::ordered_json::array();
      for (const auto& h : cfg.deleted_set.planes) {
        nlohmann::ordered_json item;
        item["base"] = cvector_json(h.base);
        item["normal"] = cvector_json(h.normal);
        items.push_back(item);
      }
      planes["items"] = items;
      j["planes"] = planes;
      break;
    }
    case Config::Kind::PolydiskVerticalPlanes: {
      nlohmann::ordered_json planes;
      planes["type"] = "vertical";
      auto items = nlohmann::ordered_json::array();
      for (const auto& p : cfg.deleted_set.vertical) items.push_back(cplx_json(p));
      planes["items"] = items;
      j["planes"] = planes;
      break;
    }
  }
  return j;
}

Config config_from_json(const nlohmann::json& j) {
  Config cfg;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "disk-points")
    cfg.kind = Config::Kind::DiskPoints;
  else if (kind == "ball-hyperplanes")
    cfg.kind = Config::Kind::BallHyperplanes;
  else if (kind == "polydisk-vertical-planes")
    cfg.kind = Config::Kind::PolydiskVerticalPlanes;
  else
    throw std::invalid_argument("config: unknown kind " + kind);

  cfg.dim = j.at("dim").get<int>();
  cfg.r = j.at("r").get<double>();
  cfg.R = j.at("R").get<double>();
  cfg.m = j.at("m").get<int>();
  cfg.delta = j.at("delta").get<double>();
  for (const auto& jz : j.at("samplePoints")) cfg.sample_points.push_back(cvector_from_json(jz));
  for (const auto& jp : j.at("pushedPoints")) cfg.pushed_points.push_back(cvector_from_json(jp));

  switch (cfg.kind) {
    case Config::Kind::DiskPoints: {
      std::vector<CVector> pts = cfg.pushed_points;
      cfg.deleted_set = BoundarySet::point_set(cfg.dim, std::move(pts));
      break;
    }
    case Config::Kind::BallHyperplanes: {
      std::vector<Hyperplane> planes;
      for (const auto& item : j.at("planes").at("items"))
        planes.push_back(Hyperplane{cvector_from_json(item.at("base")),
                                    cvector_from_json(item.at("normal"))});
      cfg.deleted_set = BoundarySet::hyperplane_arrangement(cfg.dim, std::move(planes));
      break;
    }
    case Config::Kind::PolydiskVerticalPlanes: {
      std::vector<cplx> verticals;
      for (const auto& item : j.at("planes").at("items")) verticals.push_back(cplx_from_json(item));
      cfg.deleted_set = BoundarySet::vertical_hyperplanes(cfg.dim, std::move(verticals));
      break;
    }
  }
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  nlohmann::json j;
  in >> j;
  return config_from_json(j);
}

void save_config(const Config& cfg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write config file " + path);
  out << config_to_json(cfg).dump(2) << '\n';
}

nlohmann::ordered_json report_to_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["coveringOK"] = rep.covering_ok;
  j["worstGap"] = rep.worst_gap;
  j["feasibilityOK"] = rep.feasibility_ok;
  j["worstFeasibility"] = rep.worst_feasibility;
  j["centerValue"] = rep.center_value;
  j["centerOK"] = rep.center_ok;
  j["boundaryMax"] = rep.boundary_max;
  j["boundaryOK"] = rep.boundary_ok;
  j["samples"] = rep.samples;
  j["seed"] = rep.seed;
  j["allOK"] = rep.all_ok();
  return j;
}

}  // namespace squeeze
