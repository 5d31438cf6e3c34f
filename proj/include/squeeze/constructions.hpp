#pragma once

#include <string>

#include "squeeze/psh.hpp"

#include <json.hpp>

namespace squeeze {

// A generated counterexample configuration: points z_i on the radius-r shell
// (or its first-coordinate slice), their pushed copies p_i = (R/r) z_i, the
// covering radius delta, and the deleted set they induce (points for the
// disk, affine hyperplanes for the ball, vertical planes for the polydisk).
struct Config {
  enum class Kind { DiskPoints, BallHyperplanes, PolydiskVerticalPlanes };

  Kind kind = Kind::DiskPoints;
  int dim = 1;
  double r = 0.0;
  double R = 0.0;
  double delta = 0.0;
  int m = 0;
  std::vector<CVector> sample_points;  // z_i
  std::vector<CVector> pushed_points;  // p_i
  BoundarySet deleted_set;

  ModelDomain omega() const;
  void validate() const;

  static const char* kind_name(Kind k);
};

// True when every w in the ball B(z, delta) around a shell point keeps
// tanh_c(p, w) below R (probed on the boundary sphere, where the maximum
// sits) and the ball stays inside the domain.
bool delta_feasible(double r, double R, int n, double delta, std::uint64_t probes = 4096);

// Largest sampled-feasible delta, found by bisection. Always positive since
// tanh_c(p, z) = (R - r)/(1 - rR) < R.
double feasible_delta(double r, double R, int n, std::uint64_t probes = 4096);

// One-dimensional construction: the smallest m with chord delta(m) =
// r sqrt(2 - 2 cos(2 pi / m)) below min{(r - r R^2)/(1 + R^2)} and r + delta < 1,
// points z_j = r e^(2 pi i j / m) and the deleted set {p_j = (R/r) z_j}.
Config example_disk_config(double r, double R);

// Ball construction: a verified delta-covering {z_i} of the radius-r sphere
// shell, with deleted hyperplanes through p_i normal to z_i - p_i.
Config build_ball_config(double r, double R, int n, std::uint64_t budget = kDefaultBudget);

// Polydisk construction: the disk configuration embedded in the first
// coordinate, with vertical hyperplanes {w_1 = p_i1} deleted.
Config build_polydisk_config(double r, double R, int n);

struct VerificationReport {
  bool covering_ok = false;
  double worst_gap = 0.0;  // largest sampled distance to the nearest z_i
  bool feasibility_ok = false;
  double worst_feasibility = 0.0;  // largest sampled tanh_c(p_i, .) over the delta-balls
  double center_value = 0.0;       // distance from 0 to the deleted set
  bool center_ok = false;          // center_value == R within 1e-9
  double boundary_max = 0.0;       // largest sampled distance over the shell (or slice)
  bool boundary_ok = false;        // boundary_max < R
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  bool all_ok() const { return covering_ok && feasibility_ok && center_ok && boundary_ok; }
};

// Measures the four certificate conditions by seeded sampling; failures set
// flags instead of throwing, so corrupted configs produce a failing report.
VerificationReport verify_config(const Config& cfg, std::uint64_t samples = 10000,
                                 std::uint64_t seed = kDefaultSeed);

// The squeezing-function field z -> distance to the deleted set, on the
// model domain minus that set.
Field distance_field(const Config& cfg, std::uint64_t budget = kDefaultBudget,
                     std::uint64_t seed = kDefaultSeed);

// JSON round trip; complex numbers serialize as [re, im] pairs.
nlohmann::ordered_json config_to_json(const Config& cfg);
Config config_from_json(const nlohmann::json& j);
Config load_config(const std::string& path);
void save_config(const Config& cfg, const std::string& path);

nlohmann::ordered_json report_to_json(const VerificationReport& rep);

}  // namespace squeeze
