#pragma once

#include <optional>
#include <string>

#include "squeeze/constructions.hpp"

namespace squeeze {

inline constexpr const char* kToolVersion = "squeeze 0.1.0";
inline constexpr std::uint64_t kDefaultCliSeed = 123456789;

// One fully resolved command invocation. run() is the whole CLI behind flag
// parsing, so tests can drive it directly; identical RunSpecs produce
// byte-identical output files.
struct RunSpec {
  enum class Command { Eval, Dist, Psh, Construct, Verify };
  Command command = Command::Eval;

  // eval
  std::string domain;
  struct Ray {
    double t0 = 0.0;
    double t1 = 0.0;
    int count = 0;
  };
  std::optional<Ray> ray;
  std::vector<CVector> points;

  // dist
  std::string model = "ball";  // ball | polydisk
  std::string set_kind;        // sphere-shell | polydisk-shell | sphere-shell-minus-cap |
                               // point-set | vertical-planes
  std::vector<cplx> plane_values;
  std::vector<CVector> set_points;
  std::optional<CVector> cap_center;
  double cap_radius = 0.0;

  // psh
  std::string fixture = "shell-cap";
  double eps = 0.05;
  int discs = 1000;

  // construct
  std::string kind = "disk";
  double R = 0.6;

  // verify
  std::string config_path;

  // common
  double r = 0.25;
  int n = 2;
  std::string out_path;
  std::string format;  // csv | json; per-command default when empty
  std::uint64_t seed = kDefaultCliSeed;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t samples = 10000;
  int quad_n = 512;
};

// Exit code 0 on success, 1 on usage or domain errors, 2 when a verification
// report comes back with a failed flag.
int run(const RunSpec& spec);

// Shortest round-trip decimal rendering, shared by all writers.
std::string fmt_double(double v);

}  // namespace squeeze
