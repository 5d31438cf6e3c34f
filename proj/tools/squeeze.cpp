// Command-line front end: evaluate catalog invariants on grids, run set
// distances and sub-mean-value scans, build and verify the counterexample
// configurations, and emit machine-readable CSV/JSON reports.

#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "squeeze/cli_app.hpp"

namespace {

using squeeze::CVector;
using squeeze::RunSpec;

squeeze::cplx parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    return {std::stod(text), 0.0};
  return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

// "re,im;re,im;..." -> one point of C^n.
CVector parse_point(const std::string& text) {
  std::vector<squeeze::cplx> coords;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto sep = text.find(';', start);
    const std::string part =
        sep == std::string::npos ? text.substr(start) : text.substr(start, sep - start);
    if (!part.empty()) coords.push_back(parse_complex(part));
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  if (coords.empty()) throw CLI::ValidationError("--point", "empty point");
  CVector z(static_cast<int>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) z[static_cast<int>(i)] = coords[i];
  return z;
}

RunSpec::Ray parse_ray(const std::string& text) {
  RunSpec::Ray ray;
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? 0 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw CLI::ValidationError("--ray", "expected t0:t1:count");
  ray.t0 = std::stod(text.substr(0, c1));
  ray.t1 = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  ray.count = std::stoi(text.substr(c2 + 1));
  return ray;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SQUEEZE_SEED")) return std::strtoull(env, nullptr, 10);
  return squeeze::kDefaultCliSeed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holomorphic invariants of ball/polydisk domains with deleted sets"};
  app.require_subcommand(1);

  RunSpec spec;
  spec.seed = default_seed();

  std::string ray_text, cap_center_text;
  std::vector<std::string> point_texts, set_point_texts, plane_texts;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", spec.out_path, "output file path")->required();
    cmd->add_option("--format", spec.format, "csv or json");
    cmd->add_option("--seed", spec.seed, "seed for all randomized paths");
    cmd->add_option("--budget", spec.budget, "minimization seed budget");
    cmd->add_option("--samples", spec.samples, "sampling count for verification");
    cmd->add_option("--quadn", spec.quad_n, "circle quadrature points");
  };

  auto* eval = app.add_subcommand("eval", "evaluate a catalog invariant on a grid");
  eval->add_option("--domain", spec.domain, "domain kind, e.g. annulus-ball")->required();
  eval->add_option("--r", spec.r, "inner radius parameter");
  eval->add_option("--n", spec.n, "ambient dimension");
  eval->add_option("--ray", ray_text, "t0:t1:count points t*e1");
  eval->add_option("--point", point_texts, "explicit point re,im;re,im;...");
  add_common(eval);

  auto* dist = app.add_subcommand("dist", "distance from points to a deleted set");
  dist->add_option("--domain", spec.model, "ball or polydisk")->required();
  dist->add_option("--set", spec.set_kind, "set kind, e.g. sphere-shell")->required();
  dist->add_option("--r", spec.r, "shell radius");
  dist->add_option("--n", spec.n, "ambient dimension");
  dist->add_option("--point", point_texts, "query point re,im;re,im;...")->required();
  dist->add_option("--set-point", set_point_texts, "point-set member");
  dist->add_option("--plane", plane_texts, "vertical plane first coordinate re,im");
  dist->add_option("--cap-center", cap_center_text, "cap center re,im;re,im;...");
  dist->add_option("--cap-radius", spec.cap_radius, "cap radius");
  add_common(dist);

  auto* psh = app.add_subcommand("psh", "sub-mean-value scan / certificate");
  psh->add_option("--fixture", spec.fixture, "shell-cap (alias theorem41), max-mod, norm");
  psh->add_option("--r", spec.r, "shell radius");
  psh->add_option("--eps", spec.eps, "cap radius");
  psh->add_option("--n", spec.n, "ambient dimension");
  psh->add_option("--discs", spec.discs, "disc count for control scans");
  add_common(psh);

  auto* construct = app.add_subcommand("construct", "build a counterexample configuration");
  construct->add_option("--kind", spec.kind, "disk, ball, or polydisk")->required();
  construct->add_option("--r", spec.r, "shell radius");
  construct->add_option("--R", spec.R, "pushed radius");
  construct->add_option("--n", spec.n, "ambient dimension");
  add_common(construct);

  auto* verify = app.add_subcommand("verify", "verify a configuration file");
  verify->add_option("--config", spec.config_path, "config JSON path")->required();
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) spec.command = RunSpec::Command::Eval;
    if (dist->parsed()) spec.command = RunSpec::Command::Dist;
    if (psh->parsed()) spec.command = RunSpec::Command::Psh;
    if (construct->parsed()) spec.command = RunSpec::Command::Construct;
    if (verify->parsed()) spec.command = RunSpec::Command::Verify;

    if (!ray_text.empty()) spec.ray = parse_ray(ray_text);
    for (const auto& t : point_texts) spec.points.push_back(parse_point(t));
    for (const auto& t : set_point_texts) spec.set_points.push_back(parse_point(t));
    for (const auto& t : plane_texts) spec.plane_values.push_back(parse_complex(t));
    if (!cap_center_text.empty()) spec.cap_center = parse_point(cap_center_text);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }

  return squeeze::run(spec);
}
