#include "squeeze/cli_app.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "squeeze/rng.hpp"
#include "squeeze/sampling.hpp"

namespace squeeze {

namespace {

using ordered_json = nlohmann::ordered_json;

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file " + path);
  out << content;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  line += '\n';
  return line;
}

std::vector<std::string> coord_header(const char* stem, int n) {
  std::vector<std::string> cols;
  for (int i = 1; i <= n; ++i) {
    cols.push_back(std::string(stem) + std::to_string(i) + "_re");
    cols.push_back(std::string(stem) + std::to_string(i) + "_im");
  }
  return cols;
}

void append_coords(std::vector<std::string>& cells, const CVector& z) {
  for (const auto& c : z.coords) {
    cells.push_back(fmt_double(c.real()));
    cells.push_back(fmt_double(c.imag()));
  }
}

ordered_json coords_json(const CVector& z) {
  auto arr = ordered_json::array();
  for (const auto& c : z.coords) arr.push_back(ordered_json{c.real(), c.imag()});
  return arr;
}

std::string resolved_format(const RunSpec& spec) {
  if (!spec.format.empty()) {
    if (spec.format != "csv" && spec.format != "json")
      throw std::invalid_argument("format must be csv or json");
    return spec.format;
  }
  switch (spec.command) {
    case RunSpec::Command::Eval:
    case RunSpec::Command::Dist:
      return "csv";
    default:
      return "json";
  }
}

ordered_json spec_json(const RunSpec& spec, const std::string& format) {
  ordered_json j;
  switch (spec.command) {
    case RunSpec::Command::Eval: j["command"] = "eval"; break;
    case RunSpec::Command::Dist: j["command"] = "dist"; break;
    case RunSpec::Command::Psh: j["command"] = "psh"; break;
    case RunSpec::Command::Construct: j["command"] = "construct"; break;
    case RunSpec::Command::Verify: j["command"] = "verify"; break;
  }
  if (spec.command == RunSpec::Command::Eval) {
    j["domain"] = spec.domain;
    j["r"] = spec.r;
    j["n"] = spec.n;
    if (spec.ray) j["ray"] = ordered_json{spec.ray->t0, spec.ray->t1, spec.ray->count};
  }
  if (spec.command == RunSpec::Command::Dist) {
    j["model"] = spec.model;
    j["set"] = spec.set_kind;
    j["r"] = spec.r;
    j["n"] = spec.n;
  }
  if (spec.command == RunSpec::Command::Psh) {
    j["fixture"] = spec.fixture;
    j["r"] = spec.r;
    j["eps"] = spec.eps;
    j["n"] = spec.n;
    j["quadN"] = spec.quad_n;
  }
  if (spec.command == RunSpec::Command::Construct) {
    j["kind"] = spec.kind;
    j["r"] = spec.r;
    j["R"] = spec.R;
    j["n"] = spec.n;
  }
  if (spec.command == RunSpec::Command::Verify) j["config"] = spec.config_path;
  j["format"] = format;
  j["seed"] = spec.seed;
  j["budget"] = spec.budget;
  j["samples"] = spec.samples;
  return j;
}

std::string envelope(const RunSpec& spec, const std::string& format, ordered_json results,
                     ordered_json extra_meta = ordered_json::object()) {
  ordered_json j;
  j["spec"] = spec_json(spec, format);
  j["results"] = std::move(results);
  ordered_json meta;
  meta["seed"] = spec.seed;
  meta["samples"] = spec.samples;
  meta["toolVersion"] = kToolVersion;
  for (auto& [k, v] : extra_meta.items()) meta[k] = v;
  j["meta"] = meta;
  return j.dump(2) + "\n";
}

DomainSpec domain_from_spec(const RunSpec& spec) {
  const auto kind = DomainSpec::kind_from_name(spec.domain);
  if (!kind) throw std::invalid_argument("unknown domain kind: " + spec.domain);
  DomainSpec d;
  d.kind = *kind;
  d.dim = spec.n;
  d.r = spec.r;
  d.validate();
  return d;
}

std::vector<CVector> grid_points(const RunSpec& spec, int n) {
  std::vector<CVector> pts = spec.points;
  for (auto& p : pts) {
    if (p.dim() != n) throw std::invalid_argument("grid point has the wrong dimension");
    if (!all_finite(p)) throw std::invalid_argument("grid point has non-finite coordinates");
  }
  if (spec.ray) {
    if (spec.ray->count < 1) throw std::invalid_argument("ray count must be >= 1");
    for (int k = 0; k < spec.ray->count; ++k) {
      const double t = spec.ray->count == 1
                           ? spec.ray->t0
                           : spec.ray->t0 + (spec.ray->t1 - spec.ray->t0) * k / (spec.ray->count - 1);
      CVector z(n);
      z[0] = t;
      pts.push_back(std::move(z));
    }
  }
  if (pts.empty()) throw std::invalid_argument("no grid points given (use a ray or points)");
  return pts;
}

int run_eval(const RunSpec& spec, const std::string& format) {
  const DomainSpec d = domain_from_spec(spec);
  const auto pts = grid_points(spec, d.dim);

  std::uint64_t skipped = 0;
  std::string csv;
  auto results = ordered_json::array();
  if (format == "csv") {
    auto cols = coord_header("z", d.dim);
    if (d.returns_interval()) {
      cols.push_back("lo");
      cols.push_back("hi");
    } else {
      cols.push_back("value");
    }
    csv += csv_row(cols);
  }

  for (const auto& z : pts) {
    if (!d.contains(z)) {
      ++skipped;
      continue;
    }
    const EvalResult ev = eval_domain(d, z, spec.budget, spec.seed);
    if (format == "csv") {
      std::vector<std::string> cells;
      append_coords(cells, z);
      if (ev.is_interval) {
        cells.push_back(fmt_double(ev.interval.lo));
        cells.push_back(fmt_double(ev.interval.hi));
      } else {
        cells.push_back(fmt_double(ev.value));
      }
      csv += csv_row(cells);
    } else {
      ordered_json row;
      row["z"] = coords_json(z);
      if (ev.is_interval) {
        row["lo"] = ev.interval.lo;
        row["hi"] = ev.interval.hi;
      } else {
        row["value"] = ev.value;
      }
      results.push_back(row);
    }
  }

  if (format == "csv") {
    write_text_file(spec.out_path, csv);
  } else {
    ordered_json meta;
    meta["skipped"] = skipped;
    write_text_file(spec.out_path, envelope(spec, format, results, meta));
  }
  if (skipped) std::cout << "skipped " << skipped << " grid points outside the domain\n";
  return 0;
}

BoundarySet set_from_spec(const RunSpec& spec) {
  if (spec.set_kind == "sphere-shell") return BoundarySet::sphere_shell(spec.n, spec.r);
  if (spec.set_kind == "polydisk-shell") return BoundarySet::polydisk_shell(spec.n, spec.r);
  if (spec.set_kind == "sphere-shell-minus-cap") {
    if (!spec.cap_center) throw std::invalid_argument("sphere-shell-minus-cap needs --cap-center");
    return BoundarySet::sphere_shell_minus_cap(spec.n, spec.r, *spec.cap_center, spec.cap_radius);
  }
  if (spec.set_kind == "point-set") return BoundarySet::point_set(spec.n, spec.set_points);
  if (spec.set_kind == "vertical-planes")
    return BoundarySet::vertical_hyperplanes(spec.n, spec.plane_values);
  throw std::invalid_argument("unknown set kind: " + spec.set_kind);
}

int run_dist(const RunSpec& spec, const std::string& format) {
  ModelDomain omega;
  if (spec.model == "ball")
    omega = ModelDomain::ball(spec.n);
  else if (spec.model == "polydisk")
    omega = ModelDomain::polydisk(spec.n);
  else
    throw std::invalid_argument("model must be ball or polydisk");
  const BoundarySet set = set_from_spec(spec);
  if (spec.points.empty()) throw std::invalid_argument("dist needs at least one --point");

  std::string csv;
  auto results = ordered_json::array();
  if (format == "csv") {
    auto cols = coord_header("z", spec.n);
    cols.push_back("value");
    cols.push_back("method");
    cols.push_back("samples");
    cols.push_back("converged");
    auto w = coord_header("w", spec.n);
    cols.insert(cols.end(), w.begin(), w.end());
    csv += csv_row(cols);
  }

  for (const auto& z : spec.points) {
    const MinimizerResult res = dist_generic(omega, z, set, spec.budget, spec.seed);
    if (format == "csv") {
      std::vector<std::string> cells;
      append_coords(cells, z);
      cells.push_back(fmt_double(res.value));
      cells.push_back(method_name(res.method));
      cells.push_back(std::to_string(res.samples));
      cells.push_back(res.converged ? "1" : "0");
      append_coords(cells, res.argmin);
      csv += csv_row(cells);
    } else {
      ordered_json row;
      row["z"] = coords_json(z);
      row["value"] = res.value;
      row["method"] = method_name(res.method);
      row["samples"] = res.samples;
      row["converged"] = res.converged;
      row["argmin"] = coords_json(res.argmin);
      results.push_back(row);
    }
  }

  if (format == "csv")
    write_text_file(spec.out_path, csv);
  else
    write_text_file(spec.out_path, envelope(spec, format, results));
  return 0;
}

ordered_json violation_json(const Violation& v) {
  ordered_json j;
  j["center"] = coords_json(v.center);
  j["direction"] = coords_json(v.direction);
  j["radius"] = v.radius;
  j["centerValue"] = v.center_value;
  j["circleMean"] = v.circle_mean;
  j["deficit"] = v.deficit;
  return j;
}

PshReport control_scan(const RunSpec& spec, bool polydisk) {
  // Random centers well inside the domain with radii that keep every disc
  // interior; psh controls should report nothing.
  const int n = spec.n;
  const int centers_count = std::max(1, spec.discs / 4);
  rng::KroneckerSeq seq(2 * n, spec.seed);
  std::vector<CVector> centers;
  centers.reserve(static_cast<std::size_t>(centers_count));
  for (int i = 0; i < centers_count; ++i) {
    CVector c(n);
    sphere_point(seq, static_cast<std::uint64_t>(i), 1.0, c);
    const double shrink = 0.6 * seq.coord(static_cast<std::uint64_t>(i), 2 * n - 1);
    c = cplx(shrink, 0.0) * c;
    centers.push_back(std::move(c));
  }
  const Field f = polydisk ? max_modulus_field(n) : norm_field(n);
  return scan_psh(f, centers, 2, {0.05, 0.15}, 64, 1e-6, spec.seed + 1);
}

int run_psh(const RunSpec& spec, const std::string& format) {
  PshReport report;
  if (spec.fixture == "shell-cap" || spec.fixture == "theorem41") {
    report = shell_cap_certificate(spec.r, spec.eps, spec.n, spec.quad_n, spec.budget, spec.seed);
  } else if (spec.fixture == "max-mod") {
    report = control_scan(spec, true);
  } else if (spec.fixture == "norm") {
    report = control_scan(spec, false);
  } else {
    throw std::invalid_argument("unknown psh fixture: " + spec.fixture);
  }

  if (format == "csv") {
    std::string csv;
    auto cols = coord_header("c", spec.n);
    auto dcols = coord_header("d", spec.n);
    cols.insert(cols.end(), dcols.begin(), dcols.end());
    cols.push_back("radius");
    cols.push_back("centerValue");
    cols.push_back("circleMean");
    cols.push_back("deficit");
    csv += csv_row(cols);
    for (const auto& v : report.violations) {
      std::vector<std::string> cells;
      append_coords(cells, v.center);
      append_coords(cells, v.direction);
      cells.push_back(fmt_double(v.radius));
      cells.push_back(fmt_double(v.center_value));
      cells.push_back(fmt_double(v.circle_mean));
      cells.push_back(fmt_double(v.deficit));
      csv += csv_row(cells);
    }
    write_text_file(spec.out_path, csv);
  } else {
    ordered_json rep;
    auto arr = ordered_json::array();
    for (const auto& v : report.violations) arr.push_back(violation_json(v));
    rep["violations"] = arr;
    rep["scanned"] = report.scanned;
    rep["skipped"] = report.skipped;
    rep["quadratureN"] = report.quadrature_n;
    write_text_file(spec.out_path, envelope(spec, format, rep));
  }
  return 0;
}

int run_construct(const RunSpec& spec) {
  Config cfg;
  if (spec.kind == "disk")
    cfg = example_disk_config(spec.r, spec.R);
  else if (spec.kind == "ball")
    cfg = build_ball_config(spec.r, spec.R, spec.n, spec.budget);
  else if (spec.kind == "polydisk")
    cfg = build_polydisk_config(spec.r, spec.R, spec.n);
  else
    throw std::invalid_argument("unknown construct kind: " + spec.kind);
  write_text_file(spec.out_path, config_to_json(cfg).dump(2) + "\n");
  return 0;
}

int run_verify(const RunSpec& spec, const std::string& format) {
  const Config cfg = load_config(spec.config_path);
  const VerificationReport rep = verify_config(cfg, spec.samples, spec.seed);
  if (format == "csv") {
    std::string csv = csv_row({"coveringOK", "worstGap", "feasibilityOK", "worstFeasibility",
                               "centerValue", "centerOK", "boundaryMax", "boundaryOK", "samples",
                               "seed", "allOK"});
    csv += csv_row({rep.covering_ok ? "1" : "0", fmt_double(rep.worst_gap),
                    rep.feasibility_ok ? "1" : "0", fmt_double(rep.worst_feasibility),
                    fmt_double(rep.center_value), rep.center_ok ? "1" : "0",
                    fmt_double(rep.boundary_max), rep.boundary_ok ? "1" : "0",
                    std::to_string(rep.samples), std::to_string(rep.seed),
                    rep.all_ok() ? "1" : "0"});
    write_text_file(spec.out_path, csv);
  } else {
    write_text_file(spec.out_path, envelope(spec, format, report_to_json(rep)));
  }
  return rep.all_ok() ? 0 : 2;
}

}  // namespace

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

int run(const RunSpec& spec) {
  try {
    if (spec.out_path.empty()) throw std::invalid_argument("output path required");
    const std::string format = resolved_format(spec);
    switch (spec.command) {
      case RunSpec::Command::Eval: return run_eval(spec, format);
      case RunSpec::Command::Dist: return run_dist(spec, format);
      case RunSpec::Command::Psh: return run_psh(spec, format);
      case RunSpec::Command::Construct: return run_construct(spec);
      case RunSpec::Command::Verify: return run_verify(spec, format);
    }
    throw std::logic_error("unknown command");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace squeeze
