#include "squeeze/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace squeeze {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// n - 1 sorted uniforms partition [0, 1]; the gaps are exactly uniform on the
// simplex {x >= 0, sum x = 1} and the map is piecewise linear, so lattice
// structure survives. sqrt of the gaps is the moduli law of the uniform
// sphere. Consumes n - 1 streams.
void simplex_sqrt(const rng::KroneckerSeq& seq, std::uint64_t i, int n, int stream0,
                  double r, double* m) {
  if (n == 1) {
    m[0] = r;
    return;
  }
  double u[rng::KroneckerSeq::kMaxDim];
  for (int j = 0; j + 1 < n; ++j) u[j] = seq.coord(i, stream0 + j);
  for (int a = 1; a + 1 < n; ++a) {  // insertion sort, n is small
    const double key = u[a];
    int b = a - 1;
    while (b >= 0 && u[b] > key) {
      u[b + 1] = u[b];
      --b;
    }
    u[b + 1] = key;
  }
  double prev = 0.0;
  for (int j = 0; j < n; ++j) {
    const double next = j + 1 < n ? u[j] : 1.0;
    m[j] = r * std::sqrt(std::max(0.0, next - prev));
    prev = next;
  }
}

int lattice_dim(const BoundarySet& s) {
  switch (s.kind) {
    case BoundarySet::Kind::SphereShell:
    case BoundarySet::Kind::SphereShellMinusCap:
      return std::max(1, 2 * s.dim - 1);
    case BoundarySet::Kind::PolydiskShell:
      return std::max(1, 2 * s.dim - 1);
    case BoundarySet::Kind::HyperplaneArrangement:
      return std::max(1, 2 * s.dim - 1);
    case BoundarySet::Kind::VerticalHyperplanes:
      return std::max(1, 2 * (s.dim - 1));
    case BoundarySet::Kind::PointSet:
      return 1;
  }
  return 1;
}

}  // namespace

void sphere_point(const rng::KroneckerSeq& seq, std::uint64_t i, double r, CVector& out,
                  int stream0) {
  const int n = out.dim();
  double m[rng::KroneckerSeq::kMaxDim];
  simplex_sqrt(seq, i, n, stream0, r, m);
  for (int j = 0; j < n; ++j)
    out[j] = std::polar(m[j], kTwoPi * seq.coord(i, stream0 + n - 1 + j));
}

void orthant_sphere_moduli(const rng::KroneckerSeq& seq, std::uint64_t i, double r,
                           std::vector<double>& out, int stream0) {
  simplex_sqrt(seq, i, static_cast<int>(out.size()), stream0, r, out.data());
}

SetSampler::SetSampler(const BoundarySet& s, std::uint64_t seed)
    : set_(s), seq_(lattice_dim(s), seed) {
  if (set_.kind == BoundarySet::Kind::HyperplaneArrangement) {
    charts_.reserve(set_.planes.size());
    for (const auto& h : set_.planes) {
      PlaneChart chart;
      chart.base = hyperplane_foot(h);
      chart.basis = orthogonal_complement_basis(h.normal);
      // Large enough to cover the plane's trace in the unit polydisk (norm
      // up to sqrt(n)); ambient-domain rejection happens at the caller.
      chart.radius = std::sqrt(std::max(0.0, static_cast<double>(set_.dim) - norm2(chart.base)));
      charts_.push_back(std::move(chart));
    }
  }
}

std::uint64_t SetSampler::effective_count(std::uint64_t requested) const {
  switch (set_.kind) {
    case BoundarySet::Kind::PointSet:
      return set_.points.size();
    case BoundarySet::Kind::VerticalHyperplanes:
      if (set_.dim == 1) return set_.vertical.size();
      return requested;
    default:
      return requested;
  }
}

bool SetSampler::point(std::uint64_t i, CVector& out) const {
  const int n = set_.dim;
  switch (set_.kind) {
    case BoundarySet::Kind::SphereShell:
      sphere_point(seq_, i, set_.radius, out);
      return true;

    case BoundarySet::Kind::SphereShellMinusCap:
      sphere_point(seq_, i, set_.radius, out);
      return dist_euclid(out, set_.cap_center) >= set_.cap_radius;

    case BoundarySet::Kind::PolydiskShell: {
      // Stratified over every face and corner of the shell: the index picks a
      // nonempty subset of coordinates pinned at modulus r. Minimizers of
      // coordinatewise objectives often sit on the corner strata, which carry
      // zero boundary measure but still belong to the set.
      const std::uint64_t strata = (1ull << n) - 1;
      const std::uint64_t mask = 1 + i % strata;
      int stream = 0;
      for (int j = 0; j < n; ++j) {
        if (mask & (1ull << j)) {
          out[j] = std::polar(set_.radius, kTwoPi * seq_.coord(i, stream));
          stream += 1;
        } else {
          const double rho = set_.radius * std::sqrt(seq_.coord(i, stream));
          out[j] = std::polar(rho, kTwoPi * seq_.coord(i, stream + 1));
          stream += 2;
        }
      }
      return true;
    }

    case BoundarySet::Kind::HyperplaneArrangement: {
      const auto& chart = charts_[i % charts_.size()];
      const int k = n - 1;
      out = chart.base;
      if (k == 0) return true;
      // Uniform point of the complex k-ball: squared moduli are the first k
      // gaps of the (k + 1)-simplex, the last gap is the slack.
      double x[rng::KroneckerSeq::kMaxDim];
      simplex_sqrt(seq_, i, k + 1, 0, 1.0, x);
      for (int j = 0; j < k; ++j) {
        const double rho = chart.radius * x[j];
        const cplx t = std::polar(rho, kTwoPi * seq_.coord(i, k + j));
        out = out + t * chart.basis[static_cast<std::size_t>(j)];
      }
      return true;
    }

    case BoundarySet::Kind::VerticalHyperplanes: {
      const std::uint64_t m = set_.vertical.size();
      out[0] = set_.vertical[static_cast<std::size_t>(i % m)];
      for (int j = 1; j < n; ++j) {
        const double rho = std::sqrt(seq_.coord(i, 2 * (j - 1))) * (1.0 - 1e-12);
        out[j] = std::polar(rho, kTwoPi * seq_.coord(i, 2 * (j - 1) + 1));
      }
      return true;
    }

    case BoundarySet::Kind::PointSet:
      out = set_.points[static_cast<std::size_t>(i % set_.points.size())];
      return true;
  }
  throw std::logic_error("SetSampler: unknown kind");
}

}  // namespace squeeze
