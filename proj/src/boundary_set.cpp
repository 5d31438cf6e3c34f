#include "squeeze/boundary_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace squeeze {

namespace {

void check_shell_params(int n, double r) {
  if (n < 1) throw std::invalid_argument("BoundarySet: dimension must be >= 1");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("BoundarySet: shell radius must lie in (0,1)");
}

}  // namespace

BoundarySet BoundarySet::sphere_shell(int n, double r) {
  check_shell_params(n, r);
  BoundarySet s;
  s.kind = Kind::SphereShell;
  s.dim = n;
  s.radius = r;
  return s;
}

BoundarySet BoundarySet::polydisk_shell(int n, double r) {
  check_shell_params(n, r);
  BoundarySet s;
  s.kind = Kind::PolydiskShell;
  s.dim = n;
  s.radius = r;
  return s;
}

BoundarySet BoundarySet::sphere_shell_minus_cap(int n, double r, CVector cap_center,
                                                double cap_radius) {
  check_shell_params(n, r);
  if (cap_center.dim() != n)
    throw std::invalid_argument("BoundarySet: cap center dimension mismatch");
  if (std::abs(norm(cap_center) - r) > 1e-12)
    throw std::invalid_argument("BoundarySet: cap center must lie on the shell");
  if (!(cap_radius > 0.0))
    throw std::invalid_argument("BoundarySet: cap radius must be positive");
  // The farthest shell point from the cap center sits at Euclidean distance
  // 2r; a larger cap swallows the whole shell.
  if (cap_radius > 2.0 * r)
    throw std::invalid_argument("BoundarySet: cap swallows the shell, residual set empty");
  BoundarySet s;
  s.kind = Kind::SphereShellMinusCap;
  s.dim = n;
  s.radius = r;
  s.cap_center = std::move(cap_center);
  s.cap_radius = cap_radius;
  return s;
}

BoundarySet BoundarySet::hyperplane_arrangement(int n, std::vector<Hyperplane> planes) {
  if (n < 1) throw std::invalid_argument("BoundarySet: dimension must be >= 1");
  if (planes.empty()) throw std::invalid_argument("BoundarySet: empty hyperplane arrangement");
  for (const auto& h : planes) {
    if (h.base.dim() != n || h.normal.dim() != n)
      throw std::invalid_argument("BoundarySet: hyperplane dimension mismatch");
    if (!(norm2(h.normal) > 0.0))
      throw std::invalid_argument("BoundarySet: hyperplane normal must be nonzero");
    if (!(norm(hyperplane_foot(h)) < 1.0))
      throw std::invalid_argument("BoundarySet: hyperplane misses the unit ball");
  }
  BoundarySet s;
  s.kind = Kind::HyperplaneArrangement;
  s.dim = n;
  s.planes = std::move(planes);
  return s;
}

BoundarySet BoundarySet::vertical_hyperplanes(int n, std::vector<cplx> first_coords) {
  if (n < 1) throw std::invalid_argument("BoundarySet: dimension must be >= 1");
  if (first_coords.empty()) throw std::invalid_argument("BoundarySet: empty plane list");
  for (const auto& p : first_coords)
    if (!(std::abs(p) < 1.0))
      throw std::invalid_argument("BoundarySet: vertical plane misses the unit polydisk");
  BoundarySet s;
  s.kind = Kind::VerticalHyperplanes;
  s.dim = n;
  s.vertical = std::move(first_coords);
  return s;
}

BoundarySet BoundarySet::point_set(int n, std::vector<CVector> pts) {
  if (n < 1) throw std::invalid_argument("BoundarySet: dimension must be >= 1");
  if (pts.empty()) throw std::invalid_argument("BoundarySet: empty point set");
  for (const auto& q : pts) {
    if (q.dim() != n) throw std::invalid_argument("BoundarySet: point dimension mismatch");
    if (!all_finite(q) || !(max_mod(q) < 1.0))
      throw std::invalid_argument("BoundarySet: point outside the model domain");
  }
  BoundarySet s;
  s.kind = Kind::PointSet;
  s.dim = n;
  s.points = std::move(pts);
  return s;
}

double BoundarySet::membership_residual(const CVector& w) const {
  if (w.dim() != dim) throw std::invalid_argument("BoundarySet: dimension mismatch");
  switch (kind) {
    case Kind::SphereShell:
      return std::abs(norm(w) - radius);
    case Kind::PolydiskShell:
      return std::abs(max_mod(w) - radius);
    case Kind::SphereShellMinusCap: {
      const double shell = std::abs(norm(w) - radius);
      const double cap = std::max(0.0, cap_radius - dist_euclid(w, cap_center));
      return std::max(shell, cap);
    }
    case Kind::HyperplaneArrangement: {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& h : planes) {
        const cplx off = hermitian_inner(h.normal, w - h.base);  // <w - base, normal>
        best = std::min(best, std::abs(off) / norm(h.normal));
      }
      return best;
    }
    case Kind::VerticalHyperplanes: {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& p : vertical) best = std::min(best, std::abs(w[0] - p));
      return best;
    }
    case Kind::PointSet: {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : points) best = std::min(best, dist_euclid(w, q));
      return best;
    }
  }
  throw std::logic_error("BoundarySet: unknown kind");
}

CVector hyperplane_foot(const Hyperplane& h) {
  const cplx pv = hermitian_inner(h.normal, h.base);  // <base, normal>
  return (pv / norm2(h.normal)) * h.normal;
}

std::vector<CVector> orthogonal_complement_basis(const CVector& v) {
  const int n = v.dim();
  const double nv = norm(v);
  if (!(nv > 0.0)) throw std::invalid_argument("orthogonal_complement_basis: zero vector");
  std::vector<CVector> basis;
  basis.push_back((1.0 / nv) * v);
  // Gram-Schmidt over the standard basis, skipping near-dependent candidates.
  for (int k = 0; k < n && static_cast<int>(basis.size()) < n; ++k) {
    CVector cand = unit_axis(n, k);
    for (const auto& b : basis) {
      const cplx proj = hermitian_inner(b, cand);  // <cand, b>
      cand = cand - proj * b;
    }
    const double len = norm(cand);
    if (len > 1e-8) basis.push_back((1.0 / len) * cand);
  }
  if (static_cast<int>(basis.size()) != n)
    throw std::logic_error("orthogonal_complement_basis: failed to complete basis");
  basis.erase(basis.begin());
  return basis;
}

}  // namespace squeeze
