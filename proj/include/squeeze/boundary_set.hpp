#pragma once

#include <vector>

#include "squeeze/cvector.hpp"

namespace squeeze {

// Affine complex hyperplane {w : sum_j (w_j - base_j) conj(normal_j) = 0}.
struct Hyperplane {
  CVector base;
  CVector normal;
};

// The deleted sets the set distance minimizes over: scaled shells, a shell
// with an open spherical cap removed, hyperplane arrangements, vertical
// (first-coordinate) hyperplanes, and finite point sets.
struct BoundarySet {
  enum class Kind {
    SphereShell,
    PolydiskShell,
    SphereShellMinusCap,
    HyperplaneArrangement,
    VerticalHyperplanes,
    PointSet,
  };

  Kind kind = Kind::SphereShell;
  int dim = 1;  // ambient dimension n
  double radius = 0.0;
  CVector cap_center;
  double cap_radius = 0.0;
  std::vector<Hyperplane> planes;
  std::vector<cplx> vertical;
  std::vector<CVector> points;

  static BoundarySet sphere_shell(int n, double r);
  static BoundarySet polydisk_shell(int n, double r);
  static BoundarySet sphere_shell_minus_cap(int n, double r, CVector cap_center, double cap_radius);
  static BoundarySet hyperplane_arrangement(int n, std::vector<Hyperplane> planes);
  static BoundarySet vertical_hyperplanes(int n, std::vector<cplx> first_coords);
  static BoundarySet point_set(int n, std::vector<CVector> pts);

  // How far w is from satisfying the set's membership condition; zero on the
  // set. Used for argmin consistency checks and the exact "z lies on S" case.
  double membership_residual(const CVector& w) const;
  bool contains(const CVector& w, double tol = 1e-12) const {
    return membership_residual(w) <= tol;
  }
};

// Foot of the perpendicular from the origin onto the hyperplane. Its norm is
// the Euclidean distance from 0 to the plane.
CVector hyperplane_foot(const Hyperplane& h);

// Orthonormal basis of the orthogonal complement of v in C^n.
std::vector<CVector> orthogonal_complement_basis(const CVector& v);

}  // namespace squeeze
