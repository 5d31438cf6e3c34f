#pragma once

#include <cstdint>
#include <vector>

#include "squeeze/boundary_set.hpp"
#include "squeeze/rng.hpp"

namespace squeeze {

// Point i of a quasi-uniform sequence on the complex n-sphere of radius r
// (uniform law: squared moduli uniform on the simplex, phases uniform).
// Consumes streams [stream0, stream0 + 2n) of the lattice.
void sphere_point(const rng::KroneckerSeq& seq, std::uint64_t i, double r, CVector& out,
                  int stream0 = 0);

// Moduli-only variant on the nonnegative orthant of the radius-r sphere in
// R^n. Consumes streams [stream0, stream0 + n).
void orthant_sphere_moduli(const rng::KroneckerSeq& seq, std::uint64_t i, double r,
                           std::vector<double>& out, int stream0 = 0);

// Deterministic quasi-uniform sampler over a BoundarySet. point() returns
// false when index i lands in a rejected region (the removed cap); finite
// sets are enumerated exactly.
class SetSampler {
 public:
  SetSampler(const BoundarySet& s, std::uint64_t seed);

  // Finite sets cap the sample count at their cardinality.
  std::uint64_t effective_count(std::uint64_t requested) const;

  bool point(std::uint64_t i, CVector& out) const;

  const BoundarySet& set() const { return set_; }

 private:
  BoundarySet set_;
  rng::KroneckerSeq seq_;
  struct PlaneChart {
    CVector base;                // foot of the perpendicular from the origin
    std::vector<CVector> basis;  // orthonormal basis of normal^perp
    double radius;               // patch radius covering the polydisk hull
  };
  std::vector<PlaneChart> charts_;
};

}  // namespace squeeze
