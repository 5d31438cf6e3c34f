#pragma once

#include "squeeze/cvector.hpp"

namespace squeeze {

// Ambient model domain: the unit ball or the unit polydisk of C^n.
struct ModelDomain {
  enum class Kind { Ball, Polydisk };
  Kind kind = Kind::Ball;
  int dim = 1;

  static ModelDomain ball(int n) {
    if (n < 1) throw std::invalid_argument("ModelDomain: dimension must be >= 1");
    return {Kind::Ball, n};
  }
  static ModelDomain polydisk(int n) {
    if (n < 1) throw std::invalid_argument("ModelDomain: dimension must be >= 1");
    return {Kind::Polydisk, n};
  }
};

// Minkowski gauge of the model domain: Euclidean norm for the ball, largest
// coordinate modulus for the polydisk. z lies in the open domain iff < 1.
inline double minkowski(const ModelDomain& d, const CVector& z) {
  if (d.dim != z.dim()) throw std::invalid_argument("minkowski: dimension mismatch");
  return d.kind == ModelDomain::Kind::Ball ? norm(z) : max_mod(z);
}

// Strict membership in the scaled copy of the domain, radius in (0, 1].
inline bool contains(const ModelDomain& d, const CVector& z, double radius) {
  if (!(radius > 0.0 && radius <= 1.0))
    throw std::invalid_argument("contains: radius must lie in (0,1]");
  return minkowski(d, z) < radius;
}

}  // namespace squeeze
