#pragma once

#include "squeeze/domain.hpp"

namespace squeeze {

// Hyperbolic pseudodistance of the unit disk on the tanh scale:
// |(z - a) / (1 - conj(a) z)|.
double mobius_dist(cplx a, cplx z);

// tanh of the Caratheodory distance between interior points of the unit
// ball, [1 - (1-|a|^2)(1-|z|^2)/|1 - <z,a>|^2]^(1/2).
double tanh_c_ball(const CVector& a, const CVector& z);

// tanh of the Caratheodory distance of the unit polydisk: the largest
// coordinate-wise disk distance.
double tanh_c_polydisk(const CVector& a, const CVector& z);

// Dispatch over the model domain kind.
double tanh_c(const ModelDomain& d, const CVector& a, const CVector& z);

// The ball automorphism exchanging a and 0, evaluated at w. Satisfies
// tanh_c_ball(a, w) == norm(ball_involution(a, w)).
CVector ball_involution(const CVector& a, const CVector& w);

// Distance carried on both scales. atanh blows up as tanh approaches 1, so
// values past 1 - 1e-15 are capped and flagged.
struct DistanceValue {
  double tanh_c = 0.0;
  double c = 0.0;
  bool saturated = false;

  static DistanceValue from_tanh(double t);
};

}  // namespace squeeze
