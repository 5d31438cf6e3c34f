#include "squeeze/caratheodory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace squeeze {

double mobius_dist(cplx a, cplx z) {
  if (!(std::abs(a) < 1.0) || !(std::abs(z) < 1.0))
    throw std::domain_error("mobius_dist: argument outside the open unit disk");
  return std::abs(z - a) / std::abs(1.0 - std::conj(a) * z);
}

double tanh_c_ball(const CVector& a, const CVector& z) {
  if (a.dim() != z.dim()) throw std::invalid_argument("tanh_c_ball: dimension mismatch");
  const double na = norm2(a);
  const double nz = norm2(z);
  if (!(na < 1.0) || !(nz < 1.0))
    throw std::domain_error("tanh_c_ball: argument outside the open unit ball");
  const cplx ip = hermitian_inner(a, z);  // <z, a>
  const double den = std::norm(1.0 - ip);
  // Rounding can push the bracket slightly below 0 near a == z; the exact
  // value lies in [0, 1).
  const double bracket = std::clamp(1.0 - (1.0 - na) * (1.0 - nz) / den, 0.0, 1.0);
  return std::sqrt(bracket);
}

double tanh_c_polydisk(const CVector& a, const CVector& z) {
  if (a.dim() != z.dim()) throw std::invalid_argument("tanh_c_polydisk: dimension mismatch");
  double best = 0.0;
  for (int i = 0; i < a.dim(); ++i) best = std::max(best, mobius_dist(a[i], z[i]));
  return best;
}

double tanh_c(const ModelDomain& d, const CVector& a, const CVector& z) {
  if (d.dim != a.dim() || d.dim != z.dim())
    throw std::invalid_argument("tanh_c: dimension mismatch");
  return d.kind == ModelDomain::Kind::Ball ? tanh_c_ball(a, z) : tanh_c_polydisk(a, z);
}

CVector ball_involution(const CVector& a, const CVector& w) {
  if (a.dim() != w.dim()) throw std::invalid_argument("ball_involution: dimension mismatch");
  const double na2 = norm2(a);
  if (!(na2 < 1.0) || !(norm2(w) < 1.0))
    throw std::domain_error("ball_involution: argument outside the open unit ball");
  CVector out(a.dim());
  if (na2 == 0.0) {
    for (int j = 0; j < w.dim(); ++j) out[j] = -w[j];
    return out;
  }
  const cplx ip = hermitian_inner(a, w);  // <w, a>
  const double s = std::sqrt(1.0 - na2);
  const cplx coef = ip / na2;
  const cplx den = 1.0 - ip;
  for (int j = 0; j < w.dim(); ++j)
    out[j] = (a[j] * (1.0 - coef * (1.0 - s)) - s * w[j]) / den;
  return out;
}

DistanceValue DistanceValue::from_tanh(double t) {
  if (!(t >= 0.0) || t > 1.0) throw std::invalid_argument("DistanceValue: tanh value outside [0,1]");
  constexpr double kCap = 1.0 - 1e-15;
  DistanceValue v;
  v.tanh_c = t;
  v.saturated = t > kCap;
  v.c = std::atanh(v.saturated ? kCap : t);
  return v;
}

}  // namespace squeeze
