#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace squeeze {

using cplx = std::complex<double>;

// Point of C^n.
struct CVector {
  std::vector<cplx> coords;

  CVector() = default;
  explicit CVector(int n) {
    if (n < 1) throw std::invalid_argument("CVector: dimension must be >= 1");
    coords.resize(static_cast<std::size_t>(n));
  }
  CVector(std::initializer_list<cplx> xs) : coords(xs) {}

  int dim() const { return static_cast<int>(coords.size()); }
  cplx& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }
  const cplx& operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
  bool operator==(const CVector&) const = default;
};

inline double norm2(const CVector& z) {
  double s = 0.0;
  for (const auto& c : z.coords) s += std::norm(c);
  return s;
}

inline double norm(const CVector& z) { return std::sqrt(norm2(z)); }

inline double max_mod(const CVector& z) {
  double m = 0.0;
  for (const auto& c : z.coords) m = std::max(m, std::abs(c));
  return m;
}

inline bool all_finite(const CVector& z) {
  for (const auto& c : z.coords)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

inline CVector unit_axis(int n, int k) {
  CVector e(n);
  e[k] = 1.0;
  return e;
}

inline CVector operator+(const CVector& a, const CVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("CVector: dimension mismatch");
  CVector out(a);
  for (int i = 0; i < a.dim(); ++i) out[i] += b[i];
  return out;
}

inline CVector operator-(const CVector& a, const CVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("CVector: dimension mismatch");
  CVector out(a);
  for (int i = 0; i < a.dim(); ++i) out[i] -= b[i];
  return out;
}

inline CVector operator*(cplx lambda, const CVector& z) {
  CVector out(z);
  for (auto& c : out.coords) c *= lambda;
  return out;
}

inline double dist_euclid(const CVector& a, const CVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("CVector: dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

// Sum_j z_j * conj(a_j). Conjugate-symmetric: swapping the arguments
// conjugates the result.
inline cplx hermitian_inner(const CVector& a, const CVector& z) {
  if (a.dim() != z.dim()) throw std::invalid_argument("hermitian_inner: dimension mismatch");
  cplx s = 0.0;
  for (int j = 0; j < a.dim(); ++j) s += z[j] * std::conj(a[j]);
  return s;
}

}  // namespace squeeze
