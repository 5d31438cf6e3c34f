#pragma once

// Deterministic counter-based randomness.
//
// Every stochastic routine in this library draws from (seed, index, stream)
// triples through the SplitMix64 finalizer, so results are reproducible
// bit-for-bit for a given seed regardless of evaluation order or thread
// count. Quasi-uniform point sets use Kronecker lattices built from the
// generalized golden ratio (the R_d sequence), shifted by a seeded offset.

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace squeeze::rng {

constexpr std::uint64_t kGolden64 = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden64;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// 53-bit uniform in [0, 1).
inline double to_unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Stateless uniform draw: component `stream` of sample `index`.
inline double uniform(std::uint64_t seed, std::uint64_t index, std::uint32_t stream) {
  const std::uint64_t key = splitmix64(seed ^ (kGolden64 * (stream + 1)));
  return to_unit(splitmix64(key + index));
}

// Kronecker lattice in [0,1)^d: point i has coordinates
// frac(offset_j + i * alpha_j), with alpha_j = phi_d^-(j+1) and phi_d the
// positive root of x^(d+1) = x + 1. The offset is seeded, so distinct seeds
// give distinct (rotated) lattices over the same low-discrepancy structure.
class KroneckerSeq {
 public:
  static constexpr int kMaxDim = 32;

  KroneckerSeq(int d, std::uint64_t seed) : dim_(d) {
    if (d < 1 || d > kMaxDim) throw std::invalid_argument("KroneckerSeq: bad dimension");
    double phi = 1.5;
    for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / (d + 1));
    double a = 1.0;
    const double inv = 1.0 / phi;
    for (int j = 0; j < d; ++j) {
      a *= inv;
      alpha_[j] = a;
      offset_[j] = uniform(seed, 0, static_cast<std::uint32_t>(1000 + j));
    }
  }

  int dim() const { return dim_; }

  double coord(std::uint64_t index, int j) const {
    const double x = offset_[j] + alpha_[j] * static_cast<double>(index);
    return x - std::floor(x);
  }

 private:
  double alpha_[kMaxDim] = {};
  double offset_[kMaxDim] = {};
  int dim_;
};

}  // namespace squeeze::rng
