// Benchmark of the sample-reduction kernels: serial reference vs OpenMP,
// on the two hot loops (raw shell argmin and the full sampling oracle).
// Exits nonzero if the two flavors ever disagree.

#include <chrono>
#include <cstdio>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "squeeze/kernels.hpp"
#include "squeeze/sampling.hpp"
#include "squeeze/set_distance.hpp"

using namespace squeeze;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int check(bool ok, const char* what) {
  if (!ok) {
    std::fprintf(stderr, "MISMATCH: %s\n", what);
    return 1;
  }
  return 0;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  int failures = 0;
  CVector z{cplx(0.42, 0.1), cplx(-0.2, 0.33)};
  const auto shell = BoundarySet::sphere_shell(2, 0.35);
  const auto ball = ModelDomain::ball(2);

  std::printf("%-22s %12s %12s %12s %9s\n", "kernel", "samples", "serial ms", "parallel ms",
              "speedup");

  for (const std::uint64_t count : {100000ull, 1000000ull, 4000000ull}) {
    SetSampler sampler(shell, 2024);
    CVector proto(2);
    auto eval = [&](std::uint64_t i, CVector& w) -> std::optional<double> {
      sampler.point(i, w);
      return tanh_c_ball(z, w);
    };

    auto t0 = std::chrono::steady_clock::now();
    const auto serial = kernels::min_over_serial(count, proto, eval);
    const double ts = seconds_since(t0);

    kernels::set_parallel(true);
    t0 = std::chrono::steady_clock::now();
    const auto parallel = kernels::min_over(count, proto, eval);
    const double tp = seconds_since(t0);

    failures += check(serial.value == parallel.value && serial.index == parallel.index,
                      "shell argmin serial vs parallel");
    std::printf("%-22s %12llu %12.2f %12.2f %8.2fx\n", "shell argmin",
                static_cast<unsigned long long>(count), ts * 1e3, tp * 1e3, ts / tp);
  }

  for (const std::uint64_t count : {100000ull, 1000000ull}) {
    kernels::set_parallel(false);
    auto t0 = std::chrono::steady_clock::now();
    const double serial = grid_min_oracle(ball, z, shell, count, 99);
    const double ts = seconds_since(t0);

    kernels::set_parallel(true);
    t0 = std::chrono::steady_clock::now();
    const double parallel = grid_min_oracle(ball, z, shell, count, 99);
    const double tp = seconds_since(t0);

    failures += check(serial == parallel, "grid_min_oracle serial vs parallel");
    std::printf("%-22s %12llu %12.2f %12.2f %8.2fx\n", "grid_min_oracle",
                static_cast<unsigned long long>(count), ts * 1e3, tp * 1e3, ts / tp);
  }

  kernels::set_parallel(true);
  return failures == 0 ? 0 : 1;
}
