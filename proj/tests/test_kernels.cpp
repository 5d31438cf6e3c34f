#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>

#include "squeeze/kernels.hpp"

using namespace squeeze;

namespace {

// Coarse quantization forces plenty of ties; the lowest index must win.
std::optional<double> tied_eval(std::uint64_t i, int&) {
  if (i % 7 == 3) return std::nullopt;  // rejected samples
  return static_cast<double>((i * 2654435761u) % 17);
}

}  // namespace

TEST_CASE("serial and parallel reductions agree bit for bit") {
  for (const std::uint64_t count : {1ull, 100ull, 100003ull}) {
    const auto smin = kernels::min_over_serial(count, 0, tied_eval);
    const auto smax = kernels::max_over_serial(count, 0, tied_eval);
    kernels::set_parallel(true);
    const auto pmin = kernels::min_over(count, 0, tied_eval);
    const auto pmax = kernels::max_over(count, 0, tied_eval);
    CHECK(smin.value == pmin.value);
    CHECK(smin.index == pmin.index);
    CHECK(smax.value == pmax.value);
    CHECK(smax.index == pmax.index);
  }
}

TEST_CASE("ties resolve to the lowest index") {
  auto flat = [](std::uint64_t, int&) -> std::optional<double> { return 1.0; };
  const auto serial = kernels::min_over_serial(1000ull, 0, flat);
  kernels::set_parallel(true);
  const auto parallel = kernels::min_over(1000ull, 0, flat);
  CHECK(serial.index == 0);
  CHECK(parallel.index == 0);
}

TEST_CASE("all samples rejected yields an invalid best") {
  auto reject = [](std::uint64_t, int&) -> std::optional<double> { return std::nullopt; };
  CHECK_FALSE(kernels::min_over_serial(100ull, 0, reject).valid());
  kernels::set_parallel(true);
  CHECK_FALSE(kernels::min_over(100ull, 0, reject).valid());
}

TEST_CASE("parallel toggle routes to the serial reference") {
  kernels::set_parallel(false);
  const auto a = kernels::min_over(5000ull, 0, tied_eval);
  kernels::set_parallel(true);
  const auto b = kernels::min_over(5000ull, 0, tied_eval);
  CHECK(a.value == b.value);
  CHECK(a.index == b.index);
}
