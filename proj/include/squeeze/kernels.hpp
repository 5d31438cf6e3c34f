#pragma once

// Indexed min/max reductions over large sample ranges.
//
// Each kernel exists in a serial and an OpenMP flavor. Reductions combine
// (value, index) pairs and break ties toward the lower index, so the
// parallel kernels return bit-identical results to the serial reference for
// any schedule or thread count. The serial versions are kept both as the
// fallback and as the reference the tests and the benchmark compare against.
//
// The callable receives (index, scratch&) and returns std::optional<double>;
// std::nullopt marks a rejected sample. `scratch` is copy-constructed from
// the prototype once per thread so evaluators can reuse buffers without
// allocating per sample.

#include <atomic>
#include <cstdint>
#include <optional>
#include <utility>

namespace squeeze::kernels {

inline std::atomic<bool>& parallel_flag() {
  static std::atomic<bool> enabled{true};
  return enabled;
}

inline bool parallel_enabled() { return parallel_flag().load(std::memory_order_relaxed); }
inline void set_parallel(bool on) { parallel_flag().store(on, std::memory_order_relaxed); }

constexpr std::uint64_t kNoIndex = ~0ull;

struct Best {
  double value = 0.0;
  std::uint64_t index = kNoIndex;
  bool valid() const { return index != kNoIndex; }
};

namespace detail {

inline bool improves_min(const Best& cand, const Best& cur) {
  if (!cur.valid()) return cand.valid();
  if (cand.value != cur.value) return cand.value < cur.value;
  return cand.index < cur.index;
}

inline bool improves_max(const Best& cand, const Best& cur) {
  if (!cur.valid()) return cand.valid();
  if (cand.value != cur.value) return cand.value > cur.value;
  return cand.index < cur.index;
}

template <bool Min, class S, class F>
Best reduce_serial(std::uint64_t count, const S& proto, F&& eval) {
  S scratch(proto);
  Best best;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (auto v = eval(i, scratch)) {
      const Best cand{*v, i};
      if (Min ? improves_min(cand, best) : improves_max(cand, best)) best = cand;
    }
  }
  return best;
}

template <bool Min, class S, class F>
Best reduce_parallel(std::uint64_t count, const S& proto, F&& eval) {
#ifdef _OPENMP
  Best best;
#pragma omp parallel
  {
    S scratch(proto);
    Best local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      const auto idx = static_cast<std::uint64_t>(i);
      if (auto v = eval(idx, scratch)) {
        const Best cand{*v, idx};
        if (Min ? improves_min(cand, local) : improves_max(cand, local)) local = cand;
      }
    }
#pragma omp critical(squeeze_kernels_reduce)
    {
      if (Min ? improves_min(local, best) : improves_max(local, best)) best = local;
    }
  }
  return best;
#else
  return reduce_serial<Min>(count, proto, std::forward<F>(eval));
#endif
}

}  // namespace detail

template <class S, class F>
Best min_over_serial(std::uint64_t count, const S& proto, F&& eval) {
  return detail::reduce_serial<true>(count, proto, std::forward<F>(eval));
}

template <class S, class F>
Best max_over_serial(std::uint64_t count, const S& proto, F&& eval) {
  return detail::reduce_serial<false>(count, proto, std::forward<F>(eval));
}

template <class S, class F>
Best min_over(std::uint64_t count, const S& proto, F&& eval) {
  if (parallel_enabled())
    return detail::reduce_parallel<true>(count, proto, std::forward<F>(eval));
  return detail::reduce_serial<true>(count, proto, std::forward<F>(eval));
}

template <class S, class F>
Best max_over(std::uint64_t count, const S& proto, F&& eval) {
  if (parallel_enabled())
    return detail::reduce_parallel<false>(count, proto, std::forward<F>(eval));
  return detail::reduce_serial<false>(count, proto, std::forward<F>(eval));
}

}  // namespace squeeze::kernels
