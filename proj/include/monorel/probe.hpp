#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "monorel/pairing.hpp"

namespace monorel {

struct ProbeConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 10000;
  Scalar grid_radius = 4;
  double float_tolerance = 1e-9;
};

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// Generator for probe number `index`. Each probe owns its stream, so results
/// do not depend on how probes are split across threads.
inline Rng probe_rng(std::uint64_t seed, std::size_t index) {
  return Rng(splitmix64(seed + static_cast<std::uint64_t>(index)));
}

/// Uniform p/q with q in {1, ..., 4} and |p/q| <= radius.
Scalar grid_scalar(Rng& rng, const Scalar& radius);
Vec grid_vector(Rng& rng, std::size_t len, const Scalar& radius);
Point grid_point(Rng& rng, std::size_t n, const Scalar& radius);

template <class W>
struct Hit {
  std::size_t index;
  W witness;
};

// The kernels below share one contract: `probe(i)` is a pure function of i,
// and the hit with the lowest index wins.

namespace serial {

template <class W, class F>
std::optional<Hit<W>> first_hit(std::size_t count, F&& probe) {
  for (std::size_t i = 0; i < count; ++i) {
    if (std::optional<W> w = probe(i)) return Hit<W>{i, std::move(*w)};
  }
  return std::nullopt;
}

template <class R, class F>
std::vector<R> map(std::size_t count, F&& f) {
  std::vector<R> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(f(i));
  return out;
}

}  // namespace serial

namespace omp {

template <class W, class F>
std::optional<Hit<W>> first_hit(std::size_t count, F&& probe) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::optional<W> best_w;
  const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t s = 0; s < total; ++s) {
    const auto i = static_cast<std::size_t>(s);
    std::size_t seen;
#pragma omp atomic read
    seen = best;
    if (i > seen) continue;
    std::optional<W> w = probe(i);
    if (!w) continue;
#pragma omp critical(monorel_first_hit)
    {
      if (i < best) {
        best_w = std::move(w);
#pragma omp atomic write
        best = i;
      }
    }
  }
  if (!best_w) return std::nullopt;
  return Hit<W>{best, std::move(*best_w)};
}

/// R must not be bool: std::vector<bool> packs bits and cannot be written
/// concurrently.
template <class R, class F>
std::vector<R> map(std::size_t count, F&& f) {
  std::vector<R> out(count);
  const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t s = 0; s < total; ++s) out[static_cast<std::size_t>(s)] = f(static_cast<std::size_t>(s));
  return out;
}

}  // namespace omp

}  // namespace monorel
