#pragma once

#include <cstddef>
#include <initializer_list>
#include <random>
#include <vector>

#include "monorel/linsub.hpp"
#include "monorel/probe.hpp"
#include "monorel/subspace.hpp"

namespace monorel::test {

inline Point pt(std::initializer_list<Scalar> x, std::initializer_list<Scalar> y) { return Point(Vec(x), Vec(y)); }

inline Subspace span(std::size_t n, const std::vector<Point>& v) { return Subspace::span(n, v); }

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Scalar frac(long p, long q) {
  Scalar s(p, q);
  s.canonicalize();
  return s;
}

inline Mat random_symmetric(Rng& rng, std::size_t k, long bound) {
  Mat g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) g(i, j) = g(j, i) = frac(uniform(rng, -bound, bound), uniform(rng, 1, 3));
  return g;
}

/// Random point of l with grid coefficients.
inline Point sample_in(Rng& rng, const Subspace& l, const Scalar& radius = 4) {
  return l.point(grid_vector(rng, l.dim(), radius));
}

/// max of z . w - c(w) over w = t * b with t on the grid k / den, |t| <= bound.
/// Exact, and a lower bound for the supremum along the line.
inline Scalar line_sup(const Point& z, const Point& b, long den, long bound) {
  Scalar best = 0;
  for (long k = -bound * den; k <= bound * den; ++k) {
    const Scalar t = frac(k, den);
    const Point w = b.scaled(t);
    const Scalar v = couple(z, w) - cval(w);
    if (v > best) best = v;
  }
  return best;
}

/// c(z - w) >= 0 for `samples` random grid points w of l.
inline bool pairwise_related(Rng& rng, const Subspace& l, const Point& z, std::size_t samples) {
  for (std::size_t i = 0; i < samples; ++i) {
    if (cval(z - sample_in(rng, l)) < 0) return false;
  }
  return true;
}

}  // namespace monorel::test
