#pragma once

#include <cstddef>

#include "monorel/doublecone.hpp"
#include "monorel/probe.hpp"
#include "monorel/subspace.hpp"

namespace monorel {

// Random families used by the property tests, the acceptance suite, the
// benchmarks and the CLI oracle. Entries are small integers or grid rationals.

/// Invertible n x n matrix built from random elementary row operations.
Mat random_unimodular(Rng& rng, std::size_t n);

/// Applies a random map preserving c: swaps of x_i and y_i followed by
/// (x, y) -> (P x, P^-T y).
Subspace random_c_preserving_image(Rng& rng, const Subspace& l);

/// Graph of x -> M x with M + M^T positive semidefinite, moved by a random
/// c-preserving map. Always maximal monotone of dimension n.
Subspace random_maximal_monotone(Rng& rng, std::size_t n);

/// Span of `k` random combinations of the basis of l.
Subspace random_subspace_of(Rng& rng, const Subspace& l, std::size_t k);

/// Monotone subspace of random dimension in [0, n].
Subspace random_monotone(Rng& rng, std::size_t n);

/// Skew subspace of dimension n, so equal to its pairing complement.
Subspace random_lagrangian(Rng& rng, std::size_t n);

/// Skew subspace of random dimension in [0, n].
Subspace random_skew(Rng& rng, std::size_t n);

/// Monotone double-cone with at most max_generators generator lines. Half of
/// the draws take lines inside a monotone subspace with S inside its skew
/// part; the rest grow a generator set by rejection sampling with S = {0}.
DoubleCone random_monotone_cone(Rng& rng, std::size_t n, std::size_t max_generators);

}  // namespace monorel
