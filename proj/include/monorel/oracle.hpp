#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>

#include "monorel/doublecone.hpp"
#include "monorel/probe.hpp"
#include "monorel/subspace.hpp"

namespace monorel {

// Brute-force cross-checks. Verdicts on probe points are exact; only the
// magnitudes of suprema and infima are floating point.

/// Draws one point, or nullopt for an empty source. Called concurrently, so it
/// must not touch shared state.
using PointSource = std::function<std::optional<Point>(Rng&)>;

struct ProbeOutcome {
  bool passed = true;
  std::size_t probes = 0;
  std::optional<PointPair> witness;
};

/// Samples cfg.samples pairs and checks c(z - w) >= 0 exactly.
ProbeOutcome oracle_monotone_pairs(const PointSource& source, const ProbeConfig& cfg);

struct SupEstimate {
  double value = 0;  // +inf when divergence was detected
  bool diverged = false;
  std::size_t evaluations = 0;
};

/// Lower estimate of sup_{w in l} (z . w - c(w)) from grid sampling at three
/// radii, then the stationary point of a finite-difference quadratic fit.
SupEstimate oracle_fitz_sup(const Subspace& l, const Point& z, const ProbeConfig& cfg);

struct MaximalProbe {
  bool passed = true;  // no monotone extension found
  std::size_t probes = 0;
  std::optional<Point> witness;  // z outside l with l + R z monotone
};

/// Samples z outside l, from the grid and from small perturbations of points
/// of l, and reports the first one that spans a monotone extension.
MaximalProbe oracle_maximal_probe(const Subspace& l, const ProbeConfig& cfg);

/// c(z - w) >= 0 for every w in d, checked line by line: the minimizing
/// multiple of each generator, and large multiples of each skew basis vector.
bool oracle_cone_mrt(const DoubleCone& d, const Point& z);

class Infeasible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct PenotEstimate {
  double value = 0;
  double residual = 0;  // feasibility residual of the optimal combination
};

/// inf (sum_i |a_i| sqrt(c_i))^2 over z - sum_i a_i z_i in S. Throws
/// Infeasible when z is outside the linear hull, std::invalid_argument for a
/// cone with a negative generator.
PenotEstimate oracle_penot_cone(const DoubleCone& d, const Point& z, const ProbeConfig& cfg = {});

}  // namespace monorel
