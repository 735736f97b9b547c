#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monorel/pairing.hpp"

namespace monorel {

enum class Certainty { Exact, Probed };

std::string to_string(Certainty c);

/// One classification flag. `rule` names the criterion that decided it.
struct Verdict {
  bool value = false;
  Certainty tier = Certainty::Exact;
  std::size_t probes = 0;
  std::string rule;

  static Verdict exact(bool value, std::string rule) { return {value, Certainty::Exact, 0, std::move(rule)}; }
  static Verdict probed(bool value, std::size_t probes, std::string rule) {
    return {value, Certainty::Probed, probes, std::move(rule)};
  }
};

using PointPair = std::pair<Point, Point>;

struct ClassificationReport {
  std::size_t n = 0;
  std::size_t dim = 0;  // linear hull dimension

  Verdict monotone;
  Verdict skew;
  Verdict representable;
  Verdict ni;
  Verdict unique;
  Verdict dual_representable;
  Verdict maximal;

  // Witnesses. Each is present only when the matching flag is false and a
  // certificate was found.
  std::optional<Point> non_monotone;           // z in T with c(z) < 0
  std::optional<PointPair> non_monotone_pair;  // z, w in T with c(z - w) < 0
  std::optional<Point> non_ni;                 // phi(z) < c(z)
  std::optional<PointPair> non_unique;         // z, w in T+ with c(z - w) < 0
  std::optional<Point> non_maximal;            // z in T+ outside T
  std::optional<Point> non_representable;      // psi(z) = c(z), z outside T

  // Double-cones only: monotonicity of the linear hull.
  std::optional<Verdict> hull_monotone;
  std::optional<Point> hull_witness;
  std::optional<Vec> hull_coefficients;  // in generator order, skew basis last

  std::vector<std::string> notes;

  /// The implications every report must satisfy: maximal iff representable
  /// and NI, NI implies unique, maximal iff dual-representable and unique,
  /// skew implies monotone.
  bool consistent() const;
};

}  // namespace monorel
