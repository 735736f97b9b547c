#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "monorel/linsub.hpp"
#include "monorel/probe.hpp"

namespace monorel {

class EmptyPositivePart : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Generator {
  Point z;
  Scalar c;  // cval(z)
};

/// D = S u (union of the lines R z_i) with S a skew subspace.
///
/// Generators are stored projectively normalized (first nonzero coordinate
/// equal to 1) and deduplicated. A generator with c(z) = 0 is rejected since
/// such a line belongs in the skew block; generators with c(z) < 0 are kept
/// and make the cone non-monotone.
class DoubleCone {
 public:
  DoubleCone() = default;
  /// Throws std::invalid_argument for a non-skew S, a zero generator or a
  /// generator with c(z) = 0; DimensionMismatch on size errors.
  DoubleCone(Subspace skew, const std::vector<Point>& generators);

  std::size_t n() const { return skew_.n(); }
  const Subspace& skew() const { return skew_; }
  const std::vector<Generator>& generators() const { return gens_; }
  bool has_negative_part() const;

  /// Membership in the point set S u R z_1 u ... u R z_m.
  bool contains(const Point& z) const;

  /// The set is itself a subspace: no generators, or one generator and S = {0}.
  bool is_subspace_shaped() const;

 private:
  Subspace skew_;
  std::vector<Generator> gens_;
};

struct ConeMonotoneCheck {
  bool monotone = true;
  std::optional<PointPair> witness;  // c(first - second) < 0
};

ConeMonotoneCheck dc_is_monotone(const DoubleCone& d);

/// max_i (z . z_i)^2 / (4 c_i) on the pairing complement of S, +inf off it.
/// A cone with a negative generator has phi identically +inf.
FitzValue dc_fitz_eval(const DoubleCone& d, const Point& z);

/// Whether c(z - w) >= 0 for every w in D.
bool dc_in_plus(const DoubleCone& d, const Point& z);

/// Square of the crown support function, 4 phi(z). Throws EmptyPositivePart
/// when there are no generators.
FitzValue dc_sigma_sq(const DoubleCone& d, const Point& z);

Subspace dc_lin_hull(const DoubleCone& d);

ClassificationReport dc_classify(const DoubleCone& d, const ProbeConfig& cfg = {});

}  // namespace monorel
