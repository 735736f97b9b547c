#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "monorel/report.hpp"
#include "monorel/subspace.hpp"

namespace monorel {

/// A value in R u {+inf}.
class FitzValue {
 public:
  static FitzValue finite(Scalar v) { return FitzValue(std::move(v)); }
  static FitzValue infinity() { return FitzValue(); }

  bool is_finite() const { return value_.has_value(); }
  /// Precondition: is_finite().
  const Scalar& value() const { return *value_; }

  /// Exact comparison against a finite number; +inf is above everything.
  bool at_most(const Scalar& bound) const { return is_finite() && *value_ <= bound; }

  bool operator==(const FitzValue&) const = default;

 private:
  FitzValue() = default;
  explicit FitzValue(Scalar v) : value_(std::move(v)) {}
  std::optional<Scalar> value_;
};

/// "p/q" or "inf".
std::string to_string(const FitzValue& v);

class NotMonotone : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// g = B^T J B / 2, so that c(B u) = u^T g u.
Mat gram(const Subspace& l);

struct MonotoneCheck {
  bool monotone = true;
  std::optional<Point> witness;  // c(witness) < 0
};

MonotoneCheck is_monotone(const Subspace& l);
bool is_skew(const Subspace& l);

/// Kernel of the gram form mapped back into l. Throws NotMonotone.
Subspace skew_part(const Subspace& l);

/// Some u with u^T form u < 0, or nullopt when the form is positive
/// semidefinite. Small integer vectors are tried first (by L1 norm, first
/// nonzero entry positive), so witnesses come out readable.
std::optional<Vec> negative_direction(const Mat& form);

/// Visits every integer vector of length k with the given L1 norm whose first
/// nonzero entry is positive. Stops early and returns true once `visit` does.
bool for_each_l1_vector(std::size_t k, long norm, const std::function<bool(const Vec&)>& visit);

/// Fitzpatrick function of a monotone subspace in prepared quadratic form:
/// phi(z) = z^T F z on its domain, +inf elsewhere.
class FitzpatrickForm {
 public:
  /// Throws NotMonotone.
  explicit FitzpatrickForm(const Subspace& l);

  const Subspace& subspace() const { return l_; }
  const Subspace& skew() const { return skew_; }
  /// dom phi, which is the pairing complement of the skew part.
  const Subspace& domain() const { return domain_; }
  const Mat& phi_matrix() const { return f_; }

  bool in_domain(const Point& z) const;
  FitzValue value(const Point& z) const;
  /// phi(z) - c(z), or nullopt off the domain.
  std::optional<Scalar> excess(const Point& z) const;
  /// phi <= c at z, i.e. z is monotonically related to every point of l.
  bool in_plus(const Point& z) const;
  /// (phi - c) written in the canonical basis of the domain.
  Mat excess_on_domain() const;

 private:
  Subspace l_;
  Subspace skew_;
  Subspace domain_;
  Mat skew_dual_;  // rows s^T J for the skew basis
  Mat f_;
};

/// phi_l(z) by solving g u = b / 2 with b = B^T J z. Non-monotone l gives +inf.
FitzValue fitz_eval(const Subspace& l, const Point& z);
/// Throws NotMonotone.
Subspace fitz_dom(const Subspace& l);
/// c(z) on l, +inf off it. Throws NotMonotone.
FitzValue penot_eval(const Subspace& l, const Point& z);
/// Throws NotMonotone.
bool in_plus(const Subspace& l, const Point& z);

ClassificationReport classify(const Subspace& l);

/// A maximal monotone subspace containing l. Throws NotMonotone.
Subspace extend_maximal(const Subspace& l);

/// {(x, x* + A^T y*) : (x, x*) in m, (Ax, y*) in nn} for m over R^n, nn over
/// R^k and a of shape k x n.
Subspace sum_composition(const Subspace& m, const Subspace& nn, const Mat& a);

}  // namespace monorel
