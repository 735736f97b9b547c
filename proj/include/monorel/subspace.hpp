#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "monorel/matrix.hpp"
#include "monorel/pairing.hpp"

namespace monorel {

/// Linear subspace of Z = R^n x R^n.
///
/// Stored canonically as the RREF of the matrix whose rows span it, so two
/// Subspace values are equal exactly when they are the same set. Row i of
/// `rows()` has a leading 1 in coordinate `pivots()[i]`.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(std::size_t n, const std::vector<Point>& vectors);
  /// Span of the columns of a 2n-row matrix.
  static Subspace column_span(std::size_t n, const Mat& columns);
  /// Span of the rows of a matrix with 2n columns.
  static Subspace row_span(std::size_t n, const Mat& rows);
  static Subspace zero(std::size_t n);
  static Subspace whole(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t ambient_dim() const { return 2 * n_; }
  std::size_t dim() const { return rows_.rows(); }

  const Mat& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Canonical basis as the columns of a 2n x dim matrix.
  Mat basis() const { return rows_.transpose(); }
  std::vector<Point> basis_points() const;

  /// sum_i coeffs[i] * (basis vector i).
  Point point(const Vec& coeffs) const;
  /// Coefficients of z in the canonical basis, or nullopt if z is not in the subspace.
  std::optional<Vec> coordinates_of(const Point& z) const;

  bool contains(const Point& z) const { return coordinates_of(z).has_value(); }
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace with(const Point& z) const;
  /// {(x, -y) : (x, y) in this}.
  Subspace negated_dual() const;

  bool operator==(const Subspace& other) const { return n_ == other.n_ && rows_ == other.rows_; }

 private:
  Subspace(std::size_t n, Mat rows, std::vector<std::size_t> pivots)
      : n_(n), rows_(std::move(rows)), pivots_(std::move(pivots)) {}

  std::size_t n_ = 0;
  Mat rows_;
  std::vector<std::size_t> pivots_;
};

/// A^perp = {w : z . w = 0 for all z in A}. Involutive, and
/// dim a + dim perp(a) = 2n since J is nondegenerate.
Subspace perp(const Subspace& a);

}  // namespace monorel
