#pragma once

#include <cstddef>
#include <vector>

#include "monorel/matrix.hpp"

namespace monorel {

/// A point z = (x, y) of Z = R^n x R^n, where y plays the role of the dual
/// variable x*.
class Point {
 public:
  Point() = default;
  Point(Vec x, Vec y);

  static Point zero(std::size_t n);
  /// Splits a length-2n coordinate vector into (x, y).
  static Point from_coordinates(const Vec& coordinates);

  std::size_t dim() const { return x_.size(); }
  const Vec& x() const { return x_; }
  const Vec& y() const { return y_; }
  /// (x, y) concatenated, length 2n.
  Vec coordinates() const;

  bool is_zero() const;

  Point operator+(const Point& other) const;
  Point operator-(const Point& other) const;
  Point operator-() const;
  Point scaled(const Scalar& t) const;

  bool operator==(const Point& other) const = default;

 private:
  Vec x_;
  Vec y_;
};

/// z . w = <x_z, y_w> + <x_w, y_z>.
Scalar couple(const Point& z, const Point& w);

/// c(z) = <x, y>.
Scalar cval(const Point& z);

/// J = [[0, I], [I, 0]] of size 2n, so that z . w = z^T J w and c(z) = z^T J z / 2.
Mat pairing_matrix(std::size_t n);

/// Multiplies a 2n-row matrix (or its rows) by J without forming J: swaps the
/// x and y halves of every column.
Mat apply_pairing(const Mat& columns);
Vec apply_pairing(const Vec& coordinates);

/// The reflection (x, y) -> (x, -y). Maps monotone sets to sets on which c <= 0.
Point negate_dual(const Point& z);

}  // namespace monorel
