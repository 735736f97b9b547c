#include "monorel/pairing.hpp"


namespace monorel {

Point::Point(Vec x, Vec y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() != y_.size()) throw DimensionMismatch("Point: x and y lengths differ");
}

Point Point::zero(std::size_t n) { return Point(Vec(n), Vec(n)); }

Point Point::from_coordinates(const Vec& coordinates) {
  if (coordinates.size() % 2 != 0) throw DimensionMismatch("Point::from_coordinates: odd length");
  const auto n = static_cast<std::ptrdiff_t>(coordinates.size() / 2);
  return Point(Vec(coordinates.begin(), coordinates.begin() + n), Vec(coordinates.begin() + n, coordinates.end()));
}

Vec Point::coordinates() const {
  Vec v = x_;
  v.insert(v.end(), y_.begin(), y_.end());
  return v;
}

bool Point::is_zero() const { return monorel::is_zero(x_) && monorel::is_zero(y_); }

Point Point::operator+(const Point& other) const { return Point(add(x_, other.x_), add(y_, other.y_)); }

Point Point::operator-(const Point& other) const { return Point(sub(x_, other.x_), sub(y_, other.y_)); }

Point Point::operator-() const { return scaled(-1); }

Point Point::scaled(const Scalar& t) const { return Point(monorel::scaled(x_, t), monorel::scaled(y_, t)); }

Scalar couple(const Point& z, const Point& w) {
  if (z.dim() != w.dim()) throw DimensionMismatch("couple: points live in different spaces");
  return dot(z.x(), w.y()) + dot(w.x(), z.y());
}

Scalar cval(const Point& z) { return dot(z.x(), z.y()); }

Mat pairing_matrix(std::size_t n) {
  Mat j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = 1;
  }
  return j;
}

Mat apply_pairing(const Mat& columns) {
  const std::size_t n = columns.rows() / 2;
  Mat out(columns.rows(), columns.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < columns.cols(); ++j) {
      out(i, j) = columns(n + i, j);
      out(n + i, j) = columns(i, j);
    }
  }
  return out;
}

Vec apply_pairing(const Vec& coordinates) {
  const std::size_t n = coordinates.size() / 2;
  Vec out(coordinates.size());
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = coordinates[n + i];
    out[n + i] = coordinates[i];
  }
  return out;
}

Point negate_dual(const Point& z) { return Point(z.x(), scaled(z.y(), -1)); }

}  // namespace monorel
