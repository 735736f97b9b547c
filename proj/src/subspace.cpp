#include "monorel/subspace.hpp"

namespace monorel {

Subspace Subspace::row_span(std::size_t n, const Mat& rows) {
  if (rows.cols() != 2 * n) throw DimensionMismatch("Subspace::row_span: expected 2n columns");
  RrefResult r = rref(rows);
  const std::size_t k = r.pivots.size();
  Mat kept(k, 2 * n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) kept(i, j) = r.reduced(i, j);
  return Subspace(n, std::move(kept), std::move(r.pivots));
}

Subspace Subspace::column_span(std::size_t n, const Mat& columns) { return row_span(n, columns.transpose()); }

Subspace Subspace::span(std::size_t n, const std::vector<Point>& vectors) {
  Mat rows(vectors.size(), 2 * n);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].dim() != n) throw DimensionMismatch("Subspace::span: point dimension");
    rows.set_row(i, vectors[i].coordinates());
  }
  return row_span(n, rows);
}

Subspace Subspace::zero(std::size_t n) { return Subspace(n, Mat(0, 2 * n), {}); }

Subspace Subspace::whole(std::size_t n) { return row_span(n, Mat::identity(2 * n)); }

std::vector<Point> Subspace::basis_points() const {
  std::vector<Point> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(Point::from_coordinates(rows_.row(i)));
  return out;
}

Point Subspace::point(const Vec& coeffs) const {
  if (coeffs.size() != dim()) throw DimensionMismatch("Subspace::point: coefficient count");
  Vec v(2 * n_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < 2 * n_; ++j) v[j] += coeffs[i] * rows_(i, j);
  }
  return Point::from_coordinates(v);
}

std::optional<Vec> Subspace::coordinates_of(const Point& z) const {
  if (z.dim() != n_) throw DimensionMismatch("Subspace::coordinates_of: point dimension");
  const Vec v = z.coordinates();
  Vec coeffs(dim());
  for (std::size_t i = 0; i < dim(); ++i) coeffs[i] = v[pivots_[i]];
  // The pivot entries fix the coefficients; every coordinate must then match.
  for (std::size_t j = 0; j < 2 * n_; ++j) {
    Scalar s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (coeffs[i] != 0 && rows_(i, j) != 0) s += coeffs[i] * rows_(i, j);
    }
    if (s != v[j]) return std::nullopt;
  }
  return coeffs;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.n_ != n_) throw DimensionMismatch("Subspace::contains: dimension");
  for (const auto& p : other.basis_points()) {
    if (!contains(p)) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.n_ != n_) throw DimensionMismatch("Subspace::sum: dimension");
  return row_span(n_, rows_.vconcat(other.rows_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.n_ != n_) throw DimensionMismatch("Subspace::intersect: dimension");
  return perp(perp(*this).sum(perp(other)));
}

Subspace Subspace::with(const Point& z) const { return sum(span(n_, {z})); }

Subspace Subspace::negated_dual() const {
  Mat r = rows_;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = n_; j < 2 * n_; ++j) r(i, j) = -r(i, j);
  return row_span(n_, r);
}

Subspace perp(const Subspace& a) {
  // w is in a^perp iff (row_i J) w = 0 for every canonical row.
  const Mat constraints = apply_pairing(a.rows().transpose()).transpose();
  return Subspace::column_span(a.n(), nullspace(constraints));
}

}  // namespace monorel
