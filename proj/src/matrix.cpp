#include "monorel/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace monorel {

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("add: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("sub: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scaled(const Vec& a, const Scalar& t) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * t;
  return r;
}

bool is_zero(const Vec& a) {
  for (const auto& v : a) {
    if (v != 0) return false;
  }
  return true;
}

Vec primitive_integer(const Vec& a) {
  mpz_class den = 1;
  for (const auto& v : a) den = lcm(den, v.get_den());
  mpz_class g = 0;
  for (const auto& v : a) g = gcd(g, mpz_class(v.get_num() * (den / v.get_den())));
  if (g == 0) return a;
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = Scalar(mpz_class(a[i].get_num() * (den / a[i].get_den()) / g));
  }
  return r;
}

// ---------------------------------------------------------------------------

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("Mat: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
  Mat m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionMismatch("Mat::from_columns: column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vec Mat::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Mat::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Mat::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw DimensionMismatch("Mat::set_row: length");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator*(const Mat& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("Mat::operator*: inner dimensions");
  Mat r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) r(i, j) += a * other(k, j);
    }
  }
  return r;
}

Vec Mat::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("Mat::operator*(Vec): length");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar s = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j] != 0) s += (*this)(i, j) * v[j];
    }
    r[i] = s;
  }
  return r;
}

Mat Mat::operator+(const Mat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("Mat::operator+");
  Mat r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += other.data_[i];
  return r;
}

Mat Mat::operator-(const Mat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("Mat::operator-");
  Mat r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= other.data_[i];
  return r;
}

Mat Mat::scaled(const Scalar& t) const {
  Mat r = *this;
  for (auto& v : r.data_) v *= t;
  return r;
}

Mat Mat::select_columns(const std::vector<std::size_t>& index) const {
  Mat r(rows_, index.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < index.size(); ++j) r(i, j) = (*this)(i, index[j]);
  return r;
}

Mat Mat::hconcat(const Mat& right) const {
  if (rows_ != right.rows_) throw DimensionMismatch("Mat::hconcat: row counts");
  Mat r(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) r(i, cols_ + j) = right(i, j);
  }
  return r;
}

Mat Mat::vconcat(const Mat& below) const {
  if (cols_ != below.cols_) throw DimensionMismatch("Mat::vconcat: column counts");
  Mat r(rows_ + below.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(rows_ + i, j) = below(i, j);
  return r;
}

bool Mat::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const auto& v : data_) {
    if (v != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

RrefResult rref(Mat m) {
  RrefResult out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    }
    const Scalar inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c) == 0) continue;
      const Scalar f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(lead_row, j);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Mat nullspace(const Mat& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return Mat::from_columns(basis, m.cols());
}

std::optional<Vec> solve_in_range(const Mat& g, const Vec& b) {
  if (g.rows() != b.size()) throw DimensionMismatch("solve_in_range: rhs length");
  Mat aug(g.rows(), g.cols() + 1);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) aug(i, j) = g(i, j);
    aug(i, g.cols()) = b[i];
  }
  const RrefResult r = rref(std::move(aug));
  Vec u(g.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == g.cols()) return std::nullopt;
    u[r.pivots[i]] = r.reduced(i, g.cols());
  }
  return u;
}

Mat inverse(const Mat& m) {
  if (!m.is_square()) throw std::domain_error("inverse: matrix not square");
  const std::size_t n = m.rows();
  const RrefResult r = rref(m.hconcat(Mat::identity(n)));
  if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1)) {
    throw std::domain_error("inverse: matrix is singular");
  }
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------

namespace {

void swap_symmetric(Mat& a, Mat& p, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(i, k), a(j, k));
  for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a(k, i), a(k, j));
  for (std::size_t k = 0; k < p.rows(); ++k) std::swap(p(k, i), p(k, j));
}

// row_i += t row_j, col_i += t col_j
void add_symmetric(Mat& a, Mat& p, std::size_t i, std::size_t j, const Scalar& t) {
  for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) += t * a(j, k);
  for (std::size_t k = 0; k < a.rows(); ++k) a(k, i) += t * a(k, j);
  for (std::size_t k = 0; k < p.rows(); ++k) p(k, i) += t * p(k, j);
}

}  // namespace

Congruence congruence_diagonalize(const Mat& g) {
  if (!g.is_symmetric()) throw std::invalid_argument("congruence_diagonalize: matrix not symmetric");
  const std::size_t n = g.rows();
  Mat a = g;
  Mat p = Mat::identity(n);

  for (std::size_t s = 0; s < n; ++s) {
    std::size_t piv = n;
    for (std::size_t i = s; i < n; ++i) {
      if (a(i, i) != 0) {
        piv = i;
        break;
      }
    }
    if (piv == n) {
      // Zero diagonal on the trailing block: look for a hyperbolic pair.
      std::size_t hi = n, hj = n;
      for (std::size_t i = s; i < n && hi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            hi = i;
            hj = j;
            break;
          }
      if (hi == n) break;  // trailing block is zero
      add_symmetric(a, p, hi, hj, 1);
      piv = hi;
    }
    swap_symmetric(a, p, s, piv);

    const Scalar d = a(s, s);
    for (std::size_t r = s + 1; r < n; ++r) {
      if (a(r, s) == 0) continue;
      const Scalar f = -a(r, s) / d;
      add_symmetric(a, p, r, s, f);
    }
  }

  Congruence out;
  out.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = a(i, i);
  out.transform = std::move(p);
  return out;
}

Inertia inertia(const Mat& g) {
  const Congruence c = congruence_diagonalize(g);
  Inertia in;
  for (const auto& d : c.diagonal) {
    const int s = sign(d);
    if (s > 0) ++in.positive;
    else if (s < 0) ++in.negative;
    else ++in.zero;
  }
  return in;
}

}  // namespace monorel
