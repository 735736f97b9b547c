#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "monorel/rational.hpp"

namespace monorel {

// ---------------------------------------------------------------------------
// Vector helpers
// ---------------------------------------------------------------------------

Scalar dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, const Scalar& t);
bool is_zero(const Vec& a);

/// Divides by the gcd of numerators after clearing denominators, so the
/// result is a primitive integer vector pointing the same way.
Vec primitive_integer(const Vec& a);

// ---------------------------------------------------------------------------
// Dense row-major rational matrix
// ---------------------------------------------------------------------------

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_columns(const std::vector<Vec>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);

  Mat transpose() const;
  Mat operator*(const Mat& other) const;
  Vec operator*(const Vec& v) const;
  Mat operator+(const Mat& other) const;
  Mat operator-(const Mat& other) const;
  Mat scaled(const Scalar& t) const;

  /// Columns `index` of this matrix, in the given order.
  Mat select_columns(const std::vector<std::size_t>& index) const;
  /// Horizontal concatenation; row counts must agree.
  Mat hconcat(const Mat& right) const;
  /// Vertical concatenation; column counts must agree.
  Mat vconcat(const Mat& below) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  bool operator==(const Mat& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// ---------------------------------------------------------------------------
// Exact elimination
// ---------------------------------------------------------------------------

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Zero rows are kept at the bottom, so
/// `reduced` has the same shape as the input.
RrefResult rref(Mat m);

std::size_t rank(const Mat& m);

/// Columns form a basis of {v : m v = 0}, one column per free variable,
/// with a 1 in that free variable's position.
Mat nullspace(const Mat& m);

/// Some u with g u = b, or nullopt when b is outside the range of g.
/// Free variables are set to zero.
std::optional<Vec> solve_in_range(const Mat& g, const Vec& b);

/// Inverse of a nonsingular square matrix; throws std::domain_error otherwise.
Mat inverse(const Mat& m);

// ---------------------------------------------------------------------------
// Quadratic-form inertia
// ---------------------------------------------------------------------------

struct Inertia {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;

  std::size_t dimension() const { return positive + zero + negative; }
  auto operator<=>(const Inertia&) const = default;
};

/// P and d with P^T g P = diag(d), P invertible.
struct Congruence {
  Mat transform;
  Vec diagonal;
};

/// Symmetric Gaussian elimination over the rationals. A nonzero diagonal
/// entry is used as pivot when one remains; otherwise a hyperbolic pair
/// (i, j) with g_ij != 0 is split by adding row/column j to row/column i,
/// which puts 2 g_ij on the diagonal.
Congruence congruence_diagonalize(const Mat& g);

Inertia inertia(const Mat& g);

}  // namespace monorel
