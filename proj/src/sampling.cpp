#include "monorel/sampling.hpp"

namespace monorel {

namespace {

long small_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Mat random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_int(rng, -bound, bound);
  return m;
}

Subspace graph(const Mat& m) {
  const std::size_t n = m.rows();
  Mat cols(2 * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    cols(j, j) = 1;
    for (std::size_t i = 0; i < n; ++i) cols(n + i, j) = m(i, j);
  }
  return Subspace::column_span(n, cols);
}

}  // namespace

Mat random_unimodular(Rng& rng, std::size_t n) {
  Mat p = Mat::identity(n);
  if (n == 0) return p;
  for (std::size_t step = 0; step < 2 * n; ++step) {
    const auto i = static_cast<std::size_t>(small_int(rng, 0, static_cast<long>(n) - 1));
    const auto j = static_cast<std::size_t>(small_int(rng, 0, static_cast<long>(n) - 1));
    if (i == j) {
      if (small_int(rng, 0, 1) == 1)
        for (std::size_t c = 0; c < n; ++c) p(i, c) = -p(i, c);
      continue;
    }
    long t = small_int(rng, -2, 2);
    if (t == 0) t = 1;
    for (std::size_t c = 0; c < n; ++c) p(i, c) += t * p(j, c);
  }
  return p;
}

Subspace random_c_preserving_image(Rng& rng, const Subspace& l) {
  const std::size_t n = l.n();
  std::vector<bool> swap(n);
  for (std::size_t i = 0; i < n; ++i) swap[i] = small_int(rng, 0, 2) == 0;
  const Mat p = random_unimodular(rng, n);
  const Mat p_inv_t = inverse(p).transpose();

  std::vector<Point> images;
  for (const auto& z : l.basis_points()) {
    Vec x = z.x(), y = z.y();
    for (std::size_t i = 0; i < n; ++i) {
      if (swap[i]) std::swap(x[i], y[i]);
    }
    images.emplace_back(p * x, p_inv_t * y);
  }
  return Subspace::span(n, images);
}

Subspace random_maximal_monotone(Rng& rng, std::size_t n) {
  const auto r = static_cast<std::size_t>(small_int(rng, 0, static_cast<long>(n)));
  const Mat a = random_int_matrix(rng, r, n, 2);
  const Mat c = random_int_matrix(rng, n, n, 2);
  return random_c_preserving_image(rng, graph(a.transpose() * a + c - c.transpose()));
}

Subspace random_subspace_of(Rng& rng, const Subspace& l, std::size_t k) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < k; ++i) {
    Vec coeffs(l.dim());
    for (auto& e : coeffs) e = small_int(rng, -2, 2);
    pts.push_back(l.point(coeffs));
  }
  return Subspace::span(l.n(), pts);
}

Subspace random_monotone(Rng& rng, std::size_t n) {
  const Subspace m = random_maximal_monotone(rng, n);
  return random_subspace_of(rng, m, static_cast<std::size_t>(small_int(rng, 0, static_cast<long>(n))));
}

Subspace random_lagrangian(Rng& rng, std::size_t n) {
  const Mat c = random_int_matrix(rng, n, n, 2);
  return random_c_preserving_image(rng, graph(c - c.transpose()));
}

Subspace random_skew(Rng& rng, std::size_t n) {
  const Subspace s = random_lagrangian(rng, n);
  return random_subspace_of(rng, s, static_cast<std::size_t>(small_int(rng, 0, static_cast<long>(n))));
}

DoubleCone random_monotone_cone(Rng& rng, std::size_t n, std::size_t max_generators) {
  const auto m = static_cast<std::size_t>(small_int(rng, 1, static_cast<long>(max_generators)));
  std::vector<Point> gens;

  if (small_int(rng, 0, 1) == 0) {
    const Subspace l = random_maximal_monotone(rng, n);
    const Subspace skew_l = skew_part(l);
    const Subspace s = random_subspace_of(rng, skew_l, static_cast<std::size_t>(small_int(rng, 0, static_cast<long>(skew_l.dim()))));
    for (int tries = 0; tries < 50 && gens.size() < m; ++tries) {
      Vec coeffs(l.dim());
      for (auto& e : coeffs) e = small_int(rng, -2, 2);
      Point z = l.point(coeffs);
      if (cval(z) > 0) gens.push_back(std::move(z));
    }
    if (!gens.empty()) return DoubleCone(s, gens);
  }

  std::vector<Scalar> cs;
  for (int tries = 0; tries < 400 && gens.size() < m; ++tries) {
    Point z = grid_point(rng, n, 2);
    const Scalar c = cval(z);
    if (c <= 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < gens.size() && ok; ++i) {
      const Scalar p = couple(z, gens[i]);
      ok = p * p <= 4 * c * cs[i];
    }
    if (!ok) continue;
    gens.push_back(std::move(z));
    cs.push_back(c);
  }
  if (gens.empty()) {
    Vec e(n);
    e[0] = 1;
    gens.emplace_back(e, e);
  }
  return DoubleCone(Subspace::zero(n), gens);
}

}  // namespace monorel
