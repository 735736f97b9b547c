#include "monorel/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace monorel {

namespace {

Eigen::MatrixXd to_eigen(const Mat& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

Eigen::VectorXd to_eigen(const Vec& v) {
  Eigen::VectorXd out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out(i) = to_double(v[i]);
  return out;
}

// z . w - c(w) for w = B t, evaluated on coordinates.
class SupObjective {
 public:
  SupObjective(const Subspace& l, const Point& z) : n_(l.n()), b_(to_eigen(l.basis())), z_(to_eigen(z.coordinates())) {}

  double operator()(const Eigen::VectorXd& t) {
    ++evaluations;
    const Eigen::VectorXd w = b_ * t;
    const auto zx = z_.head(n_), zy = z_.tail(n_);
    const auto wx = w.head(n_), wy = w.tail(n_);
    return zx.dot(wy) + wx.dot(zy) - wx.dot(wy);
  }

  std::size_t evaluations = 0;

 private:
  Eigen::Index n_;
  Eigen::MatrixXd b_;
  Eigen::VectorXd z_;
};

}  // namespace

ProbeOutcome oracle_monotone_pairs(const PointSource& source, const ProbeConfig& cfg) {
  const auto hit = omp::first_hit<PointPair>(cfg.samples, [&](std::size_t i) -> std::optional<PointPair> {
    Rng rng = probe_rng(cfg.seed, i);
    auto z = source(rng);
    auto w = source(rng);
    if (!z || !w) return std::nullopt;
    if (cval(*z - *w) < 0) return PointPair{*z, *w};
    return std::nullopt;
  });
  if (hit) return {false, hit->index + 1, hit->witness};
  return {true, cfg.samples, std::nullopt};
}

SupEstimate oracle_fitz_sup(const Subspace& l, const Point& z, const ProbeConfig& cfg) {
  if (z.dim() != l.n()) throw DimensionMismatch("oracle_fitz_sup: point dimension");
  const auto k = static_cast<Eigen::Index>(l.dim());
  SupObjective f(l, z);
  SupEstimate out;

  Eigen::VectorXd best = Eigen::VectorXd::Zero(k);
  double fbest = f(best);
  if (k > 0) {
    const double r0 = to_double(cfg.grid_radius);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      Rng rng = probe_rng(cfg.seed, i);
      const double r = r0 * static_cast<double>(1u << (i % 3));
      std::uniform_real_distribution<double> u(-r, r);
      Eigen::VectorXd t(k);
      for (Eigen::Index j = 0; j < k; ++j) t(j) = u(rng);
      const double ft = f(t);
      if (ft > fbest) {
        fbest = ft;
        best = t;
      }
    }

    // The objective is quadratic, so central differences recover its
    // gradient and Hessian at the origin up to rounding.
    const double h = 1.0;
    const double f0 = f(Eigen::VectorXd::Zero(k));
    Eigen::VectorXd grad(k);
    Eigen::MatrixXd hess(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      const Eigen::VectorXd ei = Eigen::VectorXd::Unit(k, i) * h;
      const double fp = f(ei), fm = f(-ei);
      grad(i) = (fp - fm) / (2 * h);
      hess(i, i) = (fp + fm - 2 * f0) / (h * h);
    }
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = i + 1; j < k; ++j) {
        const Eigen::VectorXd ei = Eigen::VectorXd::Unit(k, i) * h, ej = Eigen::VectorXd::Unit(k, j) * h;
        hess(i, j) = hess(j, i) = (f(ei + ej) - f(ei - ej) - f(ej - ei) + f(-ei - ej)) / (4 * h * h);
      }
    }

    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(hess);
    const Eigen::VectorXd& lam = eig.eigenvalues();
    const double scale = 1 + lam.cwiseAbs().maxCoeff();
    const double gscale = 1 + grad.norm();
    Eigen::VectorXd step = Eigen::VectorXd::Zero(k);
    for (Eigen::Index i = 0; i < k; ++i) {
      const Eigen::VectorXd v = eig.eigenvectors().col(i);
      const double gv = grad.dot(v);
      if (lam(i) > 1e-9 * scale) {
        out.diverged = true;
      } else if (lam(i) >= -1e-9 * scale) {
        if (std::abs(gv) > 1e-9 * gscale) out.diverged = true;
      } else {
        step -= (gv / lam(i)) * v;
      }
    }
    if (!out.diverged) {
      const double fs = f(step);
      if (fs > fbest) fbest = fs;
    }
  }

  out.evaluations = f.evaluations;
  out.value = out.diverged ? std::numeric_limits<double>::infinity() : fbest;
  return out;
}

MaximalProbe oracle_maximal_probe(const Subspace& l, const ProbeConfig& cfg) {
  const std::size_t n = l.n();
  const auto hit = omp::first_hit<Point>(cfg.samples, [&](std::size_t i) -> std::optional<Point> {
    Rng rng = probe_rng(cfg.seed, i);
    Point z = grid_point(rng, n, cfg.grid_radius);
    if (i % 2 == 1 && l.dim() > 0) z = l.point(grid_vector(rng, l.dim(), cfg.grid_radius)) + grid_point(rng, n, 1);
    if (l.contains(z)) return std::nullopt;
    if (inertia(gram(l.with(z))).negative != 0) return std::nullopt;
    return z;
  });
  if (hit) return {false, hit->index + 1, hit->witness};
  return {true, cfg.samples, std::nullopt};
}

bool oracle_cone_mrt(const DoubleCone& d, const Point& z) {
  if (cval(z) < 0) return false;
  for (const auto& g : d.generators()) {
    if (g.c <= 0) return false;
    const Scalar t = couple(z, g.z) / (2 * g.c);
    if (cval(z - g.z.scaled(t)) < 0) return false;
  }
  for (const auto& s : d.skew().basis_points()) {
    Scalar big = 1;
    for (int e = 0; e < 128; ++e, big *= 2) {
      if (cval(z - s.scaled(big)) < 0 || cval(z + s.scaled(big)) < 0) return false;
    }
  }
  return true;
}

PenotEstimate oracle_penot_cone(const DoubleCone& d, const Point& z, const ProbeConfig& cfg) {
  if (d.has_negative_part()) throw std::invalid_argument("oracle_penot_cone: cone has a negative generator");
  if (!dc_lin_hull(d).contains(z)) throw Infeasible("oracle_penot_cone: point outside the linear hull");

  const auto& gens = d.generators();
  const std::size_t m = gens.size();
  if (m == 0) return {0.0, 0.0};

  // Rows of k annihilate S, so z - G a in S reads k G a = k z.
  const Mat k = nullspace(d.skew().rows()).transpose();
  Mat g(2 * d.n(), m);
  for (std::size_t j = 0; j < m; ++j) {
    const Vec c = gens[j].z.coordinates();
    for (std::size_t i = 0; i < c.size(); ++i) g(i, j) = c[i];
  }
  const Mat kg = k * g;
  const Vec kz = k * z.coordinates();
  const auto a0 = solve_in_range(kg.transpose() * kg, kg.transpose() * kz);
  if (!a0) throw Infeasible("oracle_penot_cone: no generator combination reaches the point");

  const Eigen::VectorXd base = to_eigen(*a0);
  const Eigen::MatrixXd null = to_eigen(nullspace(kg));
  Eigen::VectorXd weight(static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) weight(static_cast<Eigen::Index>(i)) = std::sqrt(to_double(gens[i].c));

  // A weighted L1 minimum over an affine set is attained where at least
  // dim(null) coordinates vanish, so try every such support.
  const auto p = null.cols();
  const auto mm = static_cast<Eigen::Index>(m);
  double best = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_a = base;
  std::vector<Eigen::Index> pick(static_cast<std::size_t>(p));
  auto consider = [&](const Eigen::VectorXd& a) {
    const double v = weight.dot(a.cwiseAbs());
    if (v < best) {
      best = v;
      best_a = a;
    }
  };
  std::function<void(Eigen::Index, Eigen::Index)> rec = [&](Eigen::Index start, Eigen::Index depth) {
    if (depth == p) {
      Eigen::MatrixXd sub(p, p);
      Eigen::VectorXd rhs(p);
      for (Eigen::Index r = 0; r < p; ++r) {
        sub.row(r) = null.row(pick[static_cast<std::size_t>(r)]);
        rhs(r) = -base(pick[static_cast<std::size_t>(r)]);
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(sub);
      if (lu.rank() < p) return;
      consider(base + null * lu.solve(rhs));
      return;
    }
    for (Eigen::Index i = start; i < mm; ++i) {
      pick[static_cast<std::size_t>(depth)] = i;
      rec(i + 1, depth + 1);
    }
  };
  if (p == 0) consider(base);
  else rec(0, 0);

  const Eigen::VectorXd resid = to_eigen(kg) * best_a - to_eigen(kz);
  PenotEstimate out{best * best, resid.norm()};
  if (out.residual > cfg.float_tolerance * (1 + to_eigen(kz).norm())) {
    throw std::runtime_error("oracle_penot_cone: feasibility residual above tolerance");
  }
  return out;
}

}  // namespace monorel
