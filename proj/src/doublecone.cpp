#include "monorel/doublecone.hpp"

#include <algorithm>
#include <string>

namespace monorel {

namespace {

Scalar quadratic(const Mat& form, const Vec& u) { return dot(u, form * u); }

Point normalized(const Point& z) {
  const Vec v = z.coordinates();
  for (const auto& e : v) {
    if (e != 0) return z.scaled(1 / e);
  }
  return z;
}

std::size_t first_nonzero(const Point& z) {
  const Vec v = z.coordinates();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return i;
  }
  return v.size();
}

// Gram form of the listed vectors: entry (i, j) is (v_i . v_j) / 2.
Mat gram_of(const std::vector<Point>& vs) {
  Mat h(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) h(i, j) = couple(vs[i], vs[j]) / 2;
  return h;
}

std::vector<Point> hull_vectors(const DoubleCone& d) {
  std::vector<Point> vs;
  for (const auto& g : d.generators()) vs.push_back(g.z);
  for (const auto& s : d.skew().basis_points()) vs.push_back(s);
  return vs;
}

// Quadratic forms on the coordinates u of z = W u, W a basis of the pairing
// complement of S: q_i(u) = (z . z_i)^2 - 4 c_i c(z). phi(z) < c(z) exactly
// when every q_i(u) < 0.
struct DomainForms {
  Mat basis;
  Mat c_form;
  std::vector<Mat> q;
};

DomainForms domain_forms(const DoubleCone& d) {
  DomainForms f;
  f.basis = perp(d.skew()).basis();
  const Mat jw = apply_pairing(f.basis);
  f.c_form = (f.basis.transpose() * jw).scaled(Scalar(1, 2));
  for (const auto& g : d.generators()) {
    const Vec a = jw.transpose() * g.z.coordinates();
    Mat q(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) q(i, j) = a[i] * a[j] - 4 * g.c * f.c_form(i, j);
    f.q.push_back(std::move(q));
  }
  return f;
}

bool below_c(const DomainForms& f, const Vec& u) {
  return std::all_of(f.q.begin(), f.q.end(), [&](const Mat& q) { return quadratic(q, u) < 0; });
}

bool psd(const Mat& m) { return inertia(m).negative == 0; }

struct NiProbe {
  std::optional<Point> below;  // phi < c
  std::optional<PointPair> pair;  // in D+, not monotonically related
};

void set_all(ClassificationReport& r, bool value, const std::string& why) {
  for (Verdict* v : {&r.monotone, &r.skew, &r.representable, &r.ni, &r.unique, &r.dual_representable, &r.maximal}) {
    *v = Verdict::exact(value, why);
  }
}

}  // namespace

DoubleCone::DoubleCone(Subspace skew, const std::vector<Point>& generators) : skew_(std::move(skew)) {
  if (!is_skew(skew_)) throw std::invalid_argument("double-cone: the skew block is not skew");
  for (const auto& z : generators) {
    if (z.dim() != skew_.n()) throw DimensionMismatch("double-cone: generator dimension");
    if (z.is_zero()) throw std::invalid_argument("double-cone: zero generator");
    const Scalar c = cval(z);
    if (c == 0) throw std::invalid_argument("double-cone: generator with c(z) = 0 belongs in the skew block");
    Point p = normalized(z);
    const bool seen = std::any_of(gens_.begin(), gens_.end(), [&](const Generator& g) { return g.z == p; });
    if (!seen) gens_.push_back({std::move(p), cval(normalized(z))});
  }
}

bool DoubleCone::has_negative_part() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Generator& g) { return g.c < 0; });
}

bool DoubleCone::contains(const Point& z) const {
  if (z.dim() != n()) throw DimensionMismatch("double-cone: point dimension");
  if (skew_.contains(z)) return true;
  for (const auto& g : gens_) {
    const Scalar t = z.coordinates()[first_nonzero(g.z)];
    if (g.z.scaled(t) == z) return true;
  }
  return false;
}

bool DoubleCone::is_subspace_shaped() const { return gens_.empty() || (gens_.size() == 1 && skew_.dim() == 0); }

ConeMonotoneCheck dc_is_monotone(const DoubleCone& d) {
  const auto& gens = d.generators();
  for (const auto& g : gens) {
    if (g.c < 0) return {false, PointPair{g.z, Point::zero(d.n())}};
  }
  for (const auto& g : gens) {
    for (const auto& s : d.skew().basis_points()) {
      const Scalar p = couple(g.z, s);
      if (p != 0) return {false, PointPair{g.z.scaled(p / (2 * g.c)), s}};
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Scalar p = couple(gens[i].z, gens[j].z);
      if (p * p > 4 * gens[i].c * gens[j].c) {
        return {false, PointPair{gens[i].z.scaled(p / (2 * gens[i].c)), gens[j].z}};
      }
    }
  }
  return {true, std::nullopt};
}

FitzValue dc_fitz_eval(const DoubleCone& d, const Point& z) {
  if (z.dim() != d.n()) throw DimensionMismatch("dc_fitz_eval: point dimension");
  if (d.has_negative_part()) return FitzValue::infinity();
  for (const auto& s : d.skew().basis_points()) {
    if (couple(z, s) != 0) return FitzValue::infinity();
  }
  Scalar best = 0;
  for (const auto& g : d.generators()) {
    const Scalar p = couple(z, g.z);
    best = std::max(best, Scalar(p * p / (4 * g.c)));
  }
  return FitzValue::finite(best);
}

bool dc_in_plus(const DoubleCone& d, const Point& z) {
  if (z.dim() != d.n()) throw DimensionMismatch("dc_in_plus: point dimension");
  const Scalar cz = cval(z);
  if (cz < 0) return false;
  for (const auto& s : d.skew().basis_points()) {
    if (couple(z, s) != 0) return false;
  }
  for (const auto& g : d.generators()) {
    // c(z - t z_i) = c(z) - t (z . z_i) + t^2 c_i must stay >= 0 for all t.
    if (g.c < 0) return false;
    const Scalar p = couple(z, g.z);
    if (p * p > 4 * cz * g.c) return false;
  }
  return true;
}

FitzValue dc_sigma_sq(const DoubleCone& d, const Point& z) {
  if (d.generators().empty()) throw EmptyPositivePart("dc_sigma_sq: the cone has no generators");
  const FitzValue phi = dc_fitz_eval(d, z);
  return phi.is_finite() ? FitzValue::finite(4 * phi.value()) : phi;
}

Subspace dc_lin_hull(const DoubleCone& d) { return Subspace::span(d.n(), hull_vectors(d)); }

ClassificationReport dc_classify(const DoubleCone& d, const ProbeConfig& cfg) {
  ClassificationReport r;
  r.n = d.n();
  const Subspace hull = dc_lin_hull(d);
  r.dim = hull.dim();

  const std::vector<Point> hv = hull_vectors(d);
  if (auto u = negative_direction(gram_of(hv))) {
    r.hull_monotone = Verdict::exact(false, "c takes a negative value on the linear hull");
    Point w = Point::zero(d.n());
    for (std::size_t i = 0; i < hv.size(); ++i) w = w + hv[i].scaled((*u)[i]);
    r.hull_witness = w;
    r.hull_coefficients = *u;
  } else {
    r.hull_monotone = Verdict::exact(true, "c is nonnegative on the linear hull");
  }

  const ConeMonotoneCheck mc = dc_is_monotone(d);
  if (!mc.monotone) {
    set_all(r, false, "not monotone");
    r.monotone.rule = "a generator pair violates (z . w)^2 <= 4 c(z) c(w), or a line is not orthogonal to S";
    r.non_monotone_pair = mc.witness;
    r.notes.push_back("phi is identically +inf on a non-monotone set; every other flag is reported false");
    return r;
  }

  if (d.is_subspace_shaped()) {
    ClassificationReport base = classify(hull);
    base.dim = r.dim;
    base.hull_monotone = r.hull_monotone;
    base.hull_witness = r.hull_witness;
    base.hull_coefficients = r.hull_coefficients;
    base.notes.push_back("the point set is a linear subspace; classified as such");
    return base;
  }

  const auto& gens = d.generators();
  r.monotone = Verdict::exact(true, "every generator pair satisfies (z . w)^2 <= 4 c(z) c(w) and lies in the complement of S");
  r.skew = Verdict::exact(false, "a generator has c > 0");

  // Representability: D = [psi = c].
  if (d.skew().dim() > 0) {
    const Point s = d.skew().basis_points().front();
    r.representable = Verdict::exact(false, "S is nonzero: s + z_1 lies in [psi = c] but not in D");
    r.non_representable = s + gens.front().z;
  } else {
    std::optional<Point> w;
    bool tangent = false;
    for (std::size_t i = 0; i < gens.size() && !w; ++i) {
      for (std::size_t j = 0; j < gens.size() && !w; ++j) {
        if (i == j) continue;
        const Scalar p = couple(gens[i].z, gens[j].z);
        if (p * p != 4 * gens[i].c * gens[j].c) continue;
        tangent = true;
        Point cand = gens[i].z + gens[j].z.scaled(p / (2 * gens[j].c));
        if (!d.contains(cand)) w = std::move(cand);
      }
    }
    r.representable = Verdict::exact(!tangent, tangent ? "two generators satisfy (z . w)^2 = 4 c(z) c(w), so the crown has an edge on the unit sphere of c"
                                                       : "S = {0} and every generator pair satisfies (z . w)^2 < 4 c(z) c(w)");
    r.non_representable = w;
  }

  r.maximal = Verdict::exact(false, "a maximal monotone set is homeomorphic to R^n, which a non-linear finite union of lines and a subspace is not");
  r.dual_representable = Verdict::exact(false, "coincides with maximality in finite dimension");

  // NI.
  const DomainForms f = domain_forms(d);
  const std::size_t dw = f.basis.cols();
  const bool dom_monotone = psd(f.c_form);
  auto small_below = [&]() -> std::optional<Point> {
    std::optional<Point> hit;
    for (long norm = 1; norm <= (dw <= 4 ? 4 : dw <= 6 ? 3 : 2) && !hit; ++norm) {
      for_each_l1_vector(dw, norm, [&](const Vec& u) {
        if (below_c(f, u)) hit = Point::from_coordinates(f.basis * u);
        return hit.has_value();
      });
    }
    return hit;
  };

  std::optional<bool> ni;
  if (dom_monotone) {
    // phi <= c on the monotone domain, so NI means phi = c there, and a
    // subspace covered by finitely many quadric zero sets lies in one.
    const bool identity = std::any_of(f.q.begin(), f.q.end(), [](const Mat& q) { return q.is_zero(); });
    for (const auto& q : f.q) {
      if (inertia(q).positive != 0) throw std::logic_error("dc_classify: phi exceeds c on a monotone domain");
    }
    ni = identity;
    r.ni = Verdict::exact(identity, identity ? "dom phi is monotone and one generator gives phi = c on all of it"
                                             : "dom phi is monotone and no generator gives phi = c on all of it");
  } else {
    bool cert = std::any_of(f.q.begin(), f.q.end(), [](const Mat& q) { return psd(q); });
    for (std::size_t i = 0; i < f.q.size() && !cert; ++i) {
      for (std::size_t j = i + 1; j < f.q.size() && !cert; ++j) {
        for (int k = 1; k < 16 && !cert; ++k) {
          const Scalar lam(k, 16);
          cert = psd(f.q[i].scaled(lam) + f.q[j].scaled(1 - lam));
        }
      }
    }
    if (cert) {
      ni = true;
      r.ni = Verdict::exact(true, "a convex combination of the generator forms is positive semidefinite on dom phi");
      if (r.representable.value) throw std::logic_error("dc_classify: representable and NI cone reported non-maximal");
    } else if (r.representable.value) {
      ni = false;
      r.ni = Verdict::exact(false, "representable and NI would make the cone maximal");
    }
  }

  if (!ni.value_or(false)) {
    if (auto z = small_below()) {
      r.non_ni = *z;
      if (!ni) r.ni = Verdict::exact(false, "found z in dom phi with phi(z) < c(z)");
      ni = false;
    }
  }

  if (!ni) {
    const auto hit = omp::first_hit<NiProbe>(cfg.samples, [&](std::size_t i) -> std::optional<NiProbe> {
      Rng rng = probe_rng(cfg.seed, i);
      const Vec u1 = grid_vector(rng, dw, cfg.grid_radius);
      const Vec u2 = grid_vector(rng, dw, cfg.grid_radius);
      if (below_c(f, u1)) return NiProbe{Point::from_coordinates(f.basis * u1), std::nullopt};
      const Point z1 = Point::from_coordinates(f.basis * u1);
      const Point z2 = Point::from_coordinates(f.basis * u2);
      if (dc_in_plus(d, z1) && dc_in_plus(d, z2) && cval(z1 - z2) < 0) return NiProbe{std::nullopt, PointPair{z1, z2}};
      return std::nullopt;
    });
    if (hit) {
      ni = false;
      if (hit->witness.below) {
        r.non_ni = hit->witness.below;
        r.ni = Verdict::exact(false, "found z in dom phi with phi(z) < c(z)");
      } else {
        r.non_unique = hit->witness.pair;
        r.ni = Verdict::exact(false, "found two points of D+ that are not monotonically related");
      }
    } else {
      ni = true;
      r.ni = Verdict::probed(true, cfg.samples, "no point with phi < c and no non-monotone pair in D+ among the probes");
    }
  }

  if (*ni) {
    r.unique = r.ni;
    r.unique.rule = "NI implies unique";
  } else if (dom_monotone) {
    r.unique = Verdict::exact(true, "dom phi is monotone");
  } else {
    r.unique = Verdict::exact(false, "neither NI nor a monotone dom phi");
  }

  // A point of D+ outside D.
  if (r.non_representable) {
    r.non_maximal = r.non_representable;
  } else {
    for (std::size_t i = 0; i < gens.size() && !r.non_maximal; ++i) {
      for (std::size_t j = 0; j < gens.size() && !r.non_maximal; ++j) {
        if (i == j) continue;
        for (const Scalar& t : {Scalar(1), Scalar(-1), Scalar(1, 2), Scalar(-1, 2), Scalar(2), Scalar(-2)}) {
          const Point w = gens[i].z + gens[j].z.scaled(t);
          if (dc_in_plus(d, w) && !d.contains(w)) {
            r.non_maximal = w;
            break;
          }
        }
      }
    }
  }
  return r;
}

}  // namespace monorel
