#include "monorel/linsub.hpp"

#include <functional>
#include <stdexcept>

namespace monorel {

std::string to_string(const FitzValue& v) { return v.is_finite() ? to_string(v.value()) : "inf"; }

std::string to_string(Certainty c) { return c == Certainty::Exact ? "exact" : "probed"; }

bool ClassificationReport::consistent() const {
  if (maximal.value != (representable.value && ni.value)) return false;
  if (ni.value && !unique.value) return false;
  if (maximal.value != (dual_representable.value && unique.value)) return false;
  if (skew.value && !monotone.value) return false;
  return true;
}

namespace {

Scalar quadratic(const Mat& form, const Vec& u) { return dot(u, form * u); }

Point to_point(const Mat& basis, const Vec& coeffs) { return Point::from_coordinates(basis * coeffs); }

}  // namespace

bool for_each_l1_vector(std::size_t k, long norm, const std::function<bool(const Vec&)>& visit) {
  Vec u(k);
  std::function<bool(std::size_t, long, bool)> rec = [&](std::size_t i, long rem, bool leading) -> bool {
    if (i == k) return rem == 0 && visit(u);
    for (long a = 1; a <= rem; ++a) {
      for (long s : {1L, -1L}) {
        if (leading && s < 0) continue;
        u[i] = a * s;
        if (rec(i + 1, rem - a, false)) return true;
      }
    }
    u[i] = 0;
    return rec(i + 1, rem, leading);
  };
  return rec(0, norm, true);
}

std::optional<Vec> negative_direction(const Mat& form) {
  const std::size_t k = form.rows();
  if (k == 0 || inertia(form).negative == 0) return std::nullopt;
  const long bound = k <= 6 ? 4 : 3;
  std::optional<Vec> found;
  for (long norm = 1; norm <= bound && !found; ++norm) {
    for_each_l1_vector(k, norm, [&](const Vec& u) {
      if (quadratic(form, u) < 0) {
        found = u;
        return true;
      }
      return false;
    });
  }
  if (found) return found;
  const Congruence cg = congruence_diagonalize(form);
  for (std::size_t i = 0; i < k; ++i) {
    if (cg.diagonal[i] < 0) return primitive_integer(cg.transform.col(i));
  }
  throw std::logic_error("negative_direction: inertia and congruence disagree");
}

Mat gram(const Subspace& l) {
  const Mat b = l.basis();
  return (b.transpose() * apply_pairing(b)).scaled(Scalar(1, 2));
}

MonotoneCheck is_monotone(const Subspace& l) {
  const Mat g = gram(l);
  if (auto u = negative_direction(g)) return {false, l.point(*u)};
  return {true, std::nullopt};
}

bool is_skew(const Subspace& l) { return gram(l).is_zero(); }

Subspace skew_part(const Subspace& l) {
  const Mat g = gram(l);
  if (inertia(g).negative > 0) throw NotMonotone("skew_part: subspace is not monotone");
  return Subspace::column_span(l.n(), l.basis() * nullspace(g));
}

// ---------------------------------------------------------------------------

FitzpatrickForm::FitzpatrickForm(const Subspace& l) : l_(l) {
  const Mat b = l.basis();
  const Mat jb = apply_pairing(b);
  const Mat g = (b.transpose() * jb).scaled(Scalar(1, 2));
  if (inertia(g).negative > 0) throw NotMonotone("Fitzpatrick form: subspace is not monotone");

  skew_ = Subspace::column_span(l.n(), b * nullspace(g));
  domain_ = perp(skew_);
  skew_dual_ = apply_pairing(skew_.basis()).transpose();

  // For a positive semidefinite g, the principal block on any basis of its
  // column space is invertible and gives a generalized inverse.
  const std::vector<std::size_t> piv = rref(g).pivots;
  Mat block(piv.size(), piv.size());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < piv.size(); ++j) block(i, j) = g(piv[i], piv[j]);
  const Mat block_inv = inverse(block);
  Mat ginv(g.rows(), g.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < piv.size(); ++j) ginv(piv[i], piv[j]) = block_inv(i, j);

  f_ = (jb * ginv * jb.transpose()).scaled(Scalar(1, 4));
}

bool FitzpatrickForm::in_domain(const Point& z) const { return is_zero(skew_dual_ * z.coordinates()); }

FitzValue FitzpatrickForm::value(const Point& z) const {
  if (!in_domain(z)) return FitzValue::infinity();
  return FitzValue::finite(quadratic(f_, z.coordinates()));
}

std::optional<Scalar> FitzpatrickForm::excess(const Point& z) const {
  if (!in_domain(z)) return std::nullopt;
  return quadratic(f_, z.coordinates()) - cval(z);
}

bool FitzpatrickForm::in_plus(const Point& z) const {
  const auto e = excess(z);
  return e && *e <= 0;
}

Mat FitzpatrickForm::excess_on_domain() const {
  const Mat w = domain_.basis();
  const Mat h = f_ - pairing_matrix(l_.n()).scaled(Scalar(1, 2));
  return w.transpose() * h * w;
}

// ---------------------------------------------------------------------------

FitzValue fitz_eval(const Subspace& l, const Point& z) {
  if (z.dim() != l.n()) throw DimensionMismatch("fitz_eval: point dimension");
  const Mat g = gram(l);
  if (inertia(g).negative > 0) return FitzValue::infinity();
  const Vec b = apply_pairing(l.basis()).transpose() * z.coordinates();
  const auto u = solve_in_range(g, scaled(b, Scalar(1, 2)));
  if (!u) return FitzValue::infinity();
  return FitzValue::finite(dot(b, *u) / 2);
}

Subspace fitz_dom(const Subspace& l) { return perp(skew_part(l)); }

FitzValue penot_eval(const Subspace& l, const Point& z) {
  if (z.dim() != l.n()) throw DimensionMismatch("penot_eval: point dimension");
  if (!is_monotone(l).monotone) throw NotMonotone("penot_eval: Penot function of a non-monotone set is improper");
  return l.contains(z) ? FitzValue::finite(cval(z)) : FitzValue::infinity();
}

bool in_plus(const Subspace& l, const Point& z) {
  if (z.dim() != l.n()) throw DimensionMismatch("in_plus: point dimension");
  return FitzpatrickForm(l).in_plus(z);
}

// ---------------------------------------------------------------------------

namespace {

// A point of l+ outside l, or nullopt when l is maximal.
std::optional<Point> plus_outside(const FitzpatrickForm& form) {
  const Mat w = form.domain().basis();
  const Mat q = form.excess_on_domain();
  if (auto d = negative_direction(q)) return to_point(w, *d);
  const Mat ker = nullspace(q);
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    Point z = to_point(w, primitive_integer(ker.col(j)));
    if (!form.subspace().contains(z)) return z;
  }
  return std::nullopt;
}

// Two points of l+ that are not monotonically related, from small integer
// combinations of the domain basis.
std::optional<PointPair> plus_non_monotone_pair(const FitzpatrickForm& form) {
  const Mat w = form.domain().basis();
  const Mat q = form.excess_on_domain();
  std::vector<Point> cands;
  for (long norm = 1; norm <= 2; ++norm) {
    for_each_l1_vector(w.cols(), norm, [&](const Vec& u) {
      if (quadratic(q, u) <= 0) cands.push_back(to_point(w, u));
      return cands.size() >= 64;
    });
  }
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      if (cval(cands[i] - cands[j]) < 0) return PointPair{cands[i], cands[j]};
  return std::nullopt;
}

}  // namespace

ClassificationReport classify(const Subspace& l) {
  ClassificationReport r;
  r.n = l.n();
  r.dim = l.dim();

  const MonotoneCheck mc = is_monotone(l);
  if (!mc.monotone) {
    const std::string why = "not monotone";
    r.monotone = Verdict::exact(false, "c takes a negative value on the subspace");
    r.skew = Verdict::exact(false, why);
    r.representable = Verdict::exact(false, why);
    r.ni = Verdict::exact(false, why);
    r.unique = Verdict::exact(false, why);
    r.dual_representable = Verdict::exact(false, why);
    r.maximal = Verdict::exact(false, why);
    r.non_monotone = mc.witness;
    r.notes.push_back("phi is identically +inf on a non-monotone subspace; every other flag is reported false");
    return r;
  }

  const bool skew = is_skew(l);
  if (skew != perp(l).contains(l)) throw std::logic_error("classify: skew tests disagree");
  r.monotone = Verdict::exact(true, "gram form is positive semidefinite");
  r.skew = Verdict::exact(skew, skew ? "gram form vanishes" : "gram form is nonzero");
  r.representable = Verdict::exact(true, "closed monotone subspace: c plus its indicator represents it");

  const FitzpatrickForm form(l);
  const Mat q = form.excess_on_domain();
  const auto neg = negative_direction(q);
  const bool ni = !neg;
  if (neg) r.non_ni = to_point(form.domain().basis(), *neg);
  r.ni = Verdict::exact(ni, "NI iff phi - c is positive semidefinite on dom phi");

  if (skew) {
    const bool minus_perp_monotone = inertia(gram(perp(l))).positive == 0;
    if (minus_perp_monotone != ni) throw std::logic_error("classify: skew NI tests disagree");
  }

  const bool dom_monotone = is_monotone(form.domain()).monotone;
  const bool unique = ni || dom_monotone;
  r.unique = Verdict::exact(unique, ni ? "NI implies unique" : (dom_monotone ? "dom phi is monotone" : "l+ is not monotone and dom phi is not monotone"));
  if (!unique) r.non_unique = plus_non_monotone_pair(form);

  const bool maximal = ni;
  if (maximal != (l.dim() == l.n())) throw std::logic_error("classify: maximality disagrees with dimension count");
  r.maximal = Verdict::exact(maximal, "maximal iff representable and NI");
  r.dual_representable = Verdict::exact(maximal, "coincides with maximality in finite dimension");
  if (!maximal) r.non_maximal = plus_outside(form);
  return r;
}

Subspace extend_maximal(const Subspace& l) {
  Subspace m = l;
  while (true) {
    const FitzpatrickForm form(m);
    auto z = plus_outside(form);
    if (!z) break;
    m = m.with(*z);
  }
  if (m.dim() != m.n()) throw std::logic_error("extend_maximal: result has the wrong dimension");
  return m;
}

Subspace sum_composition(const Subspace& m, const Subspace& nn, const Mat& a) {
  const std::size_t n = m.n();
  const std::size_t k = nn.n();
  if (a.rows() != k || a.cols() != n) throw DimensionMismatch("sum_composition: matrix shape");

  const Mat bm = m.basis();
  const Mat bn = nn.basis();
  const std::size_t p = bm.cols();
  const std::size_t s = bn.cols();
  Mat bx(n, p), by(n, p), cu(k, s), cv(k, s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      bx(i, j) = bm(i, j);
      by(i, j) = bm(n + i, j);
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      cu(i, j) = bn(i, j);
      cv(i, j) = bn(k + i, j);
    }

  // (alpha, beta) with A Bx alpha = Cu beta.
  const Mat ns = nullspace((a * bx).hconcat(cu.scaled(-1)));
  const Mat at_cv = a.transpose() * cv;
  Mat out(2 * n, ns.cols());
  for (std::size_t c = 0; c < ns.cols(); ++c) {
    Vec alpha(p), beta(s);
    for (std::size_t j = 0; j < p; ++j) alpha[j] = ns(j, c);
    for (std::size_t j = 0; j < s; ++j) beta[j] = ns(p + j, c);
    const Vec x = bx * alpha;
    const Vec xs = add(by * alpha, at_cv * beta);
    for (std::size_t i = 0; i < n; ++i) {
      out(i, c) = x[i];
      out(n + i, c) = xs[i];
    }
  }
  return Subspace::column_span(n, out);
}

}  // namespace monorel
