// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "monorel/doublecone.hpp"
#include "monorel/gossez.hpp"
#include "monorel/linsub.hpp"
#include "monorel/matrix.hpp"
#include "monorel/oracle.hpp"
#include "monorel/sampling.hpp"
#include "support.hpp"

using namespace monorel;
using test::pt;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * (1 + std::abs(b)); }

// c(z) - t (z . z_i) + t^2 c_i is minimized at t = (z . z_i) / (2 c_i).
bool discriminant_plus(const DoubleCone& d, const Point& z) {
  if (cval(z) < 0) return false;
  for (const auto& g : d.generators()) {
    const Scalar p = couple(z, g.z);
    if (p * p > 4 * g.c * cval(z)) return false;
  }
  for (const auto& s : d.skew().basis_points()) {
    if (couple(z, s) != 0) return false;
  }
  return true;
}

Outcome three_line_cone() {
  const DoubleCone d(Subspace::zero(2), {pt({0, 1}, {1, 1}), pt({1, 1}, {1, 0}), pt({1, 0}, {1, 0})});
  Outcome out;
  const auto& g = d.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const Scalar p = couple(g[i].z, g[j].z);
      if (p * p > 4 * g[i].c * g[j].c) out.fail("pairwise discriminant positive");
    }
  }
  const ClassificationReport r = dc_classify(d);
  if (!r.monotone.value || r.monotone.tier != Certainty::Exact) out.fail("cone not reported exactly monotone");
  if (!r.hull_monotone || r.hull_monotone->value) out.fail("hull reported monotone");
  if (!r.hull_witness) {
    out.fail("no hull witness");
  } else {
    if (*r.hull_witness != pt({-1, -1}, {0, 1})) out.fail("unexpected hull witness");
    if (cval(*r.hull_witness) != -1) out.fail("hull witness has c != -1");
    if (!dc_lin_hull(d).contains(*r.hull_witness)) out.fail("hull witness outside the hull");
  }
  return out;
}

Outcome diagonal_line() {
  const Subspace diag = test::span(1, {pt({1}, {1})});
  Rng rng(2);
  ProbeConfig cfg;
  cfg.samples = 200;
  Outcome out;
  for (int i = 0; i < 100; ++i) {
    const Scalar x = grid_scalar(rng, 6), y = grid_scalar(rng, 6);
    const Point z = pt({x}, {y});
    const Scalar expect = (x + y) * (x + y) / 4;
    const FitzValue phi = fitz_eval(diag, z);
    if (!phi.is_finite() || phi.value() != expect) out.fail("exact value differs at " + to_string(x) + "," + to_string(y));
    const SupEstimate est = oracle_fitz_sup(diag, z, cfg);
    if (est.diverged || !close(est.value, to_double(expect), 1e-6)) out.fail("oracle differs beyond 1e-6");
  }
  return out;
}

Outcome skew_with_monotone_complement() {
  Rng rng(3);
  Outcome out;
  int accepted = 0;
  while (accepted < 200) {
    const auto n = static_cast<std::size_t>(test::uniform(rng, 1, 4));
    const Subspace s = accepted % 4 == 0 ? random_skew(rng, n) : random_lagrangian(rng, n);
    const Subspace ps = perp(s);
    if (inertia(gram(ps)).positive != 0) continue;
    ++accepted;
    if (!is_skew(s)) out.fail("generator produced a non-skew subspace");
    if (fitz_dom(s) != ps) out.fail("Fitzpatrick domain differs from the complement");
    if (ps != s) out.fail("complement differs from S");
    const ClassificationReport r = classify(s);
    if (!r.ni.value || !r.maximal.value) out.fail("not classified NI and maximal");
    for (int k = 0; k < 500; ++k) {
      Point z = k % 3 == 0 ? test::sample_in(rng, s, 3) : grid_point(rng, n, 3);
      if (k % 3 == 1) z = z + test::sample_in(rng, s, 3);
      const bool in_s = s.contains(z);
      const FitzValue phi = fitz_eval(s, z);
      const bool phi_eq_c = phi.is_finite() && phi.value() == cval(z);
      const bool zero_set = ps.contains(z) && cval(z) == 0;
      if (in_plus(s, z) != in_s || phi_eq_c != in_s || zero_set != in_s) out.fail("sets differ at a probe point");
    }
  }
  return out;
}

Outcome zero_subspace_chain() {
  const DoubleCone zero(Subspace::zero(1), {});
  std::vector<Point> grid;
  for (int a = -20; a <= 20; ++a)
    for (int b = -20; b <= 20; ++b) grid.push_back(pt({test::frac(a, 4)}, {test::frac(b, 4)}));

  // Axis points first, reaching past the grid, so a violating w turns up early.
  std::vector<Point> plus;
  for (int k = -41; k <= 41; ++k) {
    if (k == 0) continue;
    plus.push_back(pt({test::frac(k, 4)}, {0}));
    plus.push_back(pt({0}, {test::frac(k, 4)}));
  }
  Outcome out;
  for (const auto& z : grid) {
    const bool member = dc_in_plus(zero, z);
    if (member != (cval(z) >= 0)) out.fail("S+ differs from [c >= 0]");
    if ((cval(z) == 0) != (z.x()[0] == 0 || z.y()[0] == 0)) out.fail("S0 differs from the axes");
    if (member) plus.push_back(z);
  }
  for (const auto& z : grid) {
    bool pp = true;
    for (const auto& w : plus) {
      if (cval(z - w) < 0) {
        pp = false;
        break;
      }
    }
    if (pp != z.is_zero()) out.fail("S++ differs from {0}");
  }
  const Point a = pt({1}, {0}), b = pt({1}, {1});
  if (cval(a) != 0 || a.is_zero()) out.fail("(1,0) is not in S0 minus S++");
  if (cval(b) <= 0) out.fail("(1,1) is not in S+ minus S0");
  return out;
}

Outcome random_monotone_subspaces() {
  Rng rng(5);
  ProbeConfig cfg;
  cfg.samples = 1000;
  Outcome out;
  for (int i = 0; i < 500; ++i) {
    const auto n = static_cast<std::size_t>(test::uniform(rng, 1, 4));
    const Subspace l = random_monotone(rng, n);
    const ClassificationReport r = classify(l);
    if (!r.consistent()) out.fail("inconsistent report");
    if (!r.monotone.value) out.fail("generator produced a non-monotone subspace");
    if (r.maximal.value != (l.dim() == n)) out.fail("maximal differs from dim == n");
    cfg.seed = static_cast<std::uint64_t>(i);
    const MaximalProbe p = oracle_maximal_probe(l, cfg);
    if (r.maximal.value && !p.passed) out.fail("probe extended a maximal subspace");
    if (!p.passed && (!p.witness || l.contains(*p.witness) || !is_monotone(l.with(*p.witness)).monotone))
      out.fail("bad extension witness");
  }
  return out;
}

Outcome extensions() {
  Rng rng(6);
  ProbeConfig cfg;
  cfg.samples = 1000;
  Outcome out;
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(test::uniform(rng, 1, 6));
    const Subspace l = random_monotone(rng, n);
    const Subspace e = extend_maximal(l);
    for (const auto& b : l.basis_points()) {
      if (!e.contains(b)) out.fail("extension drops the input");
    }
    if (e.dim() != n) out.fail("extension has dim != n");
    if (!is_monotone(e).monotone) out.fail("extension not monotone");
    if (!classify(e).maximal.value) out.fail("extension not classified maximal");
    cfg.seed = static_cast<std::uint64_t>(i);
    if (!oracle_maximal_probe(e, cfg).passed) out.fail("probe extended the extension");
  }
  return out;
}

FinSeq random_seq(Rng& rng, std::size_t max_support, bool zero_sum) {
  const auto count = static_cast<std::size_t>(test::uniform(rng, 0, static_cast<long>(max_support)));
  std::vector<FinSeq::Entry> entries;
  std::vector<bool> used(3 * max_support + 2, false);
  while (entries.size() < count) {
    const auto i = static_cast<std::size_t>(test::uniform(rng, 1, static_cast<long>(3 * max_support + 1)));
    if (used[i]) continue;
    used[i] = true;
    entries.emplace_back(i, test::frac(test::uniform(rng, -9, 9), test::uniform(rng, 1, 7)));
  }
  if (zero_sum && !entries.empty()) {
    Scalar rest = 0;
    for (std::size_t k = 1; k < entries.size(); ++k) rest += entries[k].second;
    entries[0].second = -rest;
  }
  return FinSeq(std::move(entries));
}

Outcome gossez_identities() {
  Rng rng(7);
  Outcome out;
  for (int i = 0; i < 500; ++i) {
    const FinSeq x = random_seq(rng, 50, i % 2 == 0);
    const FinSeq v = random_seq(rng, 50, false);
    const GossezReport r = check_identities(x, v);
    for (const auto& c : r.checks) {
      if (c.applicable && c.residual != 0) out.fail("identity '" + c.name + "' has a nonzero residual");
    }
    if (r.shifted_pairing != r.sum_v_squared) out.fail("shifted pairing differs from the squared sum");
  }
  return out;
}

Outcome cone_plus_sets() {
  Rng rng(8);
  Outcome out;
  for (int cone = 0; cone < 100; ++cone) {
    const auto n = static_cast<std::size_t>(test::uniform(rng, 1, 3));
    const DoubleCone d = random_monotone_cone(rng, n, 5);
    const Subspace hull = dc_lin_hull(d);
    for (int k = 0; k < 1000; ++k) {
      const Point z = k % 2 ? grid_point(rng, n, 3) : test::sample_in(rng, hull, 3);
      const bool fast = dc_in_plus(d, z);
      if (fast != discriminant_plus(d, z)) out.fail("disagrees with the discriminant probe");
      if (fast != oracle_cone_mrt(d, z)) out.fail("disagrees with the line oracle");
    }
  }
  return out;
}

Outcome inertia_vs_eigen() {
  Rng rng(9);
  Outcome out;
  int checked = 0;
  while (checked < 200) {
    const auto k = static_cast<std::size_t>(test::uniform(rng, 1, 8));
    const Mat g = test::random_symmetric(rng, k, 5);
    Eigen::MatrixXd f(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) f(i, j) = to_double(g(i, j));
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(f).eigenvalues();
    Inertia expect;
    bool clear = true;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      if (std::abs(ev[i]) < 1e-6) clear = false;
      (ev[i] > 0 ? expect.positive : expect.negative) += 1;
    }
    if (!clear) continue;
    ++checked;
    if (inertia(g) != expect) out.fail("inertia differs from eigenvalue signs");
  }
  return out;
}

struct Criterion {
  int id;
  const char* what;
  double limit_ms;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "three-line cone: monotone, hull witness (-1 -1 ; 0 1)", 10, three_line_cone},
      {2, "diagonal line: phi = (x+y)^2/4 on 100 points, oracle within 1e-6", 1000, diagonal_line},
      {3, "200 skew S with monotone complement: S = S+ = [phi = c] = [c = 0] in the complement", 30000,
       skew_with_monotone_complement},
      {4, "zero subspace: strict chain S++ < S0 < S+ on a 41x41 grid", 100, zero_subspace_chain},
      {5, "500 random monotone subspaces: consistent, maximal iff dim = n, 1000 probes", 120000,
       random_monotone_subspaces},
      {6, "extend_maximal on 100 subspaces (n <= 6): maximal, 1000 probes", 60000, extensions},
      {7, "500 sequence pairs (support <= 50): identities exact", 5000, gossez_identities},
      {8, "100 cones (m <= 5, n <= 3), 1000 points: plus set matches the discriminant probe", 30000,
       cone_plus_sets},
      {9, "200 symmetric matrices (dim <= 8): inertia matches Eigen", 5000, inertia_vs_eigen},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("threw: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && ms > c.limit_ms) o.fail("over the time limit");
    all = all && o.ok;
    std::printf("%s criterion %d: %s (%.1f ms, limit %.0f ms)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.what, ms,
                c.limit_ms, o.ok ? "" : ": ", o.detail.c_str());
  }
  return all ? 0 : 1;
}
