#include <doctest.h>

#include <cmath>

#include "monorel/oracle.hpp"
#include "monorel/sampling.hpp"
#include "support.hpp"

using namespace monorel;
using test::pt;
using test::span;

namespace {

const Subspace diag = span(1, {pt({1}, {1})});
const Subspace skew_line = span(1, {pt({1}, {0})});

ProbeConfig small(std::size_t samples) {
  ProbeConfig cfg;
  cfg.samples = samples;
  return cfg;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * (1 + std::abs(b)); }

}  // namespace

TEST_CASE("oracle_monotone_pairs examples") {
  const PointSource on_diag = [](Rng& rng) -> std::optional<Point> {
    const Scalar t = grid_scalar(rng, 4);
    return pt({t}, {t});
  };
  const ProbeOutcome ok = oracle_monotone_pairs(on_diag, small(1000));
  CHECK(ok.passed);
  CHECK(ok.probes == 1000);

  const PointSource axes = [](Rng& rng) -> std::optional<Point> {
    const Scalar t = grid_scalar(rng, 2);
    return test::uniform(rng, 0, 1) ? pt({t}, {0}) : pt({0}, {t});
  };
  const ProbeOutcome bad = oracle_monotone_pairs(axes, small(1000));
  CHECK_FALSE(bad.passed);
  REQUIRE(bad.witness.has_value());
  CHECK(cval(bad.witness->first - bad.witness->second) < 0);
  CHECK(cval(pt({1}, {0}) - pt({0}, {1})) == -1);

  const PointSource empty = [](Rng&) -> std::optional<Point> { return std::nullopt; };
  CHECK(oracle_monotone_pairs(empty, small(100)).passed);
}

TEST_CASE("oracle_fitz_sup examples") {
  const ProbeConfig cfg = small(200);
  const SupEstimate a = oracle_fitz_sup(diag, pt({1}, {3}), cfg);
  CHECK_FALSE(a.diverged);
  CHECK(close(a.value, 4.0, 1e-9));

  const SupEstimate b = oracle_fitz_sup(skew_line, pt({1}, {0}), cfg);
  CHECK_FALSE(b.diverged);
  CHECK(close(b.value, 0.0, 1e-9));

  const SupEstimate c = oracle_fitz_sup(skew_line, pt({1}, {1}), cfg);
  CHECK(c.diverged);
  CHECK(std::isinf(c.value));
}

TEST_CASE("property: oracle_fitz_sup matches the exact Fitzpatrick value") {
  Rng rng(71);
  const ProbeConfig cfg = small(200);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(test::uniform(rng, 1, 3));
    const Subspace l = random_monotone(rng, n);
    const Point z = trial % 2 ? grid_point(rng, n, 2) : test::sample_in(rng, fitz_dom(l), 2);
    const FitzValue exact = fitz_eval(l, z);
    const SupEstimate est = oracle_fitz_sup(l, z, cfg);
    if (exact.is_finite()) {
      const double v = to_double(exact.value());
      CHECK_FALSE(est.diverged);
      CHECK(est.value <= v + cfg.float_tolerance * (1 + std::abs(v)));
      CHECK(close(est.value, v, 1e-6));
    } else {
      CHECK(est.diverged);
    }
  }
}

TEST_CASE("oracle_maximal_probe examples") {
  const ProbeConfig cfg = small(1000);
  CHECK(oracle_maximal_probe(diag, cfg).passed);

  const MaximalProbe zero = oracle_maximal_probe(Subspace::zero(1), cfg);
  CHECK_FALSE(zero.passed);
  REQUIRE(zero.witness.has_value());
  CHECK(cval(*zero.witness) >= 0);
  CHECK_FALSE(zero.witness->is_zero());

  const Subspace rotation = span(2, {pt({1, 0}, {0, -1}), pt({0, 1}, {1, 0})});
  CHECK(oracle_maximal_probe(rotation, cfg).passed);
}

TEST_CASE("property: maximal probe never contradicts a maximal verdict") {
  Rng rng(72);
  const ProbeConfig cfg = small(300);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(test::uniform(rng, 1, 3));
    const Subspace l = random_monotone(rng, n);
    const MaximalProbe p = oracle_maximal_probe(l, cfg);
    if (classify(l).maximal.value) {
      CHECK(p.passed);
    } else if (!p.passed) {
      REQUIRE(p.witness.has_value());
      CHECK_FALSE(l.contains(*p.witness));
      CHECK(is_monotone(l.with(*p.witness)).monotone);
    }
  }
}

TEST_CASE("oracle_penot_cone examples") {
  const DoubleCone line(Subspace::zero(1), {pt({1}, {1})});
  CHECK(close(oracle_penot_cone(line, pt({2}, {2})).value, 4.0, 1e-9));
  CHECK_THROWS_AS(oracle_penot_cone(line, pt({1}, {0})), Infeasible);
  CHECK(close(oracle_penot_cone(line, pt({0}, {0})).value, 0.0, 1e-9));
  CHECK_THROWS_AS(oracle_penot_cone(DoubleCone(Subspace::zero(1), {pt({1}, {-1})}), pt({0}, {0})),
                  std::invalid_argument);
}

TEST_CASE("property: oracle_penot_cone matches penot_eval on subspace-shaped cones") {
  Rng rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(test::uniform(rng, 1, 3));
    const Point g = grid_point(rng, n, 2);
    if (cval(g) <= 0) continue;
    const DoubleCone d(Subspace::zero(n), {g});
    const Subspace l = span(n, {g});
    const Point z = g.scaled(grid_scalar(rng, 3));
    const PenotEstimate est = oracle_penot_cone(d, z);
    CHECK(close(est.value, to_double(penot_eval(l, z).value()), 1e-6));
    CHECK(est.residual < 1e-9);
  }
}

TEST_CASE("property: Penot dominates Fitzpatrick on cones") {
  Rng rng(74);
  for (int cone = 0; cone < 30; ++cone) {
    const auto n = static_cast<std::size_t>(test::uniform(rng, 1, 3));
    const DoubleCone d = random_monotone_cone(rng, n, 4);
    const Subspace hull = dc_lin_hull(d);
    for (int k = 0; k < 10; ++k) {
      const Point z = test::sample_in(rng, hull, 2);
      const PenotEstimate psi = oracle_penot_cone(d, z);
      const FitzValue phi = dc_fitz_eval(d, z);
      if (!phi.is_finite()) continue;
      const double p = to_double(phi.value());
      CHECK(p <= psi.value + 1e-6 * (1 + std::abs(psi.value)));
      // psi >= c on cones too, since psi is the smallest representative
      CHECK(to_double(cval(z)) <= psi.value + 1e-6 * (1 + std::abs(psi.value)));
    }
    for (const auto& g : d.generators()) CHECK(close(oracle_penot_cone(d, g.z).value, to_double(g.c), 1e-6));
  }
}
