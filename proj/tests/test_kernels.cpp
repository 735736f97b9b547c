#include <doctest.h>

#include <omp.h>

#include "monorel/doublecone.hpp"
#include "monorel/oracle.hpp"
#include "monorel/probe.hpp"
#include "monorel/sampling.hpp"
#include "support.hpp"

using namespace monorel;

TEST_CASE("probe_rng streams depend only on seed and index") {
  Rng a = probe_rng(5, 17), b = probe_rng(5, 17), c = probe_rng(5, 18);
  CHECK(a() == b());
  CHECK(probe_rng(5, 17)() != c());
  CHECK(splitmix64(0) != splitmix64(1));
}

TEST_CASE("grid_scalar stays on the grid") {
  Rng rng(91);
  for (int i = 0; i < 2000; ++i) {
    const Scalar s = grid_scalar(rng, 3);
    CHECK(abs(s) <= 3);
    CHECK(s.get_den() <= 4);
  }
}

TEST_CASE("first_hit returns the lowest hit in both kernels") {
  Rng rng(92);
  for (int trial = 0; trial < 50; ++trial) {
    const auto count = static_cast<std::size_t>(test::uniform(rng, 0, 5000));
    const auto modulus = static_cast<std::size_t>(test::uniform(rng, 1, 4000));
    const auto offset = static_cast<std::size_t>(test::uniform(rng, 0, 6000));
    auto probe = [&](std::size_t i) -> std::optional<std::size_t> {
      if (i >= offset && (i - offset) % modulus == 0) return i * 3;
      return std::nullopt;
    };
    const auto s = serial::first_hit<std::size_t>(count, probe);
    const auto p = omp::first_hit<std::size_t>(count, probe);
    REQUIRE(s.has_value() == p.has_value());
    if (s) {
      CHECK(s->index == offset);
      CHECK(p->index == s->index);
      CHECK(p->witness == s->witness);
    }
  }
}

TEST_CASE("map agrees between kernels") {
  auto f = [](std::size_t i) {
    Rng rng = probe_rng(3, i);
    return to_string(grid_scalar(rng, 4));
  };
  CHECK(serial::map<std::string>(3000, f) == omp::map<std::string>(3000, f));
  CHECK(omp::map<int>(0, [](std::size_t) { return 1; }).empty());
}

TEST_CASE("in_plus probes agree between kernels") {
  Rng rng(93);
  for (int trial = 0; trial < 10; ++trial) {
    const auto n = static_cast<std::size_t>(test::uniform(rng, 1, 4));
    const FitzpatrickForm form(random_monotone(rng, n));
    auto probe = [&](std::size_t i) -> std::optional<Point> {
      Rng r = probe_rng(trial, i);
      Point z = grid_point(r, n, 2);
      if (form.in_plus(z) && !form.subspace().contains(z)) return z;
      return std::nullopt;
    };
    const auto s = serial::first_hit<Point>(2000, probe);
    const auto p = omp::first_hit<Point>(2000, probe);
    REQUIRE(s.has_value() == p.has_value());
    if (s) {
      CHECK(s->index == p->index);
      CHECK(s->witness == p->witness);
    }
    auto flag = [&](std::size_t i) {
      Rng r = probe_rng(trial, i);
      return form.in_plus(grid_point(r, n, 2)) ? 1 : 0;
    };
    CHECK(serial::map<int>(2000, flag) == omp::map<int>(2000, flag));
  }
}

TEST_CASE("classification does not depend on the thread count") {
  Rng rng(94);
  ProbeConfig cfg;
  cfg.samples = 3000;
  const int saved = omp_get_max_threads();
  for (int cone = 0; cone < 10; ++cone) {
    const DoubleCone d = random_monotone_cone(rng, 2, 4);
    omp_set_num_threads(1);
    const ClassificationReport a = dc_classify(d, cfg);
    omp_set_num_threads(4);
    const ClassificationReport b = dc_classify(d, cfg);
    CHECK(a.ni.value == b.ni.value);
    CHECK(a.ni.rule == b.ni.rule);
    CHECK(a.non_ni == b.non_ni);
    CHECK(a.non_unique == b.non_unique);
  }
  for (int trial = 0; trial < 10; ++trial) {
    const Subspace l = random_monotone(rng, 3);
    omp_set_num_threads(1);
    const MaximalProbe a = oracle_maximal_probe(l, cfg);
    omp_set_num_threads(4);
    const MaximalProbe b = oracle_maximal_probe(l, cfg);
    CHECK(a.passed == b.passed);
    CHECK(a.probes == b.probes);
    CHECK(a.witness == b.witness);
  }
  omp_set_num_threads(saved);
}
