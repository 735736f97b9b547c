#include <doctest.h>

#include "monorel/pairing.hpp"
#include "monorel/sampling.hpp"
#include "monorel/subspace.hpp"
#include "support.hpp"

using namespace monorel;
using test::pt;

namespace {

const Point z1 = pt({0, 1}, {1, 1});
const Point z2 = pt({1, 1}, {1, 0});
const Point z3 = pt({1, 0}, {1, 0});

Subspace random_subspace(Rng& rng, std::size_t n) {
  const auto k = static_cast<std::size_t>(test::uniform(rng, 0, static_cast<long>(2 * n)));
  std::vector<Point> pts;
  for (std::size_t i = 0; i < k; ++i) pts.push_back(grid_point(rng, n, 2));
  return Subspace::span(n, pts);
}

}  // namespace

TEST_CASE("couple on the three-line cone generators") {
  CHECK(couple(z1, z2) == 2);
  CHECK(couple(z2, z3) == 2);
  CHECK(couple(z1, z3) == 1);
  CHECK(couple(z1, Point::zero(2)) == 0);
}

TEST_CASE("cval examples") {
  CHECK(cval(z1) == 1);
  CHECK(cval(z2) == 1);
  CHECK(cval(z3) == 1);
  CHECK(cval(pt({-1, -1}, {0, 1})) == -1);
  CHECK(cval(Point::zero(2)) == 0);
}

TEST_CASE("couple rejects mismatched dimensions") {
  CHECK_THROWS_AS(couple(pt({1}, {1}), z1), DimensionMismatch);
  CHECK_THROWS_AS(Point(Vec{1, 2}, Vec{1}), DimensionMismatch);
}

TEST_CASE("pairing matrix realizes couple and has inertia (n, 0, n)") {
  const Mat j = pairing_matrix(2);
  CHECK(j.is_symmetric());
  CHECK(inertia(j) == Inertia{2, 0, 2});
  CHECK(dot(z1.coordinates(), j * z2.coordinates()) == couple(z1, z2));
  CHECK(apply_pairing(z1.coordinates()) == j * z1.coordinates());
}

TEST_CASE("perp examples") {
  const Subspace a = test::span(1, {pt({1}, {0})});
  CHECK(perp(a) == a);
  CHECK(perp(Subspace::zero(1)) == Subspace::whole(1));
  CHECK(perp(Subspace::whole(1)) == Subspace::zero(1));
}

TEST_CASE("subspace canonical form does not depend on the spanning set") {
  const Subspace a = test::span(2, {z1, z2});
  const Subspace b = test::span(2, {z1 + z2, z1 - z2.scaled(3), z1});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.contains(z1.scaled(5) - z2));
  CHECK_FALSE(a.contains(z3));
  const auto coords = a.coordinates_of(z1 - z2);
  REQUIRE(coords.has_value());
  CHECK(a.point(*coords) == z1 - z2);
}

TEST_CASE("subspace intersection and sum") {
  const Subspace a = test::span(2, {z1, z2});
  const Subspace b = test::span(2, {z2, z3});
  CHECK(a.intersect(b) == test::span(2, {z2}));
  CHECK(a.sum(b) == test::span(2, {z1, z2, z3}));
  CHECK(a.with(z3) == a.sum(b));
  CHECK(test::span(1, {pt({1}, {2})}).negated_dual() == test::span(1, {pt({1}, {-2})}));
}

TEST_CASE("property: couple is symmetric and c is quadratic") {
  Rng rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<std::size_t>(test::uniform(rng, 1, 4));
    const Point z = grid_point(rng, n, 4);
    const Point w = grid_point(rng, n, 4);
    const Scalar t = grid_scalar(rng, 3);
    CHECK(couple(z, w) == couple(w, z));
    CHECK(cval(z.scaled(t)) == t * t * cval(z));
    CHECK(couple(z, z) == 2 * cval(z));
    CHECK(cval(z + w) == cval(z) + cval(w) + couple(z, w));
  }
}

TEST_CASE("property: perp is an inclusion reversing involution") {
  Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(test::uniform(rng, 1, 4));
    const Subspace a = random_subspace(rng, n);
    const Subspace pa = perp(a);
    CHECK(perp(pa) == a);
    CHECK(a.dim() + pa.dim() == 2 * n);
    for (const auto& z : a.basis_points())
      for (const auto& w : pa.basis_points()) CHECK(couple(z, w) == 0);

    const Subspace bigger = a.with(grid_point(rng, n, 2));
    CHECK(pa.contains(perp(bigger)));
  }
}

TEST_CASE("property: canonical form is stable under change of basis") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(test::uniform(rng, 1, 4));
    const Subspace a = random_subspace(rng, n);
    const Mat p = random_unimodular(rng, a.dim());
    CHECK(Subspace::column_span(n, a.basis() * p) == a);
    CHECK(Subspace::row_span(n, a.rows()) == a);
  }
}
