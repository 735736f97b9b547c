#include "monorel/probe.hpp"

namespace monorel {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Scalar grid_scalar(Rng& rng, const Scalar& radius) {
  std::uniform_int_distribution<long> den_dist(1, 4);
  const long q = den_dist(rng);
  // floor(radius * q) as the numerator bound
  const mpz_class bound_z = (radius.get_num() * q) / radius.get_den();
  const long bound = bound_z.get_si();
  std::uniform_int_distribution<long> num_dist(-bound, bound);
  Scalar s(num_dist(rng), q);
  s.canonicalize();
  return s;
}

Vec grid_vector(Rng& rng, std::size_t len, const Scalar& radius) {
  Vec v(len);
  for (auto& e : v) e = grid_scalar(rng, radius);
  return v;
}

Point grid_point(Rng& rng, std::size_t n, const Scalar& radius) {
  Vec x = grid_vector(rng, n, radius);
  Vec y = grid_vector(rng, n, radius);
  return Point(std::move(x), std::move(y));
}

}  // namespace monorel
