#ifndef GROUPMIN_TESTS_TEST_UTIL_HPP
#define GROUPMIN_TESTS_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "groupmin/dfa.hpp"
#include "groupmin/perm.hpp"

namespace groupmin::test_util {

using Rng = std::mt19937_64;

inline std::size_t rand_index(Rng& rng, std::size_t n) { return rng() % n; }

inline Permutation random_permutation(Rng& rng, std::size_t degree) {
  std::vector<Point> im(degree);
  for (Point i = 0; i < degree; ++i) im[i] = i;
  for (std::size_t i = degree; i > 1; --i)
    std::swap(im[i - 1], im[rand_index(rng, i)]);
  return Permutation(std::move(im));
}

inline Transformation random_transformation(Rng& rng, std::size_t degree) {
  std::vector<Point> im(degree);
  for (Point i = 0; i < degree; ++i)
    im[i] = static_cast<Point>(rand_index(rng, degree));
  return Transformation(std::move(im));
}

inline std::vector<std::string> letter_names(std::size_t count) {
  static const std::vector<std::string> pool = {"a", "b", "c", "d"};
  return {pool.begin(), pool.begin() + count};
}

inline Dfa random_permutation_dfa(Rng& rng, std::size_t degree,
                                  std::size_t letter_count,
                                  std::vector<Point> finals) {
  std::vector<Transformation> delta;
  for (std::size_t l = 0; l < letter_count; ++l)
    delta.push_back(random_permutation(rng, degree));
  return Dfa(degree, letter_names(letter_count), std::move(delta),
             static_cast<Point>(rand_index(rng, degree)), std::move(finals));
}

inline std::vector<Point> random_nontrivial_subset(Rng& rng, std::size_t n) {
  while (true) {
    std::vector<Point> s;
    for (Point q = 0; q < n; ++q)
      if (rng() & 1) s.push_back(q);
    if (!s.empty() && s.size() < n) return s;
  }
}

}  // namespace groupmin::test_util

#endif
