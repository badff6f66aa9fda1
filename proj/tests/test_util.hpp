#ifndef FROBTOPE_TEST_UTIL_HPP
#define FROBTOPE_TEST_UTIL_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "frobtope/frobenius.hpp"
#include "frobtope/perm.hpp"

namespace frobtope::test {

inline Perm random_perm(std::size_t n, std::mt19937 &rng)
{
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), 1u);
  std::shuffle(images.begin(), images.end(), rng);
  return Perm(images);
}

/// Systems every structural test sweeps over.
inline std::vector<FrobeniusSystem> small_systems()
{
  std::vector<FrobeniusSystem> out;
  out.push_back(build_dihedral(3));
  out.push_back(build_dihedral(5));
  out.push_back(build_dihedral(7));
  out.push_back(build_a4());
  out.push_back(build_pq(5, 2, 4));
  out.push_back(build_pq(7, 3, 2));
  out.push_back(build_cyclic(1));
  out.push_back(build_cyclic(4));
  out.push_back(build_cyclic(6));
  return out;
}

/// Index list from a bitmask over coset-major elements.
inline std::vector<std::size_t> members_of(std::uint64_t mask)
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1)
      out.push_back(i);
  }
  return out;
}

} // namespace frobtope::test

#endif // FROBTOPE_TEST_UTIL_HPP
