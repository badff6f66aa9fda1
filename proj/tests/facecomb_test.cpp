#include <doctest.h>

#include <set>

#include "frobtope/errors.hpp"
#include "frobtope/facecomb.hpp"
#include "test_util.hpp"

using namespace frobtope;

namespace {

std::uint64_t choose(std::uint64_t n, std::uint64_t k)
{
  if (k > n)
    return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

// Independent count of proper faces by size: pick s_c < n elements from
// each of the h cosets, then f_{k} = #{size k+1}.
std::vector<std::uint64_t> proper_face_counts_by_size(std::size_t n, std::size_t h)
{
  std::vector<std::uint64_t> ways{1};
  for (std::size_t c = 0; c < h; ++c) {
    std::vector<std::uint64_t> next(ways.size() + n - 1, 0);
    for (std::size_t have = 0; have < ways.size(); ++have) {
      for (std::size_t s = 0; s < n; ++s)
        next[have + s] += ways[have] * choose(n, s);
    }
    ways = std::move(next);
  }
  return ways;
}

std::vector<BigInt> big(std::initializer_list<long> v)
{
  return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("is_proper_face and face_dim")
{
  auto d3 = build_dihedral(3);
  // coset-major: 0..2 the kernel {id,(123),(132)}, 3..5 the reflections
  CHECK(is_proper_face(d3, std::vector<std::size_t>{}));
  CHECK_FALSE(is_proper_face(d3, std::vector<std::size_t>{0, 1, 2}));
  CHECK(is_proper_face(d3, std::vector<std::size_t>{0, 1, 3}));
  CHECK(face_dim(d3, std::vector<std::size_t>{0, 1, 3}) == 2);

  CHECK(face_dim(d3, std::vector<std::size_t>{}) == -1);
  CHECK(face_dim(d3, std::vector<std::size_t>{4}) == 0);
  CHECK(face_dim(d3, std::vector<std::size_t>{0, 1, 3, 4}) == 3);
  CHECK_THROWS_AS(face_dim(d3, std::vector<std::size_t>{3, 4, 5}), std::invalid_argument);
  CHECK_THROWS_AS(is_proper_face(d3, std::vector<std::size_t>{6}), std::out_of_range);
}

TEST_CASE("facet enumeration")
{
  auto d3 = build_dihedral(3);
  auto facets = enumerate_facets(d3);
  REQUIRE(facets.size() == 9);
  CHECK(facets.front().members == std::vector<std::size_t>{1, 2, 4, 5});
  CHECK(facets.back().members == std::vector<std::size_t>{0, 1, 3, 4});
  for (auto const &f : facets) {
    CHECK(f.members.size() == 4);
    CHECK(f.dim == 3);
    CHECK(is_proper_face(d3, f.members));
  }
  CHECK(std::set<FaceDescriptor>(facets.begin(), facets.end()).size() == 9);

  for (std::size_t n = 1; n <= 6; ++n) {
    auto z = build_cyclic(n);
    auto zf = enumerate_facets(z);
    CHECK(zf.size() == n);
    for (auto const &f : zf)
      CHECK(f.members.size() == n - 1);
  }

  auto a4 = build_a4();
  FacetStream stream(a4);
  CHECK(stream.total() == 64);
  std::size_t count = 0;
  while (auto f = stream.next()) {
    CHECK(f->members.size() == 9);
    ++count;
  }
  CHECK(count == 64);
}

TEST_CASE("subsets of facets are proper faces")
{
  auto d3 = build_dihedral(3);
  for (auto const &f : enumerate_facets(d3)) {
    for (std::uint64_t mask = 0; mask < (1u << f.members.size()); ++mask) {
      std::vector<std::size_t> sub;
      for (std::size_t i = 0; i < f.members.size(); ++i) {
        if (mask >> i & 1)
          sub.push_back(f.members[i]);
      }
      CHECK(is_proper_face(d3, sub));
    }
  }
}

TEST_CASE("fvector from the generating function")
{
  CHECK(fvector(3, 2).counts() == big({1, 6, 15, 18, 9, 1}));
  CHECK(fvector(5, 1).counts() == big({1, 5, 10, 10, 5, 1}));
  auto a4 = fvector(4, 3);
  CHECK(a4.at(0) == 12);
  CHECK(a4.at(8) == 64);
  CHECK(a4.at(9) == 1);
  CHECK(fvector(1, 1).counts() == big({1, 1}));
  CHECK_THROWS_AS(fvector(0, 2), std::invalid_argument);

  // exceeds 64 bits
  auto large = fvector(12, 4);
  CHECK(large.at(large.top_dim() - 1) == BigInt(20736));
  CHECK(fvector(30, 6).at(100) > BigInt("18446744073709551615"));
}

TEST_CASE("fvector agrees with an independent subset count and Euler")
{
  for (std::size_t n = 1; n <= 12; ++n) {
    // a one-point kernel only occurs with a trivial complement
    for (std::size_t h = 1; h <= (n == 1 ? 1u : 4u); ++h) {
      CAPTURE(n);
      CAPTURE(h);
      auto f = fvector(n, h);
      auto top = static_cast<std::ptrdiff_t>((n - 1) * h);
      REQUIRE(f.top_dim() == top);
      CHECK(f.at(-1) == 1);
      CHECK(f.at(top) == 1);
      CHECK(f.at(0) == BigInt(n * h));
      if (top >= 1) {
        auto facets = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(h));
        CHECK(f.at(top - 1) == facets);
      }
      CHECK(f.euler_holds());

      auto by_size = proper_face_counts_by_size(n, h);
      for (std::ptrdiff_t k = -1; k < top; ++k)
        CHECK(f.at(k) == BigInt(by_size[static_cast<std::size_t>(k + 1)]));
    }
  }
}

TEST_CASE("count_faces_in_dim matches power-set enumeration")
{
  for (auto const &sys : test::small_systems()) {
    if (sys.order() > 12)
      continue;
    auto top = polytope_dim(sys);
    std::vector<std::uint64_t> counted(sys.order() + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sys.order()); ++mask) {
      auto members = test::members_of(mask);
      if (is_proper_face(sys, members))
        ++counted[members.size()];
    }
    for (std::ptrdiff_t k = -1; k < top; ++k)
      CHECK(count_faces_in_dim(sys, k) == BigInt(counted[static_cast<std::size_t>(k + 1)]));
    CHECK(count_faces_in_dim(sys, top) == 1);
    CHECK_THROWS_AS(count_faces_in_dim(sys, top + 1), std::out_of_range);
    CHECK_THROWS_AS(count_faces_in_dim(sys, -2), std::out_of_range);
  }

  auto d3 = build_dihedral(3);
  CHECK(count_faces_in_dim(d3, 1) == 15);
  CHECK(count_faces_in_dim(d3, 3) == 9);
}

TEST_CASE("enumerate_faces_of_dim")
{
  for (auto const &sys : test::small_systems()) {
    auto top = polytope_dim(sys);
    for (std::ptrdiff_t k = -1; k <= std::min<std::ptrdiff_t>(top, 4); ++k) {
      auto faces = enumerate_faces_of_dim(sys, k, 100000);
      CHECK(BigInt(faces.size()) == count_faces_in_dim(sys, k));
      CHECK(std::is_sorted(faces.begin(), faces.end()));
      for (auto const &f : faces) {
        CHECK(f.dim == k);
        if (k < top)
          CHECK(is_proper_face(sys, f.members));
      }
    }
  }
  CHECK_THROWS_AS(enumerate_faces_of_dim(build_pq(7, 3, 2), 5, 1000), CapExceeded);
}

TEST_CASE("free sums of f-vectors")
{
  auto segment = fvector(2, 1);
  std::vector<FVector> one{segment};
  CHECK(free_sum_lattice(one) == segment);

  std::vector<FVector> two{segment, segment};
  CHECK(free_sum_lattice(two).counts() == big({1, 4, 4, 1}));

  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t h = 1; h <= 4; ++h) {
      std::vector<FVector> parts(h, fvector(n, 1));
      CHECK(free_sum_lattice(parts) == fvector(n, h));
    }
  }

  auto tri = fvector(3, 1), sq = fvector(2, 2), oct = fvector(2, 3);
  std::vector<FVector> ab{tri, sq}, ba{sq, tri};
  CHECK(free_sum_lattice(ab) == free_sum_lattice(ba));
  std::vector<FVector> ab_c{free_sum_lattice(ab), oct};
  std::vector<FVector> bc{sq, oct};
  std::vector<FVector> a_bc{tri, free_sum_lattice(bc)};
  CHECK(free_sum_lattice(ab_c) == free_sum_lattice(a_bc));
  CHECK(free_sum_lattice(ab_c).euler_holds());
}

TEST_CASE("free sum nodes mirror subset containment")
{
  auto d3 = build_dihedral(3);
  std::vector<std::size_t> sizes(d3.h(), d3.n());
  std::vector<std::vector<std::size_t>> proper;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    auto members = test::members_of(mask);
    auto node = free_sum_node(d3, members);
    CHECK(node.is_top == !is_proper_face(d3, members));
    if (!node.is_top) {
      CHECK(free_sum_node_dim(node, sizes) == face_dim(d3, members));
      proper.push_back(members);
    } else {
      CHECK(free_sum_node_dim(node, sizes) == polytope_dim(d3));
    }
  }
  for (auto const &a : proper) {
    for (auto const &b : proper) {
      bool subset = std::includes(b.begin(), b.end(), a.begin(), a.end());
      CHECK(free_sum_leq(free_sum_node(d3, a), free_sum_node(d3, b)) == subset);
    }
  }
  FreeSumNode top{{}, true};
  CHECK(free_sum_leq(free_sum_node(d3, proper.back()), top));
  CHECK_FALSE(free_sum_leq(top, free_sum_node(d3, proper.back())));
}
