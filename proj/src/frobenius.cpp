#include "frobtope/frobenius.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "frobtope/errors.hpp"

namespace frobtope {

std::string to_string(FrobeniusVerdict::Kind kind)
{
  switch (kind) {
  case FrobeniusVerdict::Kind::frobenius: return "frobenius";
  case FrobeniusVerdict::Kind::regular: return "regular";
  case FrobeniusVerdict::Kind::not_frobenius: return "not_frobenius";
  }
  return "unknown";
}

std::string FrobeniusVerdict::witness_string() const
{
  if (witness_element)
    return witness_element->to_cycle_string() + " = [" + witness_element->to_string() + "]";
  if (witness_point)
    return "point " + std::to_string(*witness_point);
  return {};
}

FrobeniusVerdict check_frobenius(PermGroup const &group)
{
  FrobeniusVerdict verdict;

  if (!group.is_transitive()) {
    auto orbit = group.orbit_of_one();
    Point missing = 1;
    while (std::binary_search(orbit.begin(), orbit.end(), missing))
      ++missing;
    verdict.reason = "action is not transitive";
    verdict.witness_point = missing;
    return verdict;
  }

  bool any_fixed = false;
  for (auto const &g : group.elements()) {
    if (g.is_identity())
      continue;
    auto fixed = g.fixed_point_count();
    if (fixed >= 2) {
      verdict.reason = "non-identity element fixes " + std::to_string(fixed) + " points";
      verdict.witness_element = g;
      return verdict;
    }
    any_fixed |= fixed == 1;
  }

  verdict.kind = any_fixed ? FrobeniusVerdict::Kind::frobenius
                           : FrobeniusVerdict::Kind::regular;
  return verdict;
}

CosetIndex FrobeniusSystem::factor(Perm const &g) const
{
  auto idx = group_.index_of(g);
  if (!idx)
    throw std::invalid_argument("element " + g.to_string() + " is not in the group");
  return coset_table_[*idx];
}

FrobeniusSystem build_frobenius_system(PermGroup const &group)
{
  auto verdict = check_frobenius(group);
  if (!verdict.accepted())
    throw NotFrobenius(verdict.reason, verdict.witness_string());

  FrobeniusSystem sys;
  sys.group_ = group;
  // group elements are already sorted lexicographically, identity first
  for (auto const &g : group.elements()) {
    if (g.is_identity() || g.fixed_point_count() == 0)
      sys.kernel_.push_back(g);
    if (g(1) == 1)
      sys.complement_.push_back(g);
  }

  auto const n = group.degree();
  if (sys.kernel_.size() != n || sys.kernel_.size() * sys.complement_.size() != group.order())
    throw NotFrobenius("kernel does not act regularly", std::to_string(sys.kernel_.size()) +
                       " kernel elements on " + std::to_string(n) + " points");

  auto in_kernel = [&](Perm const &p) {
    return std::binary_search(sys.kernel_.begin(), sys.kernel_.end(), p);
  };

  for (auto const &g : group.elements()) {
    for (auto const &nu : sys.kernel_) {
      Perm conj = g * nu * g.inverse();
      if (!in_kernel(conj))
        throw NotFrobenius("kernel is not normal", conj.to_string());
    }
  }

  sys.coset_table_.reserve(group.order());
  for (auto const &g : group.elements()) {
    std::optional<CosetIndex> found;
    for (std::size_t c = 0; c < sys.complement_.size(); ++c) {
      Perm nu = sys.complement_[c].inverse() * g;
      auto it = std::lower_bound(sys.kernel_.begin(), sys.kernel_.end(), nu);
      if (it != sys.kernel_.end() && *it == nu) {
        if (found)
          throw NotFrobenius("factorization g = h·v is not unique", g.to_string());
        found = CosetIndex{c, static_cast<std::size_t>(it - sys.kernel_.begin())};
      }
    }
    if (!found)
      throw NotFrobenius("element does not factor as h·v", g.to_string());
    sys.coset_table_.push_back(*found);
  }

  sys.elements_.reserve(group.order());
  for (auto const &h : sys.complement_) {
    for (auto const &nu : sys.kernel_)
      sys.elements_.push_back(h * nu);
  }
  return sys;
}

bool is_prime(std::uint64_t p)
{
  if (p < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0)
      return false;
  }
  return true;
}

std::uint64_t multiplicative_order(std::uint64_t u, std::uint64_t p)
{
  u %= p;
  if (u == 0)
    return 0;
  std::uint64_t x = u;
  for (std::uint64_t k = 1; k <= p; ++k) {
    if (x == 1)
      return k;
    x = (x * u) % p;
  }
  return 0;
}

namespace {

Perm affine_map(std::uint64_t n, std::uint64_t mul, std::uint64_t add)
{
  std::vector<Point> images(n);
  for (std::uint64_t x = 0; x < n; ++x)
    images[x] = static_cast<Point>((mul * x + add) % n + 1);
  return Perm(images);
}

} // namespace

FrobeniusSystem build_dihedral(std::size_t n)
{
  if (n < 3)
    throw std::invalid_argument("dihedral group needs n >= 3, got " + std::to_string(n));
  Perm rotation = affine_map(n, 1, 1);
  Perm reflection = affine_map(n, n - 1, 0);
  std::vector<Perm> gens{rotation, reflection};
  return build_frobenius_system(generate_group(gens, n));
}

FrobeniusSystem build_pq(std::uint64_t p, std::uint64_t q, std::uint64_t u)
{
  if (!is_prime(p) || !is_prime(q))
    throw std::invalid_argument("pq construction needs primes p and q");
  if (p % q != 1)
    throw std::invalid_argument("p = " + std::to_string(p) + " is not 1 mod q = " +
                                std::to_string(q));
  auto ord = multiplicative_order(u, p);
  if (ord != q)
    throw std::invalid_argument(std::to_string(u) + " has multiplicative order " +
                                std::to_string(ord) + " mod " + std::to_string(p) +
                                ", expected " + std::to_string(q));
  std::vector<Perm> gens{affine_map(p, 1, 1), affine_map(p, u % p, 0)};
  return build_frobenius_system(generate_group(gens, p));
}

FrobeniusSystem build_a4()
{
  std::vector<Perm> gens{Perm::from_cycles(4, {{1, 2, 3}}),
                         Perm::from_cycles(4, {{1, 2}, {3, 4}})};
  return build_frobenius_system(generate_group(gens, 4));
}

FrobeniusSystem build_cyclic(std::size_t n)
{
  if (n == 0)
    throw std::invalid_argument("cyclic group needs n >= 1");
  std::vector<Perm> gens{affine_map(n, 1, 1)};
  return build_frobenius_system(generate_group(gens, n));
}

bool star_property_check(std::span<const Perm> elements,
                         std::span<const CosetIndex> table,
                         std::size_t cosets)
{
  if (elements.empty() || elements.size() != table.size())
    return false;
  auto const n = elements.front().degree();
  // hits[c][i][j] = #{g in coset c : g(j) = i}
  std::vector<std::size_t> hits(cosets * n * n, 0);
  for (std::size_t e = 0; e < elements.size(); ++e) {
    auto c = table[e].complement;
    if (c >= cosets)
      return false;
    for (Point j = 1; j <= n; ++j)
      ++hits[(c * n + (elements[e](j) - 1)) * n + (j - 1)];
  }
  return std::all_of(hits.begin(), hits.end(), [](std::size_t v) { return v == 1; });
}

bool star_property_check(FrobeniusSystem const &sys)
{
  return star_property_check(sys.group().elements(), sys.coset_table(), sys.h());
}

} // namespace frobtope
