#include "frobtope/facecomb.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "frobtope/errors.hpp"

namespace frobtope {

FVector::FVector(std::vector<BigInt> counts_from_minus_one)
: counts_(std::move(counts_from_minus_one))
{
  if (counts_.empty())
    throw std::invalid_argument("f-vector needs at least the empty face");
}

BigInt const &FVector::at(std::ptrdiff_t k) const
{
  if (k < -1 || k > top_dim())
    throw std::out_of_range("face dimension " + std::to_string(k) + " out of range");
  return counts_[static_cast<std::size_t>(k + 1)];
}

bool FVector::euler_holds() const
{
  auto const top = top_dim();
  BigInt alternating = 0;
  for (std::ptrdiff_t k = 0; k < top; ++k)
    alternating += (k % 2 == 0) ? at(k) : BigInt(-at(k));
  BigInt rhs = (top % 2 == 0) ? 0 : 2;
  return alternating == rhs;
}

BigPoly FVector::generating_polynomial() const
{
  return BigPoly(counts_);
}

bool is_proper_face(FrobeniusSystem const &sys, std::span<const std::size_t> members)
{
  std::vector<std::size_t> per_coset(sys.h(), 0);
  std::vector<bool> seen(sys.order(), false);
  for (auto e : members) {
    if (e >= sys.order())
      throw std::out_of_range("element index " + std::to_string(e) + " out of range");
    if (seen[e])
      continue;
    seen[e] = true;
    ++per_coset[sys.coset_of(e)];
  }
  return std::all_of(per_coset.begin(), per_coset.end(),
                     [&](std::size_t c) { return c < sys.n(); });
}

std::ptrdiff_t face_dim(FrobeniusSystem const &sys, std::span<const std::size_t> members)
{
  if (!is_proper_face(sys, members))
    throw std::invalid_argument("subset contains a full coset and is not a proper face");
  std::vector<std::size_t> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return static_cast<std::ptrdiff_t>(sorted.size()) - 1;
}

std::ptrdiff_t polytope_dim(FrobeniusSystem const &sys)
{
  return static_cast<std::ptrdiff_t>((sys.n() - 1) * sys.h());
}

FacetStream::FacetStream(FrobeniusSystem const &sys)
: sys_(&sys), omitted_(sys.h(), 0)
{}

std::optional<FaceDescriptor> FacetStream::next()
{
  if (done_)
    return std::nullopt;

  auto const n = sys_->n();
  FaceDescriptor facet;
  facet.members.reserve(sys_->order() - sys_->h());
  for (std::size_t c = 0; c < sys_->h(); ++c) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k != omitted_[c])
        facet.members.push_back(sys_->element_index({c, k}));
    }
  }
  facet.dim = polytope_dim(*sys_) - 1;

  // odometer, last coset fastest
  std::size_t c = sys_->h();
  while (c > 0) {
    --c;
    if (++omitted_[c] < n)
      break;
    omitted_[c] = 0;
    if (c == 0)
      done_ = true;
  }
  return facet;
}

BigInt FacetStream::total() const
{
  return boost::multiprecision::pow(BigInt(sys_->n()), static_cast<unsigned>(sys_->h()));
}

std::vector<FaceDescriptor> enumerate_facets(FrobeniusSystem const &sys)
{
  std::vector<FaceDescriptor> out;
  FacetStream stream(sys);
  while (auto f = stream.next())
    out.push_back(std::move(*f));
  return out;
}

FVector fvector(std::size_t n, std::size_t h)
{
  if (n == 0 || h == 0)
    throw std::invalid_argument("fvector needs n >= 1 and h >= 1");
  auto const top = (n - 1) * h;
  BigPoly proper = (BigPoly::binomial(n) - BigPoly::monomial(n)).pow(h);
  BigPoly full = proper + BigPoly::monomial(top + 1);
  std::vector<BigInt> counts(top + 2);
  for (std::size_t k = 0; k < counts.size(); ++k)
    counts[k] = full.coeff(k);
  return FVector(std::move(counts));
}

BigInt count_faces_in_dim(FrobeniusSystem const &sys, std::ptrdiff_t k)
{
  return fvector(sys.n(), sys.h()).at(k);
}

namespace {

// Choose, for each coset in turn, a subset of at most n − 1 kernel indices.
void faces_rec(FrobeniusSystem const &sys, std::size_t coset, std::size_t remaining,
               std::size_t start, std::size_t taken_in_coset,
               std::vector<std::size_t> &current, std::vector<FaceDescriptor> &out)
{
  auto const n = sys.n();
  if (coset == sys.h()) {
    if (remaining == 0)
      out.push_back({current, static_cast<std::ptrdiff_t>(current.size()) - 1});
    return;
  }
  // capacity left in this and later cosets
  std::size_t capacity = (n - 1 - taken_in_coset) + (sys.h() - coset - 1) * (n - 1);
  if (remaining > capacity)
    return;

  faces_rec(sys, coset + 1, remaining, 0, 0, current, out);
  if (remaining == 0 || taken_in_coset == n - 1)
    return;
  for (std::size_t k = start; k < n; ++k) {
    current.push_back(sys.element_index({coset, k}));
    faces_rec(sys, coset, remaining - 1, k + 1, taken_in_coset + 1, current, out);
    current.pop_back();
  }
}

} // namespace

std::vector<FaceDescriptor> enumerate_faces_of_dim(FrobeniusSystem const &sys,
                                                   std::ptrdiff_t k, std::size_t cap)
{
  auto count = count_faces_in_dim(sys, k);
  if (count > cap)
    throw CapExceeded(count.str() + " faces of dimension " + std::to_string(k) +
                      " exceed cap of " + std::to_string(cap));
  if (k == polytope_dim(sys)) {
    FaceDescriptor all{{}, k};
    for (std::size_t e = 0; e < sys.order(); ++e)
      all.members.push_back(e);
    return {all};
  }
  std::vector<FaceDescriptor> out;
  std::vector<std::size_t> current;
  faces_rec(sys, 0, static_cast<std::size_t>(k + 1), 0, 0, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

FVector free_sum_lattice(std::span<const FVector> parts)
{
  if (parts.empty())
    throw std::invalid_argument("free sum needs at least one part");
  BigPoly product = BigPoly::monomial(0);
  std::size_t dims = 0;
  for (auto const &part : parts) {
    auto top = part.top_dim();
    BigPoly proper = part.generating_polynomial() -
                     BigPoly::monomial(static_cast<std::size_t>(top + 1), part.at(top));
    product = product * proper;
    dims += static_cast<std::size_t>(std::max<std::ptrdiff_t>(top, 0));
  }
  BigPoly full = product + BigPoly::monomial(dims + 1);
  std::vector<BigInt> counts(dims + 2);
  for (std::size_t k = 0; k < counts.size(); ++k)
    counts[k] = full.coeff(k);
  return FVector(std::move(counts));
}

bool free_sum_leq(FreeSumNode const &a, FreeSumNode const &b)
{
  if (b.is_top)
    return true;
  if (a.is_top)
    return false;
  if (a.parts.size() != b.parts.size())
    throw std::invalid_argument("free sum nodes from different lattices");
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    if ((a.parts[i] & ~b.parts[i]) != 0)
      return false;
  }
  return true;
}

std::ptrdiff_t free_sum_node_dim(FreeSumNode const &node,
                                 std::span<const std::size_t> part_sizes)
{
  if (node.is_top) {
    std::ptrdiff_t total = 0;
    for (auto s : part_sizes)
      total += static_cast<std::ptrdiff_t>(s) - 1;
    return total;
  }
  // iterated dim F1 + dim F2 + 1
  std::ptrdiff_t total = static_cast<std::ptrdiff_t>(node.parts.size()) - 1;
  for (auto mask : node.parts)
    total += static_cast<std::ptrdiff_t>(std::popcount(mask)) - 1;
  return total;
}

FreeSumNode free_sum_node(FrobeniusSystem const &sys, std::span<const std::size_t> members)
{
  if (sys.n() > 64)
    throw std::invalid_argument("free_sum_node supports at most 64 points");
  FreeSumNode node;
  node.parts.assign(sys.h(), 0);
  for (auto e : members) {
    if (e >= sys.order())
      throw std::out_of_range("element index out of range");
    node.parts[sys.coset_of(e)] |= std::uint64_t{1} << (e % sys.n());
  }
  auto const full = sys.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << sys.n()) - 1;
  if (std::any_of(node.parts.begin(), node.parts.end(),
                  [&](std::uint64_t m) { return m == full; })) {
    node.parts.clear();
    node.is_top = true;
  }
  return node;
}

} // namespace frobtope
