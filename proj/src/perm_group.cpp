#include "frobtope/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "frobtope/errors.hpp"

namespace frobtope {

bool PermGroup::contains(Perm const &p) const
{
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::optional<std::size_t> PermGroup::index_of(Perm const &p) const
{
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p)
    return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<Point> PermGroup::orbit_of_one() const
{
  std::vector<bool> hit(degree_ + 1, false);
  for (auto const &g : elements_)
    hit[g(1)] = true;
  std::vector<Point> orbit;
  for (Point i = 1; i <= degree_; ++i) {
    if (hit[i])
      orbit.push_back(i);
  }
  return orbit;
}

bool PermGroup::is_transitive() const
{
  return orbit_of_one().size() == degree_;
}

PermGroup generate_group(std::span<const Perm> gens, std::size_t degree,
                         std::size_t cap)
{
  if (degree == 0)
    throw std::invalid_argument("group degree must be positive");
  for (auto const &g : gens) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator " + g.to_string() +
                                  " has degree " + std::to_string(g.degree()) +
                                  ", expected " + std::to_string(degree));
  }

  PermGroup group;
  group.degree_ = degree;
  for (auto const &g : gens) {
    if (!g.is_identity() &&
        std::find(group.generators_.begin(), group.generators_.end(), g) ==
          group.generators_.end())
      group.generators_.push_back(g);
  }

  // Right-multiplying by generators reaches every element of a finite group;
  // inverses come for free since each element has finite order.
  std::unordered_set<Perm> seen;
  std::deque<Perm> queue;
  Perm id(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm current = std::move(queue.front());
    queue.pop_front();
    for (auto const &g : group.generators_) {
      Perm next = current * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw CapExceeded("group closure exceeds cap of " +
                            std::to_string(cap) + " elements");
        queue.push_back(std::move(next));
      }
    }
  }

  group.elements_.assign(seen.begin(), seen.end());
  std::sort(group.elements_.begin(), group.elements_.end());
  return group;
}

} // namespace frobtope
