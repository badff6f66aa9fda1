#ifndef FROBTOPE_PERM_GROUP_HPP
#define FROBTOPE_PERM_GROUP_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "frobtope/perm.hpp"

namespace frobtope {

inline constexpr std::size_t default_group_cap = 20000;

/**
 * A finite permutation group stored as its full, sorted element list.
 *
 * Construct through generate_group(); the element list is then closed under
 * composition and inversion and contains the identity.
 */
class PermGroup
{
public:
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }

  /// Sorted lexicographically by one-line notation; identity first.
  std::span<const Perm> elements() const { return elements_; }
  std::span<const Perm> generators() const { return generators_; }

  bool contains(Perm const &p) const;
  std::optional<std::size_t> index_of(Perm const &p) const;

  /// Points reachable from 1.
  std::vector<Point> orbit_of_one() const;
  bool is_transitive() const;

private:
  friend PermGroup generate_group(std::span<const Perm>, std::size_t, std::size_t);

  std::size_t degree_ = 1;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
};

/**
 * Breadth-first closure of `gens` under composition. Throws
 * std::invalid_argument if a generator has the wrong degree and CapExceeded
 * once more than `cap` elements have been found.
 */
PermGroup generate_group(std::span<const Perm> gens, std::size_t degree,
                         std::size_t cap = default_group_cap);

} // namespace frobtope

#endif // FROBTOPE_PERM_GROUP_HPP
