#ifndef FROBTOPE_FROBENIUS_HPP
#define FROBTOPE_FROBENIUS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frobtope/perm.hpp"
#include "frobtope/perm_group.hpp"

namespace frobtope {

struct FrobeniusVerdict
{
  enum class Kind { frobenius, regular, not_frobenius };

  Kind kind = Kind::not_frobenius;
  std::string reason;
  /// Violating element, or for an intransitive action a point outside the
  /// orbit of 1.
  std::optional<Perm> witness_element;
  std::optional<Point> witness_point;

  bool accepted() const { return kind != Kind::not_frobenius; }
  std::string witness_string() const;
};

std::string to_string(FrobeniusVerdict::Kind kind);

/// Total: classifies any nonempty group.
FrobeniusVerdict check_frobenius(PermGroup const &group);

/// Position of g = h·ν in the factorization G = H·N.
struct CosetIndex
{
  std::size_t complement;
  std::size_t kernel;

  bool operator==(CosetIndex const &) const = default;
};

/**
 * A Frobenius (or regular) group together with its kernel N, the complement
 * H = stabilizer of point 1, and the factorization of every element as h·ν.
 *
 * Elements are additionally indexed coset-major: index c·n + k holds
 * complement[c] · kernel[k], so the coset complement[c]·N occupies the
 * contiguous index range [c·n, (c+1)·n). All face subsets use this indexing.
 */
class FrobeniusSystem
{
public:
  PermGroup const &group() const { return group_; }

  /// Kernel size, which equals the number of points.
  std::size_t n() const { return kernel_.size(); }
  /// Complement size (number of cosets of N).
  std::size_t h() const { return complement_.size(); }
  std::size_t order() const { return elements_.size(); }
  bool is_regular() const { return complement_.size() == 1; }

  std::span<const Perm> kernel() const { return kernel_; }
  std::span<const Perm> complement() const { return complement_; }

  /// Coset-major element list.
  std::span<const Perm> elements() const { return elements_; }
  Perm const &element(std::size_t index) const { return elements_[index]; }
  std::size_t coset_of(std::size_t index) const { return index / n(); }
  std::size_t element_index(CosetIndex ci) const { return ci.complement * n() + ci.kernel; }

  /// Parallel to group().elements().
  std::span<const CosetIndex> coset_table() const { return coset_table_; }
  CosetIndex factor(Perm const &g) const;

private:
  friend FrobeniusSystem build_frobenius_system(PermGroup const &);

  PermGroup group_;
  std::vector<Perm> kernel_;
  std::vector<Perm> complement_;
  std::vector<Perm> elements_;
  std::vector<CosetIndex> coset_table_;
};

/// Throws NotFrobenius (with witness) when check_frobenius rejects the group.
FrobeniusSystem build_frobenius_system(PermGroup const &group);

/// Dihedral group of the regular n-gon, n odd and at least 3. Even n ≥ 4
/// raises NotFrobenius; n < 3 raises std::invalid_argument.
FrobeniusSystem build_dihedral(std::size_t n);

/// Z/p ⋊ Z/q on p points via x ↦ x+1 and x ↦ u·x.
FrobeniusSystem build_pq(std::uint64_t p, std::uint64_t q, std::uint64_t u);

/// A4 = <(123), (12)(34)> on four points.
FrobeniusSystem build_a4();

/// Z/n acting regularly on itself by translation.
FrobeniusSystem build_cyclic(std::size_t n);

/**
 * True iff for every i, j and every coset, exactly one element of the coset
 * maps j to i. `table[e]` gives the coset of `elements[e]`.
 */
bool star_property_check(std::span<const Perm> elements,
                         std::span<const CosetIndex> table,
                         std::size_t cosets);

bool star_property_check(FrobeniusSystem const &sys);

bool is_prime(std::uint64_t p);
std::uint64_t multiplicative_order(std::uint64_t u, std::uint64_t p);

} // namespace frobtope

#endif // FROBTOPE_FROBENIUS_HPP
