#ifndef FROBTOPE_ORACLE_HPP
#define FROBTOPE_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frobtope/embedding.hpp"
#include "frobtope/facecomb.hpp"
#include "frobtope/frobenius.hpp"
#include "frobtope/linalg.hpp"

namespace frobtope::oracle {

// Brute-force exact geometry on explicit point sets. Nothing in here uses
// the coset structure of a Frobenius group except verify_theorem, which
// compares the geometric answers with the combinatorial ones.

inline constexpr std::size_t default_vertex_cap = 14;
inline constexpr std::uint64_t default_combination_cap = 1'000'000;
inline constexpr std::size_t default_face_cap = 1'000'000;

using PointSet = std::vector<RationalVector>;
using VertexSet = std::vector<std::size_t>;

PointSet points_of(FrobeniusSystem const &sys);
PointSet points_of(std::span<const VertexMatrix> vertices);

/// A(p) = constant + Σ coefficients[k]·p[k]
struct AffineFunctional
{
  Rational constant;
  RationalVector coefficients;

  Rational operator()(RationalVector const &p) const;
  bool is_zero() const;
};

/// Exact dimension of the affine span; −1 for no points.
std::ptrdiff_t affine_hull_dim(PointSet const &points);
std::ptrdiff_t affine_hull_dim(PointSet const &points, std::span<const std::size_t> subset);

/**
 * A functional vanishing on `subset` and strictly positive on every other
 * point, or nullopt when none exists. When `subset` is everything, returns a
 * nonzero functional vanishing on the affine hull if the hull is not the
 * whole space.
 */
std::optional<AffineFunctional> find_supporting_functional(PointSet const &points,
                                                           std::span<const std::size_t> subset);

bool verify_vertex(PointSet const &points, std::size_t index);

/**
 * All facets found from scratch: every affinely independent d-subset spans a
 * candidate hyperplane inside the affine hull; one-sided candidates
 * contribute their zero-set. Sorted, deduplicated.
 */
std::vector<VertexSet> brute_force_facets(PointSet const &points,
                                          std::size_t vertex_cap = default_vertex_cap,
                                          std::uint64_t combination_cap = default_combination_cap);

struct VertexFacetIncidence
{
  std::size_t vertex_count = 0;
  /// One bitmask row per facet; requires at most 64 vertices.
  std::vector<std::uint64_t> rows;

  static VertexFacetIncidence from_facets(std::vector<VertexSet> const &facets,
                                          std::size_t vertex_count);
};

struct OracleFace
{
  std::uint64_t members = 0;
  std::ptrdiff_t dim = -1;
};

struct FaceLattice
{
  std::vector<OracleFace> faces; // sorted by (dim, members)
  FVector fvector;
};

/// Closes facet rows under intersection, adds ∅ and the full set, and assigns
/// each face the dimension of its affine hull.
FaceLattice face_lattice_from_incidence(VertexFacetIncidence const &incidence,
                                        PointSet const &points,
                                        std::size_t face_cap = default_face_cap);

/// Every face of dimension top − 2 lies in exactly two facets.
bool ridge_property(FaceLattice const &lattice, VertexFacetIncidence const &incidence);

/// Facet vertices are affinely independent, checked directly on the points.
bool is_simplex(PointSet const &points, std::span<const std::size_t> members);

/**
 * Affine independence of a vertex subset S read off an exact relation basis
 * of the whole vertex set: S is independent iff no nonzero relation is
 * supported inside S.
 */
bool is_simplex(AffineRelationBasis const &basis, std::span<const std::size_t> members);

struct Check
{
  std::string name;
  bool pass = false;
  std::string witness;
};

struct TheoremReport
{
  std::vector<Check> checks;
  FVector fvector_oracle;
  FVector fvector_formula;
  std::size_t facet_count = 0;
  RationalMatrix barycenter;

  bool all_pass() const;
};

/// Throws CapExceeded when |G| exceeds `vertex_cap`.
TheoremReport verify_theorem(FrobeniusSystem const &sys,
                             std::size_t vertex_cap = default_vertex_cap);

} // namespace frobtope::oracle

#endif // FROBTOPE_ORACLE_HPP
