#ifndef FROBTOPE_FACECOMB_HPP
#define FROBTOPE_FACECOMB_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "frobtope/frobenius.hpp"
#include "frobtope/linalg.hpp"
#include "frobtope/polynomial.hpp"

namespace frobtope {

/// Sorted coset-major element indices plus the face dimension.
struct FaceDescriptor
{
  std::vector<std::size_t> members;
  std::ptrdiff_t dim = -1;

  bool operator==(FaceDescriptor const &) const = default;
  auto operator<=>(FaceDescriptor const &) const = default;
};

/**
 * Face counts f_{-1}, f_0, ..., f_top. Stored with an offset so that
 * `at(-1)` is the empty face.
 */
class FVector
{
public:
  FVector() = default;
  explicit FVector(std::vector<BigInt> counts_from_minus_one);

  std::ptrdiff_t top_dim() const { return static_cast<std::ptrdiff_t>(counts_.size()) - 2; }
  BigInt const &at(std::ptrdiff_t k) const;
  std::vector<BigInt> const &counts() const { return counts_; }

  /// Σ_{k=0}^{top-1} (−1)^k f_k = 1 − (−1)^top.
  bool euler_holds() const;

  /// Σ_k f_k x^{k+1}
  BigPoly generating_polynomial() const;

  bool operator==(FVector const &) const = default;

private:
  std::vector<BigInt> counts_;
};

/// True iff X misses at least one element of every coset of N.
bool is_proper_face(FrobeniusSystem const &sys, std::span<const std::size_t> members);

/// |X| − 1; throws std::invalid_argument when X is not a proper face.
std::ptrdiff_t face_dim(FrobeniusSystem const &sys, std::span<const std::size_t> members);

/// (n − 1)·h
std::ptrdiff_t polytope_dim(FrobeniusSystem const &sys);

/**
 * Streams the n^h facets: complements of transversals, in lexicographic
 * order of the omitted kernel index per coset (coset 0 most significant).
 */
class FacetStream
{
public:
  explicit FacetStream(FrobeniusSystem const &sys);

  std::optional<FaceDescriptor> next();
  BigInt total() const;

private:
  FrobeniusSystem const *sys_;
  // omitted kernel index per coset for the next facet
  std::vector<std::size_t> omitted_;
  bool done_ = false;
};

std::vector<FaceDescriptor> enumerate_facets(FrobeniusSystem const &sys);

/// Coefficients of x^{(n−1)h+1} + ((1+x)^n − x^n)^h, shifted by one.
FVector fvector(std::size_t n, std::size_t h);

/// Throws std::out_of_range unless −1 ≤ k ≤ (n−1)h.
BigInt count_faces_in_dim(FrobeniusSystem const &sys, std::ptrdiff_t k);

/**
 * Proper faces of dimension k, generated coset by coset. Throws CapExceeded
 * if the count exceeds `cap`.
 */
std::vector<FaceDescriptor> enumerate_faces_of_dim(FrobeniusSystem const &sys,
                                                   std::ptrdiff_t k, std::size_t cap);

/// f-vector of a free sum: product of the proper-face polynomials plus the
/// top monomial x^{Σ dims + 1}.
FVector free_sum_lattice(std::span<const FVector> parts);

/**
 * An element of the product lattice of the summands modulo the top
 * identification. Each part is a bitmask of vertices of its summand
 * (never the full summand for non-top nodes).
 */
struct FreeSumNode
{
  std::vector<std::uint64_t> parts;
  bool is_top = false;

  bool operator==(FreeSumNode const &) const = default;
};

bool free_sum_leq(FreeSumNode const &a, FreeSumNode const &b);

/// For simplex summands; `part_sizes[i]` counts the vertices of summand i.
std::ptrdiff_t free_sum_node_dim(FreeSumNode const &node,
                                 std::span<const std::size_t> part_sizes);

/// Split a subset of G into its per-coset parts; a subset containing some
/// full coset maps to the top node. Requires n ≤ 64.
FreeSumNode free_sum_node(FrobeniusSystem const &sys, std::span<const std::size_t> members);

} // namespace frobtope

#endif // FROBTOPE_FACECOMB_HPP
