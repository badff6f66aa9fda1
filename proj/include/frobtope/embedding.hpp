#ifndef FROBTOPE_EMBEDDING_HPP
#define FROBTOPE_EMBEDDING_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "frobtope/frobenius.hpp"
#include "frobtope/linalg.hpp"
#include "frobtope/perm.hpp"

namespace frobtope {

using CountMatrix = Matrix<std::int64_t>;

/// The permutation matrix of a group element: x_ij = 1 iff source(j) = i.
class VertexMatrix
{
public:
  explicit VertexMatrix(Perm source);

  std::size_t n() const { return source_.degree(); }
  Perm const &source() const { return source_; }

  /// One-based indices, like the coordinates x_ij.
  int operator()(Point i, Point j) const { return source_(j) == i ? 1 : 0; }

  CountMatrix dense() const;
  /// Row-major flattening into R^{n·n}.
  RationalVector to_point() const;

private:
  Perm source_;
};

inline VertexMatrix to_matrix(Perm const &p) { return VertexMatrix(p); }

std::vector<VertexMatrix> vertex_matrices(FrobeniusSystem const &sys);

/// Entrywise sum over the coset complement[c]·N.
CountMatrix coset_sum(FrobeniusSystem const &sys, std::size_t coset_index);

/// Frobenius inner product; counts j with a.source(j) = b.source(j).
std::int64_t gram(VertexMatrix const &a, VertexMatrix const &b);

struct GramCensus
{
  std::size_t n = 0;
  std::size_t diagonal = 0;        // entries equal to n on the diagonal
  std::size_t same_coset_zero = 0; // distinct pairs inside one coset with value 0
  std::size_t cross_coset_one = 0; // pairs from different cosets with value 1
  std::size_t violations = 0;

  bool holds() const { return violations == 0; }
};

/// Full |G|×|G| table in coset-major element order.
CountMatrix gram_table(FrobeniusSystem const &sys);
GramCensus gram_census(FrobeniusSystem const &sys);

struct AffineRelationBasis
{
  /// Coefficient vectors indexed like the input vertex list.
  std::vector<RationalVector> relations;

  std::size_t rank() const { return relations.size(); }
};

struct AffineRank
{
  std::ptrdiff_t dim = -1;
  AffineRelationBasis basis;
};

/// dim = t − q − 1, where q is the dimension of the affine-relation space.
AffineRank affine_rank(std::span<const VertexMatrix> vertices);

/// Σ a_g·g = 0 and Σ a_g = 0, checked exactly.
bool is_affine_relation(std::span<const VertexMatrix> vertices,
                        RationalVector const &coefficients);

/// Basis must come from vertex_matrices(sys) (coset-major order).
bool relation_coset_constancy(AffineRelationBasis const &basis,
                              FrobeniusSystem const &sys);

/// True iff the relation space equals span{1_{coset c} − 1_{coset 0}}.
bool relations_span_coset_differences(AffineRelationBasis const &basis,
                                      FrobeniusSystem const &sys);

/// Vertex average of the whole group.
RationalMatrix barycenter(FrobeniusSystem const &sys);
RationalMatrix coset_barycenter(FrobeniusSystem const &sys, std::size_t coset_index);

/// ⟨g − 1/n, g′ − 1/n⟩ = 0 for every pair from different cosets.
bool coset_span_orthogonality(FrobeniusSystem const &sys);

} // namespace frobtope

#endif // FROBTOPE_EMBEDDING_HPP
