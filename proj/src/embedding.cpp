#include "frobtope/embedding.hpp"

#include <stdexcept>
#include <utility>

namespace frobtope {

VertexMatrix::VertexMatrix(Perm source)
: source_(std::move(source))
{}

CountMatrix VertexMatrix::dense() const
{
  CountMatrix m(n(), n());
  for (Point j = 1; j <= n(); ++j)
    m(source_(j) - 1, j - 1) = 1;
  return m;
}

RationalVector VertexMatrix::to_point() const
{
  RationalVector p(n() * n(), Rational(0));
  for (Point j = 1; j <= n(); ++j)
    p[(source_(j) - 1) * n() + (j - 1)] = 1;
  return p;
}

std::vector<VertexMatrix> vertex_matrices(FrobeniusSystem const &sys)
{
  std::vector<VertexMatrix> out;
  out.reserve(sys.order());
  for (auto const &g : sys.elements())
    out.emplace_back(g);
  return out;
}

CountMatrix coset_sum(FrobeniusSystem const &sys, std::size_t coset_index)
{
  if (coset_index >= sys.h())
    throw std::out_of_range("coset index out of range");
  auto const n = sys.n();
  CountMatrix sum(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    auto const &g = sys.element(sys.element_index({coset_index, k}));
    for (Point j = 1; j <= n; ++j)
      ++sum(g(j) - 1, j - 1);
  }
  return sum;
}

std::int64_t gram(VertexMatrix const &a, VertexMatrix const &b)
{
  if (a.n() != b.n())
    throw std::invalid_argument("gram: degree mismatch");
  std::int64_t agree = 0;
  for (Point j = 1; j <= a.n(); ++j)
    agree += a.source()(j) == b.source()(j);
  return agree;
}

CountMatrix gram_table(FrobeniusSystem const &sys)
{
  auto vs = vertex_matrices(sys);
  CountMatrix table(vs.size(), vs.size());
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a; b < vs.size(); ++b)
      table(a, b) = table(b, a) = gram(vs[a], vs[b]);
  }
  return table;
}

GramCensus gram_census(FrobeniusSystem const &sys)
{
  auto table = gram_table(sys);
  GramCensus census;
  census.n = sys.n();
  auto const n = static_cast<std::int64_t>(sys.n());
  for (std::size_t a = 0; a < table.rows(); ++a) {
    for (std::size_t b = 0; b < table.cols(); ++b) {
      auto v = table(a, b);
      if (a == b) {
        v == n ? ++census.diagonal : ++census.violations;
      } else if (sys.coset_of(a) == sys.coset_of(b)) {
        v == 0 ? ++census.same_coset_zero : ++census.violations;
      } else {
        v == 1 ? ++census.cross_coset_one : ++census.violations;
      }
    }
  }
  return census;
}

namespace {

// Rows: vertices; columns: the n² coordinates followed by a constant 1.
IntMatrix homogenized(std::span<const VertexMatrix> vertices)
{
  auto const n = vertices.front().n();
  IntMatrix m(vertices.size(), n * n + 1);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    auto const &g = vertices[v].source();
    for (Point j = 1; j <= n; ++j)
      m(v, (g(j) - 1) * n + (j - 1)) = 1;
    m(v, n * n) = 1;
  }
  return m;
}

} // namespace

AffineRank affine_rank(std::span<const VertexMatrix> vertices)
{
  if (vertices.empty())
    throw std::invalid_argument("affine_rank needs at least one vertex");
  for (auto const &v : vertices) {
    if (v.n() != vertices.front().n())
      throw std::invalid_argument("affine_rank: degree mismatch");
  }

  auto m = homogenized(vertices);
  auto r = rank(m);

  // Relations are the left kernel of the homogenized matrix.
  RationalMatrix transposed(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      transposed(j, i) = Rational(m(i, j));
  }

  AffineRank result;
  result.basis.relations = nullspace(std::move(transposed));
  result.dim = static_cast<std::ptrdiff_t>(vertices.size()) -
               static_cast<std::ptrdiff_t>(result.basis.rank()) - 1;
  if (static_cast<std::ptrdiff_t>(r) - 1 != result.dim)
    throw std::logic_error("affine_rank: rank and relation count disagree");
  return result;
}

bool is_affine_relation(std::span<const VertexMatrix> vertices,
                        RationalVector const &coefficients)
{
  if (vertices.empty() || coefficients.size() != vertices.size())
    return false;
  auto const n = vertices.front().n();
  RationalVector sum(n * n + 1, Rational(0));
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    auto const &g = vertices[v].source();
    for (Point j = 1; j <= n; ++j)
      sum[(g(j) - 1) * n + (j - 1)] += coefficients[v];
    sum[n * n] += coefficients[v];
  }
  for (auto const &s : sum) {
    if (s != 0)
      return false;
  }
  return true;
}

bool relation_coset_constancy(AffineRelationBasis const &basis,
                              FrobeniusSystem const &sys)
{
  for (auto const &a : basis.relations) {
    if (a.size() != sys.order())
      return false;
    for (std::size_t e = 0; e < a.size(); ++e) {
      auto first = sys.element_index({sys.coset_of(e), 0});
      if (a[e] != a[first])
        return false;
    }
  }
  return true;
}

bool relations_span_coset_differences(AffineRelationBasis const &basis,
                                      FrobeniusSystem const &sys)
{
  auto const t = sys.order();
  std::vector<RationalVector> diffs;
  for (std::size_t c = 1; c < sys.h(); ++c) {
    RationalVector d(t, Rational(0));
    for (std::size_t k = 0; k < sys.n(); ++k) {
      d[sys.element_index({c, k})] = 1;
      d[sys.element_index({0, k})] = -1;
    }
    diffs.push_back(std::move(d));
  }

  std::vector<RationalVector> both = basis.relations;
  both.insert(both.end(), diffs.begin(), diffs.end());

  auto rb = rank(from_rows(basis.relations, t));
  auto rd = rank(from_rows(diffs, t));
  auto rboth = rank(from_rows(both, t));
  return rb == rd && rd == rboth;
}

namespace {

RationalMatrix average(FrobeniusSystem const &sys, std::size_t first, std::size_t count)
{
  auto const n = sys.n();
  RationalMatrix avg(n, n);
  for (std::size_t e = first; e < first + count; ++e) {
    auto const &g = sys.element(e);
    for (Point j = 1; j <= n; ++j)
      avg(g(j) - 1, j - 1) += 1;
  }
  Rational scale(1, static_cast<long>(count));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      avg(i, j) *= scale;
  }
  return avg;
}

} // namespace

RationalMatrix barycenter(FrobeniusSystem const &sys)
{
  return average(sys, 0, sys.order());
}

RationalMatrix coset_barycenter(FrobeniusSystem const &sys, std::size_t coset_index)
{
  if (coset_index >= sys.h())
    throw std::out_of_range("coset index out of range");
  return average(sys, sys.element_index({coset_index, 0}), sys.n());
}

bool coset_span_orthogonality(FrobeniusSystem const &sys)
{
  auto const n = sys.n();
  Rational const center(1, static_cast<long>(n));
  std::vector<RationalVector> shifted;
  shifted.reserve(sys.order());
  for (auto const &g : sys.elements()) {
    RationalVector p(n * n, -center);
    for (Point j = 1; j <= n; ++j)
      p[(g(j) - 1) * n + (j - 1)] += 1;
    shifted.push_back(std::move(p));
  }
  for (std::size_t a = 0; a < shifted.size(); ++a) {
    for (std::size_t b = a + 1; b < shifted.size(); ++b) {
      if (sys.coset_of(a) == sys.coset_of(b))
        continue;
      Rational dot = 0;
      for (std::size_t k = 0; k < n * n; ++k)
        dot += shifted[a][k] * shifted[b][k];
      if (dot != 0)
        return false;
    }
  }
  return true;
}

} // namespace frobtope
