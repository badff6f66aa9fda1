#include "frobtope/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "frobtope/errors.hpp"
#include "frobtope/lp.hpp"

namespace frobtope::oracle {

PointSet points_of(std::span<const VertexMatrix> vertices)
{
  PointSet out;
  out.reserve(vertices.size());
  for (auto const &v : vertices)
    out.push_back(v.to_point());
  return out;
}

PointSet points_of(FrobeniusSystem const &sys)
{
  auto vs = vertex_matrices(sys);
  return points_of(vs);
}

Rational AffineFunctional::operator()(RationalVector const &p) const
{
  if (p.size() != coefficients.size())
    throw std::invalid_argument("functional applied to point of wrong dimension");
  Rational value = constant;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] != 0)
      value += coefficients[k] * p[k];
  }
  return value;
}

bool AffineFunctional::is_zero() const
{
  return constant == 0 &&
         std::all_of(coefficients.begin(), coefficients.end(),
                     [](Rational const &c) { return c == 0; });
}

std::ptrdiff_t affine_hull_dim(PointSet const &points, std::span<const std::size_t> subset)
{
  if (subset.empty())
    return -1;
  auto const &base = points.at(subset[0]);
  RationalMatrix diffs(subset.size() - 1, base.size());
  for (std::size_t r = 1; r < subset.size(); ++r) {
    auto const &p = points.at(subset[r]);
    for (std::size_t k = 0; k < base.size(); ++k)
      diffs(r - 1, k) = p[k] - base[k];
  }
  return static_cast<std::ptrdiff_t>(rank(diffs));
}

std::ptrdiff_t affine_hull_dim(PointSet const &points)
{
  std::vector<std::size_t> all(points.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = i;
  return affine_hull_dim(points, all);
}

namespace {

// [1 | p] per point: functional coefficients (a0, a) act by dot product.
RationalVector homogenize(RationalVector const &p)
{
  RationalVector out;
  out.reserve(p.size() + 1);
  out.emplace_back(1);
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

Rational dot(RationalVector const &a, RationalVector const &b)
{
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0 && b[k] != 0)
      s += a[k] * b[k];
  }
  return s;
}

AffineFunctional from_homogeneous(RationalVector const &coef)
{
  AffineFunctional f;
  f.constant = coef[0];
  f.coefficients.assign(coef.begin() + 1, coef.end());
  return f;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap)
{
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > cap)
      return cap + 1;
  }
  return result;
}

} // namespace

std::optional<AffineFunctional> find_supporting_functional(PointSet const &points,
                                                           std::span<const std::size_t> subset)
{
  if (points.empty())
    throw std::invalid_argument("find_supporting_functional needs points");
  auto const dim = points.front().size();

  std::vector<bool> in_subset(points.size(), false);
  for (auto i : subset)
    in_subset.at(i) = true;

  std::vector<RationalVector> zero_rows;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (in_subset[i])
      zero_rows.push_back(homogenize(points[i]));
  }

  std::vector<RationalVector> kernel;
  if (zero_rows.empty()) {
    for (std::size_t k = 0; k <= dim; ++k) {
      RationalVector e(dim + 1, Rational(0));
      e[k] = 1;
      kernel.push_back(std::move(e));
    }
  } else {
    kernel = nullspace(from_rows(zero_rows, dim + 1));
  }
  if (kernel.empty())
    return std::nullopt;

  // Positivity on the remaining points, in kernel coordinates: M·y ≥ 1.
  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!in_subset[i])
      outside.push_back(i);
  }
  if (outside.empty())
    return from_homogeneous(kernel.front());

  RationalMatrix m(outside.size(), kernel.size());
  for (std::size_t r = 0; r < outside.size(); ++r) {
    auto hp = homogenize(points[outside[r]]);
    for (std::size_t c = 0; c < kernel.size(); ++c)
      m(r, c) = dot(kernel[c], hp);
  }
  auto y = find_feasible_point(m, RationalVector(outside.size(), Rational(1)));
  if (!y)
    return std::nullopt;

  RationalVector coef(dim + 1, Rational(0));
  for (std::size_t c = 0; c < kernel.size(); ++c) {
    if ((*y)[c] == 0)
      continue;
    for (std::size_t k = 0; k <= dim; ++k)
      coef[k] += (*y)[c] * kernel[c][k];
  }
  auto f = from_homogeneous(coef);
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto v = f(points[i]);
    if (in_subset[i] ? v != 0 : v <= 0)
      throw std::logic_error("find_supporting_functional: certificate check failed");
  }
  return f;
}

bool verify_vertex(PointSet const &points, std::size_t index)
{
  std::size_t const subset[] = {index};
  return find_supporting_functional(points, subset).has_value();
}

std::vector<VertexSet> brute_force_facets(PointSet const &points, std::size_t vertex_cap,
                                          std::uint64_t combination_cap)
{
  if (points.empty())
    throw std::invalid_argument("brute_force_facets needs points");
  if (points.size() > vertex_cap)
    throw CapExceeded(std::to_string(points.size()) + " vertices exceed brute-force cap of " +
                      std::to_string(vertex_cap));
  auto const t = points.size();
  auto const d = affine_hull_dim(points);
  if (d == 0)
    return {VertexSet{}};
  if (binomial_capped(t, static_cast<std::uint64_t>(d), combination_cap) > combination_cap)
    throw CapExceeded("C(" + std::to_string(t) + ", " + std::to_string(d) +
                      ") candidate subsets exceed cap of " + std::to_string(combination_cap));

  // Values of affine functionals on the points form the column space of
  // the homogenized point matrix; a basis of it is all we need.
  auto const width = points.front().size() + 1;
  RationalMatrix hom(t, width);
  for (std::size_t i = 0; i < t; ++i) {
    auto hp = homogenize(points[i]);
    for (std::size_t k = 0; k < width; ++k)
      hom(i, k) = hp[k];
  }
  RationalMatrix reduced = hom;
  auto pivots = rref(reduced);
  auto const r = pivots.size(); // d + 1
  RationalMatrix values(t, r);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t c = 0; c < r; ++c)
      values(i, c) = hom(i, pivots[c]);
  }

  std::set<VertexSet> facets;
  std::vector<std::size_t> combo(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < combo.size(); ++i)
    combo[i] = i;

  for (;;) {
    RationalMatrix sub(combo.size(), r);
    for (std::size_t i = 0; i < combo.size(); ++i) {
      for (std::size_t c = 0; c < r; ++c)
        sub(i, c) = values(combo[i], c);
    }
    auto normal = nullspace(sub);
    if (normal.size() == 1) {
      RationalVector y(t, Rational(0));
      bool has_pos = false, has_neg = false;
      VertexSet zero;
      for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t c = 0; c < r; ++c)
          y[i] += values(i, c) * normal[0][c];
        if (y[i] > 0)
          has_pos = true;
        else if (y[i] < 0)
          has_neg = true;
        else
          zero.push_back(i);
      }
      if (!(has_pos && has_neg))
        facets.insert(std::move(zero));
    }

    // next combination
    std::size_t k = combo.size();
    while (k > 0 && combo[k - 1] == t - combo.size() + k - 1)
      --k;
    if (k == 0)
      break;
    ++combo[k - 1];
    for (std::size_t j = k; j < combo.size(); ++j)
      combo[j] = combo[j - 1] + 1;
  }
  return {facets.begin(), facets.end()};
}

VertexFacetIncidence VertexFacetIncidence::from_facets(std::vector<VertexSet> const &facets,
                                                       std::size_t vertex_count)
{
  if (vertex_count > 64)
    throw CapExceeded("incidence supports at most 64 vertices");
  VertexFacetIncidence inc;
  inc.vertex_count = vertex_count;
  for (auto const &f : facets) {
    std::uint64_t row = 0;
    for (auto v : f) {
      if (v >= vertex_count)
        throw std::out_of_range("facet vertex out of range");
      row |= std::uint64_t{1} << v;
    }
    inc.rows.push_back(row);
  }
  return inc;
}

namespace {

std::vector<std::size_t> members_of(std::uint64_t mask)
{
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

} // namespace

FaceLattice face_lattice_from_incidence(VertexFacetIncidence const &incidence,
                                        PointSet const &points, std::size_t face_cap)
{
  if (points.size() != incidence.vertex_count)
    throw std::invalid_argument("incidence and point set disagree");
  auto const full = incidence.vertex_count == 64
                      ? ~std::uint64_t{0}
                      : (std::uint64_t{1} << incidence.vertex_count) - 1;

  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> queue;
  auto add = [&](std::uint64_t f) {
    if (seen.insert(f).second) {
      if (seen.size() > face_cap)
        throw CapExceeded("face lattice exceeds cap of " + std::to_string(face_cap) + " faces");
      queue.push_back(f);
    }
  };
  add(full);
  add(0);
  for (auto row : incidence.rows)
    add(row);
  // every face is an intersection of facets
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto f = queue[q];
    if (f == full)
      continue;
    for (auto row : incidence.rows)
      add(f & row);
  }

  FaceLattice lattice;
  std::map<std::ptrdiff_t, BigInt> counts;
  for (auto f : seen) {
    auto members = members_of(f);
    OracleFace face{f, affine_hull_dim(points, members)};
    ++counts[face.dim];
    lattice.faces.push_back(face);
  }
  std::sort(lattice.faces.begin(), lattice.faces.end(),
            [](OracleFace const &a, OracleFace const &b) {
              return a.dim != b.dim ? a.dim < b.dim : a.members < b.members;
            });

  auto top = affine_hull_dim(points);
  std::vector<BigInt> fv(static_cast<std::size_t>(top + 2), BigInt(0));
  for (auto const &[dim, c] : counts)
    fv.at(static_cast<std::size_t>(dim + 1)) = c;
  lattice.fvector = FVector(std::move(fv));
  return lattice;
}

bool ridge_property(FaceLattice const &lattice, VertexFacetIncidence const &incidence)
{
  auto top = lattice.fvector.top_dim();
  for (auto const &face : lattice.faces) {
    if (face.dim != top - 2)
      continue;
    std::size_t containing = 0;
    for (auto row : incidence.rows)
      containing += (face.members & ~row) == 0;
    if (containing != 2)
      return false;
  }
  return true;
}

bool is_simplex(PointSet const &points, std::span<const std::size_t> members)
{
  return affine_hull_dim(points, members) == static_cast<std::ptrdiff_t>(members.size()) - 1;
}

bool is_simplex(AffineRelationBasis const &basis, std::span<const std::size_t> members)
{
  if (basis.relations.empty())
    return true;
  auto const t = basis.relations.front().size();
  std::vector<bool> inside(t, false);
  for (auto m : members)
    inside.at(m) = true;
  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < t; ++i) {
    if (!inside[i])
      outside.push_back(i);
  }
  RationalMatrix restricted(basis.rank(), outside.size());
  for (std::size_t r = 0; r < basis.rank(); ++r) {
    for (std::size_t c = 0; c < outside.size(); ++c)
      restricted(r, c) = basis.relations[r][outside[c]];
  }
  return rank(restricted) == basis.rank();
}

bool TheoremReport::all_pass() const
{
  return std::all_of(checks.begin(), checks.end(), [](Check const &c) { return c.pass; });
}

TheoremReport verify_theorem(FrobeniusSystem const &sys, std::size_t vertex_cap)
{
  if (sys.order() > vertex_cap)
    throw CapExceeded("|G| = " + std::to_string(sys.order()) +
                      " exceeds oracle cap of " + std::to_string(vertex_cap));
  TheoremReport report;
  auto points = points_of(sys);
  auto const n = sys.n();

  {
    Check c{"cosets_are_simplices", true, {}};
    for (std::size_t coset = 0; coset < sys.h() && c.pass; ++coset) {
      std::vector<std::size_t> members;
      for (std::size_t k = 0; k < n; ++k)
        members.push_back(sys.element_index({coset, k}));
      if (!is_simplex(points, members)) {
        c.pass = false;
        c.witness = "coset " + std::to_string(coset) + " is affinely dependent";
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    Check c{"barycenter_coincidence", true, {}};
    report.barycenter = barycenter(sys);
    RationalMatrix expected(n, n, Rational(1, static_cast<long>(n)));
    if (report.barycenter != expected) {
      c.pass = false;
      c.witness = "global barycenter differs from 1/n";
    }
    for (std::size_t coset = 0; coset < sys.h() && c.pass; ++coset) {
      if (coset_barycenter(sys, coset) != expected) {
        c.pass = false;
        c.witness = "coset " + std::to_string(coset) + " barycenter differs from 1/n";
      }
    }
    report.checks.push_back(std::move(c));
  }

  report.checks.push_back({"coset_span_orthogonality", coset_span_orthogonality(sys),
                           {}});
  if (!report.checks.back().pass)
    report.checks.back().witness = "nonzero cross-coset inner product";

  auto oracle_facets = brute_force_facets(points, vertex_cap);
  report.facet_count = oracle_facets.size();
  {
    std::vector<VertexSet> combinatorial;
    for (auto &f : enumerate_facets(sys))
      combinatorial.push_back(std::move(f.members));
    std::sort(combinatorial.begin(), combinatorial.end());
    Check c{"facets_match", combinatorial == oracle_facets, {}};
    if (!c.pass)
      c.witness = "oracle found " + std::to_string(oracle_facets.size()) +
                  " facets, formula lists " + std::to_string(combinatorial.size());
    report.checks.push_back(std::move(c));
  }

  auto incidence = VertexFacetIncidence::from_facets(oracle_facets, points.size());
  auto lattice = face_lattice_from_incidence(incidence, points);
  report.fvector_oracle = lattice.fvector;
  report.fvector_formula = fvector(sys.n(), sys.h());
  report.checks.push_back({"fvector_match", report.fvector_oracle == report.fvector_formula,
                           {}});
  if (!report.checks.back().pass)
    report.checks.back().witness = "oracle and generating-function f-vectors differ";
  return report;
}

} // namespace frobtope::oracle
