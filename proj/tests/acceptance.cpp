// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
// throughout, runtime bounds enforced where stated.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "frobtope/cli.hpp"
#include "frobtope/embedding.hpp"
#include "frobtope/errors.hpp"
#include "frobtope/facecomb.hpp"
#include "frobtope/frobenius.hpp"
#include "frobtope/oracle.hpp"

using namespace frobtope;

namespace {

struct Named
{
  std::string name;
  FrobeniusSystem sys;
};

std::vector<Named> systems()
{
  std::vector<Named> out;
  out.push_back({"D3", build_dihedral(3)});
  out.push_back({"D5", build_dihedral(5)});
  out.push_back({"D7", build_dihedral(7)});
  out.push_back({"A4", build_a4()});
  out.push_back({"pq(5,2,4)", build_pq(5, 2, 4)});
  out.push_back({"pq(7,3,2)", build_pq(7, 3, 2)});
  out.push_back({"pq(11,5,3)", build_pq(11, 5, 3)});
  return out;
}

std::vector<Named> oracle_systems()
{
  std::vector<Named> out;
  out.push_back({"D3", build_dihedral(3)});
  out.push_back({"D5", build_dihedral(5)});
  for (std::size_t n = 1; n <= 6; ++n)
    out.push_back({"Z/" + std::to_string(n), build_cyclic(n)});
  return out;
}

struct Outcome
{
  bool pass = true;
  std::string detail;

  void fail(std::string const &why)
  {
    if (pass)
      detail = why;
    pass = false;
  }
};

int failures = 0;

void criterion(int id, std::string const &title, double limit_seconds,
               std::function<void(Outcome &)> const &body)
{
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (std::exception const &e) {
    out.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds)
    out.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
  std::printf("[%s] %2d %-36s %8.3f s%s%s\n", out.pass ? "PASS" : "FAIL", id, title.c_str(),
              secs, out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
  failures += !out.pass;
}

std::vector<oracle::VertexSet> combinatorial_facets(FrobeniusSystem const &sys)
{
  std::vector<oracle::VertexSet> out;
  for (auto &f : enumerate_facets(sys))
    out.push_back(std::move(f.members));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

int main()
{
  auto const all = systems();

  criterion(1, "dimension (n-1)h", 5.0, [&](Outcome &o) {
    for (auto const &[name, sys] : all) {
      auto r = affine_rank(vertex_matrices(sys));
      if (r.dim != polytope_dim(sys))
        o.fail(name + ": dim " + std::to_string(r.dim));
    }
  });

  criterion(2, "facet count and identity", 60.0, [&](Outcome &o) {
    for (auto const &[name, sys] : all) {
      FacetStream stream(sys);
      std::size_t count = 0;
      while (stream.next())
        ++count;
      auto expected = boost::multiprecision::pow(BigInt(sys.n()), static_cast<unsigned>(sys.h()));
      if (BigInt(count) != expected || stream.total() != expected)
        o.fail(name + ": " + std::to_string(count) + " facets");
    }
    for (auto const &[name, sys] : oracle_systems()) {
      if (oracle::brute_force_facets(oracle::points_of(sys)) != combinatorial_facets(sys))
        o.fail(name + ": brute-force facets differ");
    }
  });

  criterion(3, "f-vector", 120.0, [&](Outcome &o) {
    if (fvector(3, 2).counts() != std::vector<BigInt>{1, 6, 15, 18, 9, 1})
      o.fail("fvector(3,2) is not (1,6,15,18,9,1)");
    for (auto const &[name, sys] : oracle_systems()) {
      auto pts = oracle::points_of(sys);
      auto inc = oracle::VertexFacetIncidence::from_facets(oracle::brute_force_facets(pts),
                                                           pts.size());
      auto lattice = oracle::face_lattice_from_incidence(inc, pts);
      if (lattice.fvector != fvector(sys.n(), sys.h()))
        o.fail(name + ": oracle lattice f-vector differs");
      if (!oracle::ridge_property(lattice, inc))
        o.fail(name + ": ridge property fails");
    }
  });

  criterion(4, "gram census {n,0,1}", 5.0, [&](Outcome &o) {
    for (auto const &[name, sys] : all) {
      if (!gram_census(sys).holds())
        o.fail(name);
    }
  });

  criterion(5, "coset sums = all-ones", 0, [&](Outcome &o) {
    for (auto const &[name, sys] : all) {
      for (std::size_t c = 0; c < sys.h(); ++c) {
        auto sum = coset_sum(sys, c);
        for (auto v : sum.data()) {
          if (v != 1)
            o.fail(name + ": coset " + std::to_string(c));
        }
      }
    }
  });

  criterion(6, "relations q = h-1, coset-constant", 0, [&](Outcome &o) {
    for (auto const &[name, sys] : all) {
      auto vs = vertex_matrices(sys);
      auto r = affine_rank(vs);
      if (r.basis.rank() != sys.h() - 1)
        o.fail(name + ": q = " + std::to_string(r.basis.rank()));
      if (!relation_coset_constancy(r.basis, sys))
        o.fail(name + ": relation not constant on cosets");
      if (!relations_span_coset_differences(r.basis, sys))
        o.fail(name + ": relation space differs from coset differences");
      for (auto const &rel : r.basis.relations) {
        if (!is_affine_relation(vs, rel))
          o.fail(name + ": basis vector is not a relation");
      }
    }
  });

  criterion(7, "coset span orthogonality", 0, [&](Outcome &o) {
    for (auto const &[name, sys] : all) {
      if (!coset_span_orthogonality(sys))
        o.fail(name);
    }
  });

  criterion(8, "simpliciality (geometric)", 0, [&](Outcome &o) {
    for (auto const &[name, sys] : all) {
      auto facet_total = boost::multiprecision::pow(BigInt(sys.n()),
                                                    static_cast<unsigned>(sys.h()));
      bool direct = facet_total <= 5000;
      auto pts = direct ? oracle::points_of(sys) : oracle::PointSet{};
      auto basis = direct ? AffineRelationBasis{} : affine_rank(vertex_matrices(sys)).basis;
      FacetStream stream(sys);
      while (auto f = stream.next()) {
        bool ok = direct ? oracle::is_simplex(pts, f->members)
                         : oracle::is_simplex(basis, f->members);
        if (!ok) {
          o.fail(name + ": facet is affinely dependent");
          break;
        }
      }
    }
  });

  criterion(9, "face characterization (D3)", 30.0, [&](Outcome &o) {
    auto d3 = build_dihedral(3);
    auto pts = oracle::points_of(d3);
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
      std::vector<std::size_t> x;
      for (std::size_t i = 0; i < 6; ++i) {
        if (mask >> i & 1)
          x.push_back(i);
      }
      auto f = oracle::find_supporting_functional(pts, x);
      bool zero_set_is_x = false;
      if (f) {
        zero_set_is_x = true;
        for (std::size_t i = 0; i < 6; ++i)
          zero_set_is_x &= (((*f)(pts[i]) == 0) == bool(mask >> i & 1));
      }
      bool expected = is_proper_face(d3, x) || mask == 63;
      if (zero_set_is_x != expected)
        o.fail("subset mask " + std::to_string(mask));
    }
  });

  criterion(10, "negative controls", 0, [&](Outcome &o) {
    std::vector<Perm> s4_gens{Perm{2, 1, 3, 4}, Perm{2, 3, 4, 1}};
    auto s4 = check_frobenius(generate_group(s4_gens, 4));
    if (s4.kind != FrobeniusVerdict::Kind::not_frobenius || !s4.witness_element ||
        s4.witness_element->fixed_point_count() < 2)
      o.fail("S4 not rejected with a witness");
    try {
      build_dihedral(4);
      o.fail("D4 accepted");
    } catch (NotFrobenius const &e) {
      if (e.witness().empty())
        o.fail("D4 rejected without witness");
    }
    for (auto spec : {"gens:4;2,1,3,4;2,3,4,1", "dihedral:4"}) {
      auto r = cli::run_args({"info", spec});
      if (r.exit_code != cli::exit_not_frobenius || r.error.find("witness") == std::string::npos)
        o.fail(std::string(spec) + ": exit " + std::to_string(r.exit_code));
    }
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAILURE" : "SUCCESS", failures);
  return failures ? 1 : 0;
}
