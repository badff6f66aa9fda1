#include "frobtope/report.hpp"

namespace frobtope {

Json to_json(BigInt const &v)
{
  return v.str();
}

Json to_json(Rational const &q)
{
  return Json::array({boost::multiprecision::numerator(q).str(),
                      boost::multiprecision::denominator(q).str()});
}

Json to_json(FVector const &f)
{
  Json out = Json::array();
  for (auto const &c : f.counts())
    out.push_back(to_json(c));
  return out;
}

Json to_json(CountMatrix const &m)
{
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (auto v : m.row(i))
      row.push_back(v);
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(RationalMatrix const &m)
{
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (auto const &v : m.row(i))
      row.push_back(to_json(v));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(Perm const &p)
{
  return p.one_line();
}

Json to_json(GramCensus const &c)
{
  return Json{{"n", c.n},
              {"diagonal_n", c.diagonal},
              {"same_coset_zero", c.same_coset_zero},
              {"cross_coset_one", c.cross_coset_one},
              {"violations", c.violations},
              {"pattern_holds", c.holds()}};
}

Json to_json(oracle::TheoremReport const &r)
{
  Json checks = Json::array();
  for (auto const &c : r.checks) {
    Json j{{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty())
      j["witness"] = c.witness;
    checks.push_back(std::move(j));
  }
  return Json{{"checks", std::move(checks)},
              {"fvector_oracle", to_json(r.fvector_oracle)},
              {"fvector_formula", to_json(r.fvector_formula)},
              {"facet_count", r.facet_count},
              {"barycenter", to_json(r.barycenter)},
              {"all_pass", r.all_pass()}};
}

Json info_json(FrobeniusSystem const &sys)
{
  Json kernel = Json::array(), complement = Json::array();
  for (auto const &p : sys.kernel())
    kernel.push_back(to_json(p));
  for (auto const &p : sys.complement())
    complement.push_back(to_json(p));
  auto facets = boost::multiprecision::pow(BigInt(sys.n()), static_cast<unsigned>(sys.h()));
  return Json{{"n", sys.n()},
              {"h", sys.h()},
              {"order", sys.order()},
              {"dim", polytope_dim(sys)},
              {"vertices", sys.order()},
              {"facets", to_json(facets)},
              {"is_regular", sys.is_regular()},
              {"kernel", std::move(kernel)},
              {"complement", std::move(complement)}};
}

} // namespace frobtope
