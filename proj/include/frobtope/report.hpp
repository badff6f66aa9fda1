#ifndef FROBTOPE_REPORT_HPP
#define FROBTOPE_REPORT_HPP

#include <nlohmann/json.hpp>

#include "frobtope/embedding.hpp"
#include "frobtope/facecomb.hpp"
#include "frobtope/frobenius.hpp"
#include "frobtope/linalg.hpp"
#include "frobtope/oracle.hpp"

namespace frobtope {

using Json = nlohmann::ordered_json;

// Big integers are written as decimal strings, rationals as
// [numerator, denominator] string pairs, matrices row-major.

Json to_json(BigInt const &v);
Json to_json(Rational const &q);
Json to_json(FVector const &f);
Json to_json(CountMatrix const &m);
Json to_json(RationalMatrix const &m);
Json to_json(Perm const &p);
Json to_json(GramCensus const &c);
Json to_json(oracle::TheoremReport const &r);

/// Summary of a system: sizes, dimension, kernel and complement.
Json info_json(FrobeniusSystem const &sys);

} // namespace frobtope

#endif // FROBTOPE_REPORT_HPP
