#ifndef FROBTOPE_LP_HPP
#define FROBTOPE_LP_HPP

#include <optional>

#include "frobtope/linalg.hpp"

namespace frobtope {

/**
 * Exact feasibility for A·x ≥ b with x unrestricted in sign.
 *
 * Phase-one simplex over the rationals with Bland's rule, so it always
 * terminates. Returns a feasible x or nullopt.
 */
std::optional<RationalVector> find_feasible_point(RationalMatrix const &a,
                                                  RationalVector const &b);

} // namespace frobtope

#endif // FROBTOPE_LP_HPP
