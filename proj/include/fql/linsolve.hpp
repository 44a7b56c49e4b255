#pragma once

#include <vector>

#include "fql/exact.hpp"

namespace fql {

// Solve M x = b exactly over F_q(t, theta) for a system with at least as
// many rows as unknowns. Rows are cleared of denominators, eliminated by
// fraction-free (Bareiss) reduction with row pivoting, and the solution is
// verified against every original row; the surplus rows are the
// overdetermination certificate.
//
// Throws runtime_error("underdetermined") when some unknown is not pinned,
// and runtime_error("inconsistent system: row N") naming the first original
// row (0-based) the candidate solution fails to satisfy.
std::vector<RatFunc> solve_linear(const std::vector<std::vector<RatFunc>>& M,
                                  const std::vector<RatFunc>& b);

}  // namespace fql
