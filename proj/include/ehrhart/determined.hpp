#ifndef EHRHART_DETERMINED_HPP
#define EHRHART_DETERMINED_HPP

#include <cstdint>

#include "ehrhart/simplex.hpp"
#include "ehrhart/step_function.hpp"

namespace ehrhart {

inline constexpr std::int64_t kDefaultEnumerationBudget = 10'000'000;

// The level-count step function of a simplex with vertices a_0 .. a_n and
// denominator d. For the closed kind this is
//   l -> #{ integer points sum u_j a_j with 0 <= u_j < d and sum u_j = l }
// supported on [0, (n+1)d); for the open kind the weights satisfy
// 0 < u_j <= d and the support is (0, (n+1)d]. The open variant is obtained
// from the closed one through the substitution u_j -> d - u_j, which reflects
// the level about (n+1)d.
//
// Enumeration scans integer candidate points b in the box whose i-th side is
// [sum_j min(0, a_ij) d, sum_j max(0, a_ij) d]. If the box holds more than
// `budget` points, throws std::runtime_error("enumeration budget exceeded...").
StepFunction determined_sets(const RationalSimplex& simplex, KindFlag kind,
                             std::int64_t budget = kDefaultEnumerationBudget);

// Direct enumeration of the open-kind function, without the reflection
// shortcut. Slower; kept as an independent cross-check for tests.
StepFunction determined_sets_direct_open(const RationalSimplex& simplex,
                                         std::int64_t budget = kDefaultEnumerationBudget);

}  // namespace ehrhart

#endif
