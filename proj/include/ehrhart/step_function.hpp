#ifndef EHRHART_STEP_FUNCTION_HPP
#define EHRHART_STEP_FUNCTION_HPP

#include <cstdint>
#include <vector>

#include "ehrhart/interval.hpp"

namespace ehrhart {

struct StepPiece {
    Interval interval;
    std::int64_t count = 0;

    bool operator==(const StepPiece& other) const = default;
};

// Integer-valued step function with bounded support: a domain interval plus
// sorted, pairwise disjoint, maximally merged pieces with counts >= 1. The
// function is 0 everywhere outside the pieces.
class StepFunction {
  public:
    StepFunction() = default;

    // Sum of the indicator functions of `covered` (empty intervals ignored).
    // Every non-empty interval must lie inside `domain`.
    StepFunction(Interval domain, const std::vector<Interval>& covered);

    // From explicit pieces; canonicalizes (sorts, merges, drops zero counts)
    // and rejects overlapping pieces or pieces outside the domain.
    StepFunction(Interval domain, std::vector<StepPiece> pieces);

    const Interval& domain() const { return domain_; }
    const std::vector<StepPiece>& pieces() const { return pieces_; }

    bool operator==(const StepFunction& other) const = default;

  private:
    Interval domain_{Rational(0), Rational(0), true, false};
    std::vector<StepPiece> pieces_;
};

// Value at x; 0 outside the support.
std::int64_t step_eval(const StepFunction& sf, const Rational& x);

// The pushforward under x -> total - x: domain and pieces are mirrored and
// endpoint kinds swapped. Used to turn the [0,(n+1)d) count into its
// (0,(n+1)d] counterpart.
StepFunction reflect_step(const StepFunction& sf, const Rational& total);

}  // namespace ehrhart

#endif
