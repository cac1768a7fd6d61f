#ifndef EHRHART_DETAIL_POSITION_HPP
#define EHRHART_DETAIL_POSITION_HPP

#include <utility>

#include "ehrhart/interval.hpp"

namespace ehrhart::detail {

// Positions on the rational line with an infinitesimal "just after" phase:
// (v, 0) is the point v itself, (v, 1) sits between v and everything above it.
// Under this encoding every interval is the half-open position range
// [start_pos, stop_pos), which turns endpoint-kind case analysis into plain
// comparisons.
using Pos = std::pair<Rational, int>;

inline Pos start_pos(const Interval& iv) { return {iv.lo, iv.lo_closed ? 0 : 1}; }
inline Pos stop_pos(const Interval& iv) { return {iv.hi, iv.hi_closed ? 1 : 0}; }

// The position range [from, to) as an interval (empty when from >= to).
inline Interval range_to_interval(const Pos& from, const Pos& to) {
    return {from.first, to.first, from.second == 0, to.second == 1};
}

inline bool within(const Interval& inner, const Interval& outer) {
    return !(start_pos(inner) < start_pos(outer)) && !(stop_pos(outer) < stop_pos(inner));
}

}  // namespace ehrhart::detail

#endif
