#ifndef EHRHART_INTERVAL_HPP
#define EHRHART_INTERVAL_HPP

#include <optional>
#include <string>

#include "ehrhart/rational.hpp"

namespace ehrhart {

// Whether a window/count refers to the closed body or the relative interior.
enum class KindFlag { closed, open };

// An interval over the rationals with independently open/closed endpoints.
// Degenerate single points ([v, v] with both ends closed) are allowed; any
// combination with lo > hi, or lo == hi with an open end, is empty.
struct Interval {
    Rational lo, hi;
    bool lo_closed = true;
    bool hi_closed = true;

    static Interval point(const Rational& v) { return {v, v, true, true}; }
    static Interval closed_open(const Rational& lo, const Rational& hi) {
        return {lo, hi, true, false};
    }
    static Interval open_closed(const Rational& lo, const Rational& hi) {
        return {lo, hi, false, true};
    }
    static Interval open_open(const Rational& lo, const Rational& hi) {
        return {lo, hi, false, false};
    }
    static Interval closed_closed(const Rational& lo, const Rational& hi) {
        return {lo, hi, true, true};
    }

    bool empty() const {
        if (lo > hi) return true;
        if (lo == hi) return !(lo_closed && hi_closed);
        return false;
    }
    bool is_point() const { return lo == hi && lo_closed && hi_closed; }

    bool contains(const Rational& x) const {
        if (x < lo || x > hi) return false;
        if (x == lo && !lo_closed) return false;
        if (x == hi && !hi_closed) return false;
        return true;
    }

    // A point inside the interval (the midpoint, or the point itself).
    Rational representative() const { return (lo + hi) / 2; }

    bool operator==(const Interval& other) const = default;
};

Interval intersect(const Interval& a, const Interval& b);

std::string interval_to_string(const Interval& iv);

}  // namespace ehrhart

#endif
