#include "ehrhart/step_function.hpp"

#include "ehrhart/detail/position.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ehrhart {

Interval intersect(const Interval& a, const Interval& b) {
    Interval out;
    if (a.lo > b.lo) {
        out.lo = a.lo;
        out.lo_closed = a.lo_closed;
    } else if (b.lo > a.lo) {
        out.lo = b.lo;
        out.lo_closed = b.lo_closed;
    } else {
        out.lo = a.lo;
        out.lo_closed = a.lo_closed && b.lo_closed;
    }
    if (a.hi < b.hi) {
        out.hi = a.hi;
        out.hi_closed = a.hi_closed;
    } else if (b.hi < a.hi) {
        out.hi = b.hi;
        out.hi_closed = b.hi_closed;
    } else {
        out.hi = a.hi;
        out.hi_closed = a.hi_closed && b.hi_closed;
    }
    return out;
}

std::string interval_to_string(const Interval& iv) {
    if (iv.empty()) return "{}";
    if (iv.is_point()) return "{" + rational_to_string(iv.lo) + "}";
    std::string s;
    s += iv.lo_closed ? '[' : '(';
    s += rational_to_string(iv.lo) + ", " + rational_to_string(iv.hi);
    s += iv.hi_closed ? ']' : ')';
    return s;
}

using detail::Pos;
using detail::start_pos;
using detail::stop_pos;
using detail::range_to_interval;
using detail::within;

StepFunction::StepFunction(Interval domain, const std::vector<Interval>& covered)
    : domain_(domain) {
    std::map<Pos, std::int64_t> delta;
    for (const auto& iv : covered) {
        if (iv.empty()) continue;
        if (!within(iv, domain_)) throw std::invalid_argument("step piece outside domain");
        delta[start_pos(iv)] += 1;
        delta[stop_pos(iv)] -= 1;
    }
    std::int64_t count = 0;
    Pos prev{};
    for (const auto& [pos, d] : delta) {
        if (d == 0) continue;
        if (count > 0) pieces_.push_back({range_to_interval(prev, pos), count});
        count += d;
        prev = pos;
    }
    // count returns to 0 at the last event, so nothing dangles
}

StepFunction::StepFunction(Interval domain, std::vector<StepPiece> pieces) : domain_(domain) {
    std::erase_if(pieces, [](const StepPiece& p) { return p.interval.empty() || p.count == 0; });
    std::sort(pieces.begin(), pieces.end(), [](const StepPiece& a, const StepPiece& b) {
        return start_pos(a.interval) < start_pos(b.interval);
    });
    for (const auto& p : pieces) {
        if (p.count < 0) throw std::invalid_argument("negative step count");
        if (!within(p.interval, domain_)) throw std::invalid_argument("step piece outside domain");
    }
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
        if (start_pos(pieces[i + 1].interval) < stop_pos(pieces[i].interval))
            throw std::invalid_argument("overlapping step pieces");
    for (auto& p : pieces) {
        if (!pieces_.empty() && pieces_.back().count == p.count &&
            stop_pos(pieces_.back().interval) == start_pos(p.interval)) {
            pieces_.back().interval.hi = p.interval.hi;
            pieces_.back().interval.hi_closed = p.interval.hi_closed;
        } else {
            pieces_.push_back(p);
        }
    }
}

std::int64_t step_eval(const StepFunction& sf, const Rational& x) {
    const auto& pieces = sf.pieces();
    // binary search for the first piece whose stop position lies beyond x
    std::size_t lo = 0, hi = pieces.size();
    const Pos key{x, 0};
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (stop_pos(pieces[mid].interval) <= key)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < pieces.size() && pieces[lo].interval.contains(x)) return pieces[lo].count;
    return 0;
}

StepFunction reflect_step(const StepFunction& sf, const Rational& total) {
    const auto flip = [&](const Interval& iv) {
        return Interval{total - iv.hi, total - iv.lo, iv.hi_closed, iv.lo_closed};
    };
    std::vector<StepPiece> pieces;
    pieces.reserve(sf.pieces().size());
    for (auto it = sf.pieces().rbegin(); it != sf.pieces().rend(); ++it)
        pieces.push_back({flip(it->interval), it->count});
    return StepFunction(flip(sf.domain()), std::move(pieces));
}

}  // namespace ehrhart
