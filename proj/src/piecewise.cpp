#include "ehrhart/piecewise.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "ehrhart/detail/position.hpp"

namespace ehrhart {

using detail::start_pos;
using detail::stop_pos;

PeriodicPiecewisePolynomial::PeriodicPiecewisePolynomial(Rational period, KindFlag kind,
                                                         std::vector<PolyPiece> pieces)
    : period_(std::move(period)), kind_(kind) {
    if (period_ <= 0) throw std::invalid_argument("period must be positive");
    pieces_.clear();
    std::erase_if(pieces, [](const PolyPiece& p) { return p.interval.empty(); });
    std::sort(pieces.begin(), pieces.end(), [](const PolyPiece& a, const PolyPiece& b) {
        return start_pos(a.interval) < start_pos(b.interval);
    });
    const Interval w = window();
    bool ok = !pieces.empty() && start_pos(pieces.front().interval) == start_pos(w) &&
              stop_pos(pieces.back().interval) == stop_pos(w);
    for (std::size_t i = 0; ok && i + 1 < pieces.size(); ++i)
        ok = stop_pos(pieces[i].interval) == start_pos(pieces[i + 1].interval);
    if (!ok) throw std::invalid_argument("pieces do not partition the window");

    // Refine into interiors plus explicit endpoint points before merging, so
    // the canonical ownership of a breakpoint (left piece first, then right,
    // then its own point piece) cannot depend on how the input was cut. Two
    // representations of the same function then canonicalize identically.
    std::vector<PolyPiece> atoms;
    for (auto& p : pieces) {
        if (p.interval.is_point()) {
            atoms.push_back({p.interval, std::move(p.poly)});
            continue;
        }
        if (p.interval.lo_closed) atoms.push_back({Interval::point(p.interval.lo), p.poly});
        atoms.push_back({Interval::open_open(p.interval.lo, p.interval.hi), p.poly});
        if (p.interval.hi_closed) atoms.push_back({Interval::point(p.interval.hi), p.poly});
    }

    for (auto& p : atoms) {
        // canonical form for a degenerate piece: the constant it takes there
        if (p.interval.is_point()) p.poly = Polynomial::constant(p.poly(p.interval.lo));
        if (pieces_.empty()) {
            pieces_.push_back(std::move(p));
            continue;
        }
        PolyPiece& acc = pieces_.back();
        // merge when both describe one polynomial function on the union;
        // two adjacent degenerate pieces cannot touch, so at most one side
        // of any merge is a point
        std::optional<Polynomial> merged;
        if (acc.interval.is_point()) {
            if (p.poly(acc.interval.lo) == acc.poly.coefficient(0)) merged = p.poly;
        } else if (p.interval.is_point()) {
            if (acc.poly(p.interval.lo) == p.poly.coefficient(0)) merged = acc.poly;
        } else if (acc.poly == p.poly) {
            merged = acc.poly;
        }
        if (merged) {
            acc.interval.hi = p.interval.hi;
            acc.interval.hi_closed = p.interval.hi_closed;
            acc.poly = std::move(*merged);
        } else {
            pieces_.push_back(std::move(p));
        }
    }
}

PeriodicPiecewisePolynomial PeriodicPiecewisePolynomial::zero(const Rational& period,
                                                              KindFlag kind) {
    return from_polynomial(period, kind, Polynomial());
}

PeriodicPiecewisePolynomial PeriodicPiecewisePolynomial::from_polynomial(const Rational& period,
                                                                         KindFlag kind,
                                                                         const Polynomial& p) {
    PeriodicPiecewisePolynomial out;
    out.period_ = period;
    out.kind_ = kind;
    if (period <= 0) throw std::invalid_argument("period must be positive");
    out.pieces_ = {{out.window(), p}};
    return out;
}

Interval PeriodicPiecewisePolynomial::window() const {
    return kind_ == KindFlag::closed ? Interval::closed_open(Rational(0), period_)
                                     : Interval::open_closed(Rational(0), period_);
}

Rational PeriodicPiecewisePolynomial::operator()(const Rational& t) const {
    Rational tau;
    if (kind_ == KindFlag::closed) {
        tau = t - period_ * to_rational(floor_int(t / period_));
    } else {
        tau = t - period_ * to_rational(ceil_int(t / period_) - 1);
    }
    std::size_t lo = 0, hi = pieces_.size();
    const detail::Pos key{tau, 0};
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (stop_pos(pieces_[mid].interval) <= key)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo >= pieces_.size() || !pieces_[lo].interval.contains(tau))
        throw std::logic_error("window reduction escaped the partition");
    return pieces_[lo].poly(tau);
}

bool PeriodicPiecewisePolynomial::is_zero() const {
    return pieces_.size() == 1 && pieces_.front().poly.is_zero();
}

PeriodicPiecewisePolynomial operator+(const PeriodicPiecewisePolynomial& a,
                                      const PeriodicPiecewisePolynomial& b) {
    if (a.period() != b.period() || a.kind() != b.kind())
        throw std::invalid_argument("mismatched period or window kind");
    std::vector<PolyPiece> out;
    std::size_t i = 0, j = 0;
    while (i < a.pieces().size() && j < b.pieces().size()) {
        const Interval ov = intersect(a.pieces()[i].interval, b.pieces()[j].interval);
        if (!ov.empty()) out.push_back({ov, a.pieces()[i].poly + b.pieces()[j].poly});
        if (stop_pos(a.pieces()[i].interval) <= stop_pos(b.pieces()[j].interval))
            ++i;
        else
            ++j;
    }
    return {a.period(), a.kind(), std::move(out)};
}

PeriodicPiecewisePolynomial operator*(const Rational& s, const PeriodicPiecewisePolynomial& f) {
    std::vector<PolyPiece> out = f.pieces();
    for (auto& p : out) p.poly = s * p.poly;
    return {f.period(), f.kind(), std::move(out)};
}

PeriodicPiecewisePolynomial operator-(const PeriodicPiecewisePolynomial& f) {
    return Rational(-1) * f;
}

PeriodicPiecewisePolynomial rebase(const PeriodicPiecewisePolynomial& f,
                                   const Rational& new_period) {
    const Rational ratio = new_period / f.period();
    if (!is_integer(ratio) || ratio < 1)
        throw std::invalid_argument("new period must be a positive integer multiple");
    const long long m = numerator(ratio).convert_to<long long>();
    std::vector<PolyPiece> out;
    out.reserve(f.pieces().size() * static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        const Rational shift = Rational(k) * f.period();
        for (const auto& p : f.pieces()) {
            Interval iv{p.interval.lo + shift, p.interval.hi + shift, p.interval.lo_closed,
                        p.interval.hi_closed};
            out.push_back({std::move(iv), p.poly.compose_linear(-shift, Rational(1))});
        }
    }
    return {new_period, f.kind(), std::move(out)};
}

PeriodicPiecewisePolynomial rewindow(const PeriodicPiecewisePolynomial& f, KindFlag new_kind) {
    if (f.kind() == new_kind) return f;
    const Rational& rho = f.period();
    std::vector<PolyPiece> pieces = f.pieces();
    if (new_kind == KindFlag::open) {
        // [0, rho) -> (0, rho]: the value at rho is the old value at 0
        const Rational at_zero = pieces.front().poly(Rational(0));
        if (pieces.front().interval.is_point())
            pieces.erase(pieces.begin());
        else
            pieces.front().interval.lo_closed = false;
        pieces.push_back({Interval::point(rho), Polynomial::constant(at_zero)});
    } else {
        // (0, rho] -> [0, rho): the value at 0 is the old value at rho
        const Rational at_rho = pieces.back().poly(rho);
        if (pieces.back().interval.is_point())
            pieces.pop_back();
        else
            pieces.back().interval.hi_closed = false;
        pieces.push_back({Interval::point(Rational(0)), Polynomial::constant(at_rho)});
    }
    return {rho, new_kind, std::move(pieces)};
}

PeriodicPiecewisePolynomial reflect_periodic(const PeriodicPiecewisePolynomial& f) {
    const Rational& rho = f.period();
    std::vector<PolyPiece> out;
    out.reserve(f.pieces().size());
    for (const auto& p : f.pieces()) {
        Interval iv{rho - p.interval.hi, rho - p.interval.lo, p.interval.hi_closed,
                    p.interval.lo_closed};
        out.push_back({std::move(iv), p.poly.compose_linear(rho, Rational(-1))});
    }
    const KindFlag flipped =
        f.kind() == KindFlag::closed ? KindFlag::open : KindFlag::closed;
    return {rho, flipped, std::move(out)};
}

PeriodicPiecewisePolynomial derivative_pieces(const PeriodicPiecewisePolynomial& f) {
    std::vector<PolyPiece> out = f.pieces();
    for (auto& p : out)
        p.poly = p.interval.is_point() ? Polynomial() : p.poly.derivative();
    return {f.period(), f.kind(), std::move(out)};
}

bool equal_almost_everywhere(const PeriodicPiecewisePolynomial& a,
                             const PeriodicPiecewisePolynomial& b) {
    if (a.period() != b.period() || a.kind() != b.kind()) return false;
    std::size_t i = 0, j = 0;
    while (i < a.pieces().size() && j < b.pieces().size()) {
        const Interval ov = intersect(a.pieces()[i].interval, b.pieces()[j].interval);
        if (!ov.empty() && ov.lo < ov.hi && !(a.pieces()[i].poly == b.pieces()[j].poly))
            return false;
        if (stop_pos(a.pieces()[i].interval) <= stop_pos(b.pieces()[j].interval))
            ++i;
        else
            ++j;
    }
    return true;
}

}  // namespace ehrhart
