#include "ehrhart/quasipoly.hpp"

#include <set>
#include <stdexcept>

#include "ehrhart/detail/position.hpp"

namespace ehrhart {

using detail::Pos;
using detail::range_to_interval;
using detail::start_pos;
using detail::stop_pos;

QuasiPolynomial simplex_coefficients(const RationalSimplex& simplex, KindFlag kind,
                                     std::int64_t budget) {
    const int n = simplex.dim();
    const Rational d = simplex.denominator();
    const StepFunction counts = determined_sets(simplex, kind, budget);

    const Interval window = kind == KindFlag::closed ? Interval::closed_open(Rational(0), d)
                                                     : Interval::open_closed(Rational(0), d);

    // Breakpoints of t -> count(i d + t) inside the window, over all shifts i.
    std::set<Pos> positions{start_pos(window), stop_pos(window)};
    for (int i = 0; i <= n; ++i) {
        const Rational base = Rational(i) * d;
        const Interval level_window{base + window.lo, base + window.hi, window.lo_closed,
                                    window.hi_closed};
        for (const auto& piece : counts.pieces()) {
            const Interval overlap = intersect(piece.interval, level_window);
            if (overlap.empty()) continue;
            const Interval shifted{overlap.lo - base, overlap.hi - base, overlap.lo_closed,
                                   overlap.hi_closed};
            positions.insert(start_pos(shifted));
            positions.insert(stop_pos(shifted));
        }
    }

    // Elementary symmetric polynomials of the shifted linear forms, per shift.
    const Rational slope = Rational(-1) / d;
    std::vector<std::vector<Polynomial>> elem(n + 1);
    for (int i = 0; i <= n; ++i) {
        std::vector<Rational> offsets;
        offsets.reserve(n);
        for (int m = 1; m <= n; ++m) offsets.emplace_back(m - i);
        elem[i] = symmetric_polys_in_t(offsets, slope);
    }

    Rational n_factorial(1);
    for (int m = 2; m <= n; ++m) n_factorial *= m;

    std::vector<std::vector<PolyPiece>> pieces_per_k(n + 1);
    auto pos_it = positions.begin();
    for (auto next = std::next(pos_it); next != positions.end(); ++pos_it, ++next) {
        const Interval cell = range_to_interval(*pos_it, *next);
        if (cell.empty()) continue;
        const Rational rep = cell.representative();
        std::vector<std::int64_t> cell_counts(n + 1);
        for (int i = 0; i <= n; ++i)
            cell_counts[i] = step_eval(counts, Rational(i) * d + rep);
        Rational scale(1);  // 1 / (n! d^k), updated per k
        scale /= n_factorial;
        for (int k = 0; k <= n; ++k) {
            Polynomial sum;
            for (int i = 0; i <= n; ++i) {
                if (cell_counts[i] == 0) continue;
                sum = sum + Rational(cell_counts[i]) * elem[i][n - k];
            }
            pieces_per_k[k].push_back({cell, scale * sum});
            scale /= d;
        }
    }

    QuasiPolynomial qp;
    qp.dim = n;
    qp.kind = kind;
    qp.period = d;
    qp.coefficients.reserve(n + 1);
    for (int k = 0; k <= n; ++k)
        qp.coefficients.emplace_back(d, kind, std::move(pieces_per_k[k]));
    return qp;
}

Rational eval_quasi(const QuasiPolynomial& qp, const Rational& t) {
    Rational acc(0);
    for (int k = qp.dim; k >= 0; --k) acc = acc * t + qp.coefficients[k](t);
    return acc;
}

Rational eval_binomial_formula(const StepFunction& level_counts, int dim, const Rational& d,
                               KindFlag kind, const Rational& t) {
    const Rational x = t / d;
    // Exactly dim+1 consecutive integers land in the half-open window.
    const Integer a_hi = kind == KindFlag::closed ? floor_int(x) : ceil_int(x) - 1;
    Rational total(0);
    for (Integer a = a_hi - dim; a <= a_hi; ++a) {
        const std::int64_t count = step_eval(level_counts, t - d * to_rational(a));
        if (count == 0) continue;
        total += Rational(count) * binomial(to_rational(a) + dim, dim);
    }
    return total;
}

Rational eval_binomial_formula(const RationalSimplex& simplex, KindFlag kind, const Rational& t,
                               std::int64_t budget) {
    return eval_binomial_formula(determined_sets(simplex, kind, budget), simplex.dim(),
                                 simplex.denominator(), kind, t);
}

std::vector<Rational> sample_dilations(const QuasiPolynomial& qp, int periods,
                                       std::size_t max_count) {
    if (periods <= 0 || max_count == 0) return {};
    const Rational limit = Rational(periods) * qp.period;

    std::set<Rational> endpoints;
    for (const auto& c : qp.coefficients) {
        for (const auto& piece : c.pieces()) {
            endpoints.insert(piece.interval.lo);
            endpoints.insert(piece.interval.hi);
        }
    }
    const std::vector<Rational> base(endpoints.begin(), endpoints.end());

    std::set<Rational> grid;
    const auto add = [&](const Rational& t) {
        if (t > 0 && t <= limit) grid.insert(t);
    };
    for (int p = 0; p < periods; ++p) {
        const Rational shift = Rational(p) * qp.period;
        for (std::size_t i = 0; i < base.size(); ++i) {
            add(base[i] + shift);
            if (i + 1 < base.size()) add((base[i] + base[i + 1]) / 2 + shift);
        }
    }
    int integers = 0;
    for (Integer a = 1; to_rational(a) <= limit && integers < 256; ++a, ++integers)
        add(to_rational(a));

    std::vector<Rational> all(grid.begin(), grid.end());
    if (all.size() <= max_count) return all;
    std::vector<Rational> out;
    out.reserve(max_count);
    // evenly spaced index picks stay sorted and distinct
    for (std::size_t i = 0; i < max_count; ++i) out.push_back(all[i * all.size() / max_count]);
    return out;
}

PeriodicPiecewisePolynomial derivative_piecewise(const QuasiPolynomial& qp, int k) {
    if (k < 0 || k >= qp.dim)
        throw std::invalid_argument("derivative relation needs 0 <= k < dim");
    return derivative_pieces(qp.coefficients[k]);
}

bool leading_coefficient_check(const QuasiPolynomial& qp, const Rational& volume) {
    for (int k = 0; k <= qp.dim; ++k) {
        const int expected_degree = qp.dim - k;
        const Rational expected_leading = (expected_degree % 2 == 0 ? Rational(1) : Rational(-1)) *
                                          binomial(Rational(qp.dim), k) * volume;
        for (const auto& piece : qp.coefficients[k].pieces()) {
            if (piece.interval.is_point()) continue;
            if (piece.poly.degree() != expected_degree) return false;
            if (piece.poly.leading_coefficient() != expected_leading) return false;
        }
    }
    return true;
}

}  // namespace ehrhart
