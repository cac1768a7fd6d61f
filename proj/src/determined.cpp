#include "ehrhart/determined.hpp"

#include <stdexcept>
#include <vector>

namespace ehrhart {

namespace {

// ---------------------------------------------------------------------------
// The candidate scan. For a simplex with vertex matrix A (N x (n+1)) and
// denominator d, every counted lattice point is b = A u with weights u in
// [0,d)^{n+1} (or (0,d]^{n+1}), so b lies in the per-coordinate box
// [sum_j min(0,a_ij) d, sum_j max(0,a_ij) d]. For each integer b in the box:
//
//  * b must lie in the column space of A, tested with integer functionals
//    spanning the left nullspace;
//  * if the vertices are linearly independent (rank A = n+1) the weights are
//    unique, u = L b with L the left inverse; the level contributes the
//    single point sum(u) when u is in range;
//  * otherwise rank A = n and [A; 1] still has full column rank, so the
//    weights are an affine function of the level: u(l) = G b + h l from the
//    left inverse of [A; 1]. The range constraints on each u_i then cut an
//    interval of levels (sum h_i = 1 keeps it bounded on both sides).
//
// All of this is precomputed once over the rationals and cleared of
// denominators, leaving integer rows applied to integer candidates. The scan
// itself runs either on int64 (when exact bounds prove no overflow is
// possible) or on arbitrary-precision integers.
// ---------------------------------------------------------------------------

struct ScanData {
    bool point_branch = false;
    std::vector<Integer> box_lo, box_hi;
    Integer box_size{0};
    std::vector<std::vector<Integer>> w_rows;  // left-nullspace functionals of A
    std::vector<std::vector<Integer>> r_rows;  // scaled L (point) or scaled G (interval)
    std::vector<Integer> q;                    // interval branch: scaled slopes
    Integer bound{0};                          // scaled version of d
    Integer ell_den{1};                        // point branch: level denominator
};

std::vector<Integer> scaled_integer_row(const RationalVector& row, const Integer& scale) {
    std::vector<Integer> out;
    out.reserve(row.size());
    for (const auto& x : row) {
        const Rational v = to_rational(scale) * x;
        out.push_back(numerator(v));  // exact by construction of the scale
    }
    return out;
}

Integer denominator_lcm(const RationalVector& row) {
    Integer l(1);
    for (const auto& x : row) l = lcm(l, denominator(x));
    return l;
}

ScanData build_scan_data(const RationalSimplex& s) {
    const RationalMatrix a = s.vertex_matrix();
    const std::size_t ambient = s.ambient_dim();
    const std::size_t cols = s.vertices().size();  // n + 1
    const Rational d = s.denominator();
    const Integer dn = numerator(d), dd = denominator(d);

    ScanData sd;
    sd.box_lo.resize(ambient);
    sd.box_hi.resize(ambient);
    sd.box_size = 1;
    for (std::size_t i = 0; i < ambient; ++i) {
        Rational lo(0), hi(0);
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational scaled = a(i, j) * d;
            if (scaled < 0) lo += scaled;
            if (scaled > 0) hi += scaled;
        }
        sd.box_lo[i] = ceil_int(lo);
        sd.box_hi[i] = floor_int(hi);
        sd.box_size *= sd.box_hi[i] - sd.box_lo[i] + 1;
    }

    for (const auto& w : left_nullspace(a)) {
        // clear denominators and divide out the content to keep entries small
        std::vector<Integer> row = scaled_integer_row(w, denominator_lcm(w));
        Integer content(0);
        for (const auto& x : row) content = gcd(content, abs(x));
        if (content > 1)
            for (auto& x : row) x /= content;
        sd.w_rows.push_back(std::move(row));
    }

    const std::size_t rk = rank(a);
    if (rk == cols) {
        sd.point_branch = true;
        const RationalMatrix l = left_inverse(a);
        Integer delta(1);
        for (std::size_t i = 0; i < l.rows(); ++i) delta = lcm(delta, denominator_lcm(l.row(i)));
        const Integer scale = dd * delta;  // u'_i = scale * u_i
        for (std::size_t i = 0; i < l.rows(); ++i)
            sd.r_rows.push_back(scaled_integer_row(l.row(i), scale));
        sd.bound = delta * dn;  // u_i in [0, d) becomes u'_i in [0, bound)
        sd.ell_den = scale;
    } else {
        // rank must be cols - 1: [A; 1] has full column rank by affine
        // independence, so rank A is at least cols - 1
        RationalMatrix b(ambient + 1, cols);
        for (std::size_t j = 0; j < cols; ++j) {
            for (std::size_t i = 0; i < ambient; ++i) b(i, j) = a(i, j);
            b(ambient, j) = 1;
        }
        const RationalMatrix binv = left_inverse(b);  // (n+1) x (N+1)
        Integer delta(1);
        for (std::size_t i = 0; i < binv.rows(); ++i)
            delta = lcm(delta, denominator_lcm(binv.row(i)));
        const Integer scale = dd * delta;
        for (std::size_t i = 0; i < binv.rows(); ++i) {
            RationalVector g_row(ambient);
            for (std::size_t j = 0; j < ambient; ++j) g_row[j] = binv(i, j);
            sd.r_rows.push_back(scaled_integer_row(g_row, scale));
            const Rational qi = to_rational(scale) * binv(i, ambient);
            sd.q.push_back(numerator(qi));
        }
        sd.bound = delta * dn;
    }
    return sd;
}

// Fraction with positive denominator; ordering via cross multiplication.
template <typename Int, typename Wide>
struct Fraction {
    Int num{0}, den{1};

    friend bool operator<(const Fraction& a, const Fraction& b) {
        return Wide(a.num) * Wide(b.den) < Wide(b.num) * Wide(a.den);
    }
    friend bool operator==(const Fraction& a, const Fraction& b) {
        return Wide(a.num) * Wide(b.den) == Wide(b.num) * Wide(a.den);
    }
};

template <typename Int>
struct TypedScan {
    bool point_branch = false;
    bool open_range = false;  // weights in (0, d] instead of [0, d)
    std::vector<Int> box_lo, box_hi;
    std::vector<std::vector<Int>> w_rows, r_rows;
    std::vector<Int> q;
    Int bound{};
    Int ell_den{};
};

Rational fraction_to_rational(const Integer& num, const Integer& den) {
    return Rational(num, den);
}
Rational fraction_to_rational(long long num, long long den) {
    return Rational(Integer(num), Integer(den));
}

template <typename Int, typename Wide>
std::vector<Interval> run_scan(const TypedScan<Int>& sc) {
    const std::size_t dims = sc.box_lo.size();
    const std::size_t rows = sc.r_rows.size();
    std::vector<Interval> found;
    std::vector<Int> b = sc.box_lo;
    std::vector<Int> dots(rows);

    using Frac = Fraction<Int, Wide>;

    for (;;) {
        bool consistent = true;
        for (const auto& w : sc.w_rows) {
            Int acc{0};
            for (std::size_t j = 0; j < dims; ++j) acc += w[j] * b[j];
            if (acc != 0) {
                consistent = false;
                break;
            }
        }
        if (consistent) {
            for (std::size_t i = 0; i < rows; ++i) {
                Int acc{0};
                for (std::size_t j = 0; j < dims; ++j) acc += sc.r_rows[i][j] * b[j];
                dots[i] = acc;
            }
            if (sc.point_branch) {
                bool in_range = true;
                Int level_num{0};
                for (std::size_t i = 0; i < rows && in_range; ++i) {
                    in_range = sc.open_range ? (dots[i] > 0 && dots[i] <= sc.bound)
                                             : (dots[i] >= 0 && dots[i] < sc.bound);
                    level_num += dots[i];
                }
                if (in_range)
                    found.push_back(
                        Interval::point(fraction_to_rational(level_num, sc.ell_den)));
            } else {
                // intersect the level constraints 0 <= P_i + q_i l < bound
                // (or 0 < P_i + q_i l <= bound for the open range)
                bool feasible = true;
                bool has_lo = false, has_hi = false;
                Frac lo, hi;
                bool lo_closed = true, hi_closed = true;
                auto add_lower = [&](const Frac& f, bool closed) {
                    if (!has_lo) {
                        lo = f;
                        lo_closed = closed;
                        has_lo = true;
                    } else if (lo < f) {
                        lo = f;
                        lo_closed = closed;
                    } else if (f == lo) {
                        lo_closed = lo_closed && closed;
                    }
                };
                auto add_upper = [&](const Frac& f, bool closed) {
                    if (!has_hi) {
                        hi = f;
                        hi_closed = closed;
                        has_hi = true;
                    } else if (f < hi) {
                        hi = f;
                        hi_closed = closed;
                    } else if (f == hi) {
                        hi_closed = hi_closed && closed;
                    }
                };
                for (std::size_t i = 0; i < rows && feasible; ++i) {
                    const Int p = dots[i];
                    const Int qi = sc.q[i];
                    if (qi == 0) {
                        feasible = sc.open_range ? (p > 0 && p <= sc.bound)
                                                 : (p >= 0 && p < sc.bound);
                    } else if (qi > 0) {
                        add_lower(Frac{Int(-p), qi}, !sc.open_range);
                        add_upper(Frac{Int(sc.bound - p), qi}, sc.open_range);
                    } else {
                        add_upper(Frac{p, Int(-qi)}, !sc.open_range);
                        add_lower(Frac{Int(p - sc.bound), Int(-qi)}, sc.open_range);
                    }
                }
                if (feasible && has_lo && has_hi && !(hi < lo)) {
                    Interval iv{fraction_to_rational(lo.num, lo.den),
                                fraction_to_rational(hi.num, hi.den), lo_closed, hi_closed};
                    if (!iv.empty()) found.push_back(std::move(iv));
                }
            }
        }
        // odometer
        std::size_t k = dims;
        while (k > 0 && b[k - 1] == sc.box_hi[k - 1]) {
            b[k - 1] = sc.box_lo[k - 1];
            --k;
        }
        if (k == 0) break;
        ++b[k - 1];
    }
    return found;
}

constexpr long long kInt64Cap = 1LL << 61;

bool fits_cap(const Integer& v) { return abs(v) <= kInt64Cap; }

// Downcast the scan data to int64 when exact bounds show every intermediate
// value stays far from overflow; nullopt otherwise.
std::optional<TypedScan<long long>> try_downcast(const ScanData& sd, bool open_range) {
    TypedScan<long long> out;
    out.point_branch = sd.point_branch;
    out.open_range = open_range;
    const std::size_t dims = sd.box_lo.size();
    std::vector<Integer> maxabs(dims);
    for (std::size_t i = 0; i < dims; ++i) {
        if (!fits_cap(sd.box_lo[i]) || !fits_cap(sd.box_hi[i])) return std::nullopt;
        maxabs[i] = std::max(abs(sd.box_lo[i]), abs(sd.box_hi[i]));
        out.box_lo.push_back(sd.box_lo[i].convert_to<long long>());
        out.box_hi.push_back(sd.box_hi[i].convert_to<long long>());
    }
    const auto row_ok = [&](const std::vector<Integer>& row) {
        Integer dot_bound(0);
        for (std::size_t j = 0; j < dims; ++j) dot_bound += abs(row[j]) * maxabs[j];
        return dot_bound <= kInt64Cap;
    };
    const auto convert_rows = [&](const std::vector<std::vector<Integer>>& rows,
                                  std::vector<std::vector<long long>>& dst) {
        for (const auto& row : rows) {
            if (!row_ok(row)) return false;
            std::vector<long long> r;
            r.reserve(row.size());
            for (const auto& x : row) r.push_back(x.convert_to<long long>());
            dst.push_back(std::move(r));
        }
        return true;
    };
    if (!convert_rows(sd.w_rows, out.w_rows)) return std::nullopt;
    if (!convert_rows(sd.r_rows, out.r_rows)) return std::nullopt;
    if (!fits_cap(sd.bound) || !fits_cap(sd.ell_den)) return std::nullopt;
    if (sd.point_branch) {
        // levels sum n+1 in-range values, each within [0, bound]
        if (Integer(sd.r_rows.size()) * sd.bound > kInt64Cap) return std::nullopt;
    }
    for (const auto& qi : sd.q) {
        if (!fits_cap(qi)) return std::nullopt;
        out.q.push_back(qi.convert_to<long long>());
    }
    out.bound = sd.bound.convert_to<long long>();
    out.ell_den = sd.ell_den.convert_to<long long>();
    return out;
}

TypedScan<Integer> as_integer_scan(const ScanData& sd, bool open_range) {
    return {sd.point_branch, open_range, sd.box_lo,   sd.box_hi, sd.w_rows,
            sd.r_rows,       sd.q,       sd.bound,    sd.ell_den};
}

std::vector<Interval> scan_candidates(const RationalSimplex& s, bool open_range,
                                      std::int64_t budget) {
    const ScanData sd = build_scan_data(s);
    if (sd.box_size > budget)
        throw std::runtime_error("enumeration budget exceeded: candidate box holds " +
                                 sd.box_size.str() + " points (budget " +
                                 std::to_string(budget) + ")");
    if (auto fast = try_downcast(sd, open_range))
        return run_scan<long long, __int128>(*fast);
    return run_scan<Integer, Integer>(as_integer_scan(sd, open_range));
}

Interval closed_support(const RationalSimplex& s) {
    const Rational total = Rational(s.dim() + 1) * s.denominator();
    return Interval::closed_open(Rational(0), total);
}

}  // namespace

StepFunction determined_sets(const RationalSimplex& simplex, KindFlag kind,
                             std::int64_t budget) {
    StepFunction closed(closed_support(simplex), scan_candidates(simplex, false, budget));
    if (kind == KindFlag::closed) return closed;
    const Rational total = Rational(simplex.dim() + 1) * simplex.denominator();
    return reflect_step(closed, total);
}

StepFunction determined_sets_direct_open(const RationalSimplex& simplex, std::int64_t budget) {
    const Rational total = Rational(simplex.dim() + 1) * simplex.denominator();
    return StepFunction(Interval::open_closed(Rational(0), total),
                        scan_candidates(simplex, true, budget));
}

}  // namespace ehrhart
