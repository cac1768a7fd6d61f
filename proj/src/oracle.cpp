#include "ehrhart/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace ehrhart {

namespace {

// Membership test data for one dilated cell, with denominators cleared:
// a point z is in the closed cell iff every null row dotted with (z, 1)
// vanishes and every lambda row is >= 0; strict positivity gives the
// relative interior instead.
struct MemberRows {
    std::vector<std::vector<Integer>> lambda_rows;
    std::vector<std::vector<Integer>> null_rows;
};

std::vector<Integer> cleared_row(const RationalVector& row) {
    Integer scale(1);
    for (const auto& x : row) scale = lcm(scale, denominator(x));
    std::vector<Integer> out;
    out.reserve(row.size());
    Integer content(0);
    for (const auto& x : row) {
        Integer v = numerator(x) * (scale / denominator(x));
        content = gcd(content, v);
        out.push_back(std::move(v));
    }
    if (content > 1)
        for (auto& v : out) v /= content;
    return out;
}

MemberRows member_rows(const std::vector<RationalVector>& verts, const Rational& t) {
    const std::size_t ambient = verts[0].size();
    RationalMatrix b(ambient + 1, verts.size());
    for (std::size_t j = 0; j < verts.size(); ++j) {
        for (std::size_t i = 0; i < ambient; ++i) b(i, j) = t * verts[j][i];
        b(ambient, j) = 1;
    }
    MemberRows out;
    const RationalMatrix inv = left_inverse(b);
    for (std::size_t i = 0; i < inv.rows(); ++i) out.lambda_rows.push_back(cleared_row(inv.row(i)));
    for (const auto& w : left_nullspace(b)) out.null_rows.push_back(cleared_row(w));
    return out;
}

template <typename Int>
struct TypedRows {
    std::vector<std::vector<Int>> lambda_rows;
    std::vector<std::vector<Int>> null_rows;
};

template <typename Int>
bool in_cell(const TypedRows<Int>& cell, const std::vector<Int>& z, bool strict) {
    for (const auto& row : cell.null_rows) {
        Int s = row.back();
        for (std::size_t j = 0; j < z.size(); ++j) s += row[j] * z[j];
        if (s != 0) return false;
    }
    for (const auto& row : cell.lambda_rows) {
        Int s = row.back();
        for (std::size_t j = 0; j < z.size(); ++j) s += row[j] * z[j];
        if (strict ? s <= 0 : s < 0) return false;
    }
    return true;
}

template <typename Int>
Integer scan_box(const std::vector<TypedRows<Int>>& cells, const std::vector<Int>& lo,
                 const std::vector<Int>& hi, bool strict) {
    std::int64_t count = 0;
    std::vector<Int> z = lo;
    while (true) {
        for (const auto& cell : cells) {
            if (in_cell(cell, z, strict)) {
                ++count;
                break;
            }
        }
        std::size_t i = z.size();
        while (i > 0 && z[i - 1] == hi[i - 1]) {
            z[i - 1] = lo[i - 1];
            --i;
        }
        if (i == 0) break;
        ++z[i - 1];
    }
    return Integer(count);
}

constexpr long long kInt64Cap = 1LL << 61;

std::vector<long long> narrow_row(const std::vector<Integer>& row) {
    std::vector<long long> out;
    out.reserve(row.size());
    for (const auto& v : row) out.push_back(v.convert_to<long long>());
    return out;
}

// The narrowed test is exact when every |coordinate bound| and every
// row-by-point dot product provably fits in int64.
std::optional<std::vector<TypedRows<long long>>> try_narrow(const std::vector<MemberRows>& cells,
                                                            const std::vector<Integer>& lo,
                                                            const std::vector<Integer>& hi) {
    std::vector<Integer> maxabs;
    maxabs.reserve(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (abs(lo[i]) > kInt64Cap || abs(hi[i]) > kInt64Cap) return std::nullopt;
        maxabs.push_back(std::max(abs(lo[i]), abs(hi[i])));
    }
    const auto row_fits = [&](const std::vector<Integer>& row) {
        Integer bound = abs(row.back());
        for (std::size_t j = 0; j + 1 < row.size(); ++j) bound += abs(row[j]) * maxabs[j];
        return bound <= kInt64Cap;
    };
    std::vector<TypedRows<long long>> out;
    out.reserve(cells.size());
    for (const auto& cell : cells) {
        TypedRows<long long> t;
        for (const auto& row : cell.lambda_rows) {
            if (!row_fits(row)) return std::nullopt;
            t.lambda_rows.push_back(narrow_row(row));
        }
        for (const auto& row : cell.null_rows) {
            if (!row_fits(row)) return std::nullopt;
            t.null_rows.push_back(narrow_row(row));
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<TypedRows<Integer>> keep_wide(const std::vector<MemberRows>& cells) {
    std::vector<TypedRows<Integer>> out;
    out.reserve(cells.size());
    for (const auto& cell : cells) out.push_back({cell.lambda_rows, cell.null_rows});
    return out;
}

}  // namespace

std::optional<RationalVector> barycentric(const RationalSimplex& s, const RationalVector& point) {
    if (point.size() != s.ambient_dim())
        throw std::invalid_argument("point dimension does not match the simplex");
    const auto& verts = s.vertices();
    RationalMatrix m(s.ambient_dim() + 1, verts.size());
    for (std::size_t j = 0; j < verts.size(); ++j) {
        for (std::size_t i = 0; i < point.size(); ++i) m(i, j) = verts[j][i];
        m(point.size(), j) = 1;
    }
    RationalVector rhs = point;
    rhs.push_back(1);
    return solve_consistent(m, rhs);
}

Integer brute_count(const CountQuery& query, std::int64_t budget) {
    if (budget <= 0) throw std::invalid_argument("budget must be positive");
    const Rational& t = query.t;
    if (query.kind == KindFlag::closed) {
        if (t < 0) throw std::invalid_argument("dilation must be nonnegative for the closed count");
        if (t == 0) return 1;  // 0 * P is the origin
    } else if (t <= 0) {
        throw std::invalid_argument("dilation must be positive for the open count");
    }

    // points spanning the bounding box, and the cells membership is tested
    // against (maximal cells for the closed kind, non-boundary cells for the
    // open kind, largest first so typical hits exit early)
    const std::vector<RationalVector>* box_pts = nullptr;
    std::vector<const std::vector<RationalVector>*> test_cells;
    if (const auto* s = std::get_if<RationalSimplex>(&query.target)) {
        box_pts = &s->vertices();
        test_cells.push_back(&s->vertices());
    } else {
        const auto& dec = std::get<Decomposition>(query.target);
        box_pts = &dec.points;
        for (const auto& cell : dec.cells) {
            if (query.kind == KindFlag::closed ? cell.simplex.dim() == dec.max_dim
                                               : !cell.on_boundary)
                test_cells.push_back(&cell.simplex.vertices());
        }
        std::stable_sort(test_cells.begin(), test_cells.end(),
                         [](const auto* a, const auto* b) { return a->size() > b->size(); });
    }

    const std::size_t ambient = box_pts->front().size();
    std::vector<Integer> lo(ambient), hi(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        Rational mn = t * box_pts->front()[i];
        Rational mx = mn;
        for (const auto& p : *box_pts) {
            const Rational v = t * p[i];
            mn = std::min(mn, v);
            mx = std::max(mx, v);
        }
        lo[i] = ceil_int(mn);
        hi[i] = floor_int(mx);
        if (lo[i] > hi[i]) return 0;
    }
    Integer size(1);
    for (std::size_t i = 0; i < ambient; ++i) size *= hi[i] - lo[i] + 1;
    if (size > budget)
        throw std::runtime_error("bounding-box budget exceeded: box holds " + size.str() +
                                 " points (budget " + std::to_string(budget) + ")");

    std::vector<MemberRows> cells;
    cells.reserve(test_cells.size());
    for (const auto* verts : test_cells) cells.push_back(member_rows(*verts, t));

    const bool strict = query.kind == KindFlag::open;
    if (const auto narrowed = try_narrow(cells, lo, hi)) {
        std::vector<long long> nlo, nhi;
        for (const auto& v : lo) nlo.push_back(v.convert_to<long long>());
        for (const auto& v : hi) nhi.push_back(v.convert_to<long long>());
        return scan_box(*narrowed, nlo, nhi, strict);
    }
    return scan_box(keep_wide(cells), lo, hi, strict);
}

Integer brute_count(const RationalSimplex& s, const Rational& t, KindFlag kind,
                    std::int64_t budget) {
    return brute_count(CountQuery{s, t, kind}, budget);
}

Integer brute_count(const Decomposition& dec, const Rational& t, KindFlag kind,
                    std::int64_t budget) {
    return brute_count(CountQuery{dec, t, kind}, budget);
}

Integer brute_count(const RationalPolytope& p, const Rational& t, KindFlag kind,
                    std::int64_t budget) {
    return brute_count(CountQuery{triangulate(p.vertices()), t, kind}, budget);
}

RationalPolytope random_polytope(std::uint64_t seed, std::size_t ambient,
                                 std::size_t max_vertices, std::int64_t coord_bound,
                                 std::int64_t denom_bound) {
    if (ambient == 0 || max_vertices == 0 || coord_bound <= 0 || denom_bound <= 0)
        throw std::invalid_argument("random polytope bounds must be positive");
    SplitMix64 rng(seed);
    const std::size_t count = 1 + static_cast<std::size_t>(rng.below(max_vertices));
    std::vector<RationalVector> points(count, RationalVector(ambient));
    for (auto& p : points) {
        for (auto& c : p) {
            const std::int64_t den =
                1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(denom_bound)));
            const std::uint64_t span = static_cast<std::uint64_t>(2 * coord_bound * den + 1);
            const std::int64_t num =
                static_cast<std::int64_t>(rng.below(span)) - coord_bound * den;
            c = Rational(Integer(num), Integer(den));
        }
    }
    return RationalPolytope(std::move(points));
}

}  // namespace ehrhart
