#include "ehrhart/polytope.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace ehrhart {

namespace {

// Barycentric coordinates of q with respect to affinely independent points:
// the unique lambda with sum lambda_i = 1 and sum lambda_i v_i = q, or
// nullopt when q is outside the affine hull.
std::optional<RationalVector> affine_coordinates(const std::vector<RationalVector>& verts,
                                                 const RationalVector& q) {
    const std::size_t ambient = verts[0].size();
    RationalMatrix m(ambient + 1, verts.size());
    for (std::size_t j = 0; j < verts.size(); ++j) {
        for (std::size_t i = 0; i < ambient; ++i) m(i, j) = verts[j][i];
        m(ambient, j) = 1;
    }
    RationalVector rhs(ambient + 1);
    for (std::size_t i = 0; i < ambient; ++i) rhs[i] = q[i];
    rhs[ambient] = 1;
    return solve_consistent(m, rhs);
}

std::vector<RationalVector> gather(const std::vector<RationalVector>& pts,
                                   const std::vector<std::size_t>& idx) {
    std::vector<RationalVector> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(pts[i]);
    return out;
}

// Incremental placing over the deduplicated insertion order; returns the
// maximal cells as sorted index vectors.
std::vector<std::vector<std::size_t>> placing_cells(const std::vector<RationalVector>& pts,
                                                    const std::vector<std::size_t>& order) {
    std::vector<std::vector<std::size_t>> cells{{order[0]}};
    for (std::size_t oi = 1; oi < order.size(); ++oi) {
        const std::size_t qi = order[oi];
        const RationalVector& q = pts[qi];

        if (!affine_coordinates(gather(pts, cells.front()), q)) {
            // q leaves the current affine hull: cone every cell over q
            for (auto& c : cells) {
                c.push_back(qi);
                std::sort(c.begin(), c.end());
            }
            continue;
        }

        std::vector<std::optional<RationalVector>> coords(cells.size());
        const auto coords_of = [&](std::size_t ci) -> const RationalVector& {
            if (!coords[ci]) coords[ci] = affine_coordinates(gather(pts, cells[ci]), q);
            return *coords[ci];
        };

        bool inside = false;
        for (std::size_t ci = 0; ci < cells.size() && !inside; ++ci) {
            const RationalVector& lambda = coords_of(ci);
            inside = std::all_of(lambda.begin(), lambda.end(),
                                 [](const Rational& l) { return l >= 0; });
        }
        if (inside) continue;  // not a hull vertex, and never will be

        // boundary facets: those lying in exactly one maximal cell
        std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>>
            facet_hosts;  // facet -> (cell index, position of opposite vertex)
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
            const auto& c = cells[ci];
            if (c.size() < 2) continue;
            for (std::size_t w = 0; w < c.size(); ++w) {
                std::vector<std::size_t> facet;
                facet.reserve(c.size() - 1);
                for (std::size_t j = 0; j < c.size(); ++j)
                    if (j != w) facet.push_back(c[j]);
                facet_hosts[facet].emplace_back(ci, w);
            }
        }
        std::vector<std::vector<std::size_t>> fresh;
        for (const auto& [facet, hosts] : facet_hosts) {
            if (hosts.size() != 1) continue;
            const auto [ci, w] = hosts.front();
            // q sees the facet iff it lies strictly beyond its hyperplane
            if (coords_of(ci)[w] >= 0) continue;
            std::vector<std::size_t> cell = facet;
            cell.push_back(qi);
            std::sort(cell.begin(), cell.end());
            fresh.push_back(std::move(cell));
        }
        cells.insert(cells.end(), fresh.begin(), fresh.end());
    }
    return cells;
}

bool hull_contains(const Decomposition& dec, const RationalVector& q) {
    for (std::size_t i = 0; i < dec.cells.size(); ++i) {
        if (dec.cells[i].simplex.dim() != dec.max_dim) continue;
        const auto lambda = affine_coordinates(dec.cells[i].simplex.vertices(), q);
        if (lambda && std::all_of(lambda->begin(), lambda->end(),
                                  [](const Rational& l) { return l >= 0; }))
            return true;
    }
    return false;
}

}  // namespace

int affine_dimension(const std::vector<RationalVector>& points) {
    if (points.empty()) return -1;
    const std::size_t ambient = points[0].size();
    RationalMatrix m(ambient + 1, points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (points[j].size() != ambient) throw std::invalid_argument("ragged point list");
        for (std::size_t i = 0; i < ambient; ++i) m(i, j) = points[j][i];
        m(ambient, j) = 1;
    }
    return static_cast<int>(rank(m)) - 1;
}

Decomposition triangulate(const std::vector<RationalVector>& points) {
    if (points.empty()) throw std::invalid_argument("triangulation needs at least one point");
    const std::size_t ambient = points[0].size();
    if (ambient == 0) throw std::invalid_argument("points need coordinates");
    for (const auto& p : points)
        if (p.size() != ambient) throw std::invalid_argument("ragged point list");

    std::vector<std::size_t> order;  // first occurrences, in input order
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool seen = false;
        for (auto j : order) seen = seen || points[j] == points[i];
        if (!seen) order.push_back(i);
    }

    const auto max_cells = placing_cells(points, order);

    std::set<std::vector<std::size_t>> faces;
    for (const auto& c : max_cells) {
        // all nonempty vertex subsets, via bitmask (cells are small)
        for (std::size_t mask = 1; mask < (std::size_t(1) << c.size()); ++mask) {
            std::vector<std::size_t> f;
            for (std::size_t j = 0; j < c.size(); ++j)
                if (mask & (std::size_t(1) << j)) f.push_back(c[j]);
            faces.insert(std::move(f));
        }
    }

    const std::size_t max_size = max_cells.front().size();  // max_dim + 1
    std::map<std::vector<std::size_t>, int> ridge_count;
    for (const auto& f : faces) {
        if (f.size() != max_size - 1) continue;
        for (const auto& c : max_cells)
            if (std::includes(c.begin(), c.end(), f.begin(), f.end())) ++ridge_count[f];
    }
    std::vector<std::vector<std::size_t>> boundary_ridges;
    for (const auto& [ridge, count] : ridge_count)
        if (count == 1) boundary_ridges.push_back(ridge);

    Decomposition dec;
    dec.points = points;
    dec.max_dim = static_cast<int>(max_size) - 1;
    for (const auto& f : faces) {
        bool boundary = false;
        if (f.size() < max_size) {
            for (const auto& r : boundary_ridges) {
                if (std::includes(r.begin(), r.end(), f.begin(), f.end())) {
                    boundary = true;
                    break;
                }
            }
        }
        dec.cells.push_back({RationalSimplex(gather(points, f)), boundary});
        dec.vertex_indices.push_back(f);
    }
    return dec;
}

RationalPolytope::RationalPolytope(std::vector<RationalVector> generators)
    : generators_(std::move(generators)) {
    if (generators_.empty()) throw std::invalid_argument("polytope needs at least one generator");
    ambient_ = generators_[0].size();
    if (ambient_ == 0) throw std::invalid_argument("generators need coordinates");
    for (const auto& g : generators_)
        if (g.size() != ambient_) throw std::invalid_argument("ragged generator list");

    std::vector<RationalVector> uniq;
    for (const auto& g : generators_)
        if (std::find(uniq.begin(), uniq.end(), g) == uniq.end()) uniq.push_back(g);

    if (uniq.size() == 1) {
        vertices_ = uniq;
    } else {
        for (std::size_t i = 0; i < uniq.size(); ++i) {
            std::vector<RationalVector> others;
            others.reserve(uniq.size() - 1);
            for (std::size_t j = 0; j < uniq.size(); ++j)
                if (j != i) others.push_back(uniq[j]);
            if (!hull_contains(triangulate(others), uniq[i])) vertices_.push_back(uniq[i]);
        }
    }
    dim_ = affine_dimension(vertices_);
    denom_ = vertex_set_denominator(vertices_);
}

namespace {

// Re-represent a cell coefficient on the polytope period. A constant function
// (a single full-window piece with a degree <= 0 polynomial) is periodic with
// any period; everything else rebases, which requires an integer ratio.
PeriodicPiecewisePolynomial align_period(const PeriodicPiecewisePolynomial& c,
                                         const Rational& period) {
    if (c.period() == period) return c;
    if (c.pieces().size() == 1 && c.pieces().front().poly.degree() <= 0)
        return PeriodicPiecewisePolynomial::from_polynomial(period, c.kind(),
                                                            c.pieces().front().poly);
    return rebase(c, period);
}

}  // namespace

QuasiPolynomial polytope_quasi(const RationalPolytope& p, KindFlag kind, std::int64_t budget) {
    const Decomposition dec = triangulate(p.vertices());

    // Every cell period divides the polytope denominator, with one exception:
    // a cell that is the origin itself gets period 1 by convention, which may
    // exceed the denominator. Its coefficient is constant, so align_period
    // can re-represent it on any period.
    const Rational& period = p.denominator();

    QuasiPolynomial out;
    out.dim = dec.max_dim;
    out.kind = kind;
    out.period = period;
    out.coefficients.assign(out.dim + 1, PeriodicPiecewisePolynomial::zero(period, kind));

    for (const auto& cell : dec.cells) {
        if (kind == KindFlag::open && cell.on_boundary) continue;
        const QuasiPolynomial cqp = simplex_coefficients(cell.simplex, KindFlag::open, budget);
        for (int k = 0; k <= cqp.dim; ++k) {
            const auto aligned = rewindow(align_period(cqp.coefficients[k], period), kind);
            out.coefficients[k] = out.coefficients[k] + aligned;
        }
    }
    return out;
}

Rational volume(const RationalPolytope& p) {
    if (p.dim() != static_cast<int>(p.ambient_dim()))
        throw std::invalid_argument("relative volume unsupported");
    const Decomposition dec = triangulate(p.vertices());
    const std::size_t n = p.ambient_dim();
    Rational total(0);
    for (const auto& cell : dec.cells) {
        if (cell.simplex.dim() != dec.max_dim) continue;
        const auto& v = cell.simplex.vertices();
        RationalMatrix edges(n, n);
        for (std::size_t j = 1; j < v.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) edges(i, j - 1) = v[j][i] - v[0][i];
        total += abs(determinant(edges));
    }
    Rational n_factorial(1);
    for (std::size_t m = 2; m <= n; ++m) n_factorial *= static_cast<int>(m);
    return total / n_factorial;
}

bool polytope_reciprocity_check(const QuasiPolynomial& closed_qp, const QuasiPolynomial& open_qp,
                                const std::vector<Rational>& sample_points) {
    if (closed_qp.dim != open_qp.dim) return false;
    const Rational sign = closed_qp.dim % 2 == 0 ? Rational(1) : Rational(-1);
    for (const auto& t : sample_points) {
        if (eval_quasi(closed_qp, -t) != sign * eval_quasi(open_qp, t)) return false;
        if (eval_quasi(open_qp, -t) != sign * eval_quasi(closed_qp, t)) return false;
    }
    return true;
}

bool coefficient_reciprocity_check(const QuasiPolynomial& closed_qp,
                                   const QuasiPolynomial& open_qp) {
    if (closed_qp.dim != open_qp.dim || closed_qp.period != open_qp.period) return false;
    if (closed_qp.kind != KindFlag::closed || open_qp.kind != KindFlag::open) return false;
    for (int k = 0; k <= closed_qp.dim; ++k) {
        const Rational sign = (closed_qp.dim - k) % 2 == 0 ? Rational(1) : Rational(-1);
        if (!(reflect_periodic(closed_qp.coefficients[k]) == sign * open_qp.coefficients[k]))
            return false;
    }
    return true;
}

}  // namespace ehrhart
