// End-to-end acceptance checks. Each criterion prints exactly one
// "criterion N: PASS/FAIL" line; the process exits nonzero if any fail.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/oracle.hpp"

using namespace ehrhart;

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

std::string seconds_since(Clock::time_point start) {
    const std::chrono::duration<double> dt = Clock::now() - start;
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << dt.count() << "s";
    return out.str();
}

void report(int criterion, bool ok, const std::string& detail) {
    std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL") << " - " << detail
              << "\n";
    if (!ok) ++failures;
}

const Rational h(1, 2);

RationalSimplex reference_tet() {
    return RationalSimplex({{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
}

constexpr std::int64_t kBudget = 100'000'000;

struct CaseData {
    std::string label;
    RationalPolytope p;
    Decomposition dec;
    QuasiPolynomial closed;
    QuasiPolynomial open;
    std::vector<Rational> ts;
    bool simplex = false;
};

std::vector<CaseData> build_cases() {
    std::vector<std::pair<std::string, RationalPolytope>> raw;
    raw.emplace_back("tetrahedron", RationalPolytope({{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
    raw.emplace_back("unit square", RationalPolytope({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    {
        std::vector<RationalVector> cube;
        for (int x = 0; x <= 1; ++x)
            for (int y = 0; y <= 1; ++y)
                for (int z = 0; z <= 1; ++z) cube.push_back({x, y, z});
        raw.emplace_back("unit cube", RationalPolytope(cube));
    }
    raw.emplace_back("unit segment", RationalPolytope({{0}, {1}}));
    raw.emplace_back("point 2", RationalPolytope({{Rational(2)}}));
    raw.emplace_back("off-lattice segment", RationalPolytope({{1, 2}, {3, 4}}));
    raw.emplace_back("rational triangle",
                     RationalPolytope({{h, 0}, {0, Rational(1, 3)}, {1, 1}}));
    for (std::uint64_t i = 0; i < 30; ++i) {
        const std::size_t ambient = 1 + i % 3;
        raw.emplace_back("random " + std::to_string(i),
                         random_polytope(101 + 0x9E3779B97F4A7C15ULL * i, ambient, 5, 3, 4));
    }

    std::vector<CaseData> cases;
    cases.reserve(raw.size());
    for (auto& [label, poly] : raw) {
        Decomposition dec = triangulate(poly.vertices());
        QuasiPolynomial closed = polytope_quasi(poly, KindFlag::closed, kBudget);
        QuasiPolynomial open = polytope_quasi(poly, KindFlag::open, kBudget);
        std::vector<Rational> ts = sample_dilations(closed, 3, 8);
        const bool simplex = poly.vertices().size() == static_cast<std::size_t>(poly.dim()) + 1;
        cases.push_back(CaseData{label, std::move(poly), std::move(dec), std::move(closed),
                                 std::move(open), std::move(ts), simplex});
    }
    return cases;
}

PeriodicPiecewisePolynomial two_piece(KindFlag kind, const Polynomial& first,
                                      const Polynomial& second) {
    if (kind == KindFlag::closed)
        return PeriodicPiecewisePolynomial(
            1, kind,
            {{Interval::closed_open(0, h), first}, {Interval::closed_open(h, 1), second}});
    return PeriodicPiecewisePolynomial(
        1, kind, {{Interval::open_closed(0, h), first}, {Interval::open_closed(h, 1), second}});
}

QuasiPolynomial expected_tet_quasi(KindFlag kind) {
    QuasiPolynomial qp;
    qp.dim = 3;
    qp.kind = kind;
    qp.period = 1;
    if (kind == KindFlag::closed) {
        qp.coefficients = {
            two_piece(kind, Polynomial({1, Rational(-5, 3), 1, Rational(-1, 3)}),
                      Polynomial({1, Rational(-13, 6), Rational(3, 2), Rational(-1, 3)})),
            two_piece(kind, Polynomial({Rational(5, 3), -2, 1}),
                      Polynomial({Rational(13, 6), -3, 1})),
            two_piece(kind, Polynomial({1, -1}), Polynomial({Rational(3, 2), -1})),
            PeriodicPiecewisePolynomial::from_polynomial(1, kind, Polynomial({Rational(1, 3)})),
        };
    } else {
        qp.coefficients = {
            two_piece(kind, Polynomial({0, Rational(-1, 6), Rational(-1, 2), Rational(-1, 3)}),
                      Polynomial({0, Rational(-2, 3), 0, Rational(-1, 3)})),
            two_piece(kind, Polynomial({Rational(1, 6), 1, 1}),
                      Polynomial({Rational(2, 3), 0, 1})),
            two_piece(kind, Polynomial({Rational(-1, 2), -1}), Polynomial({0, -1})),
            PeriodicPiecewisePolynomial::from_polynomial(1, kind, Polynomial({Rational(1, 3)})),
        };
    }
    return qp;
}

// 1. Level-count step functions of the reference tetrahedron, both kinds.
void criterion_1() {
    const auto start = Clock::now();
    const RationalSimplex s = reference_tet();
    const StepFunction expected_closed(
        Interval::closed_open(0, 4),
        std::vector<StepPiece>{{Interval::closed_open(0, 1), 1},
                               {Interval::closed_open(Rational(3, 2), Rational(5, 2)), 1}});
    const StepFunction expected_open(
        Interval::open_closed(0, 4),
        std::vector<StepPiece>{{Interval::open_closed(Rational(3, 2), Rational(5, 2)), 1},
                               {Interval::open_closed(3, 4), 1}});
    const bool ok = determined_sets(s, KindFlag::closed) == expected_closed &&
                    determined_sets(s, KindFlag::open) == expected_open &&
                    determined_sets_direct_open(s) == expected_open;
    report(1, ok,
           "reference tetrahedron level counts match the published step functions, both kinds (" +
               seconds_since(start) + ")");
}

// 2. Coefficient functions of the reference tetrahedron, both kinds, compared
// exactly as canonical piecewise representations.
void criterion_2() {
    const auto start = Clock::now();
    const RationalSimplex s = reference_tet();
    const bool ok = simplex_coefficients(s, KindFlag::closed) == expected_tet_quasi(KindFlag::closed) &&
                    simplex_coefficients(s, KindFlag::open) == expected_tet_quasi(KindFlag::open);
    report(2, ok,
           "reference tetrahedron coefficient functions match exactly, both kinds (" +
               seconds_since(start) + ")");
}

// 3. The coefficient functions reproduce brute-force lattice counts on a grid
// of at least 200 (polytope, dilation) pairs, both kinds each.
void criterion_3(const std::vector<CaseData>& cases) {
    const auto start = Clock::now();
    long pairs = 0;
    long counts = 0;
    std::string problem;
    for (const auto& c : cases) {
        for (const auto& t : c.ts) {
            ++pairs;
            for (const KindFlag kind : {KindFlag::closed, KindFlag::open}) {
                const auto& qp = kind == KindFlag::closed ? c.closed : c.open;
                const Rational got = eval_quasi(qp, t);
                const Integer want = brute_count(c.dec, t, kind, kBudget);
                ++counts;
                if (got != to_rational(want) && problem.empty())
                    problem = c.label + " at t = " + rational_to_string(t) + ": quasi " +
                              rational_to_string(got) + " vs brute " + want.str();
            }
        }
    }
    const bool ok = problem.empty() && pairs >= 200;
    report(3, ok,
           problem.empty()
               ? std::to_string(pairs) + " dilation pairs, " + std::to_string(counts) +
                     " exact count comparisons (" + seconds_since(start) + ")"
               : problem);
}

// 4. Reciprocity: value-level on every case, coefficient-level (as canonical
// representations) on every simplex case.
void criterion_4(const std::vector<CaseData>& cases) {
    const auto start = Clock::now();
    long value_checks = 0;
    long structural_checks = 0;
    std::string problem;
    for (const auto& c : cases) {
        ++value_checks;
        if (!polytope_reciprocity_check(c.closed, c.open, c.ts) && problem.empty())
            problem = "value reciprocity fails for " + c.label;
        if (c.simplex) {
            ++structural_checks;
            if (!coefficient_reciprocity_check(c.closed, c.open) && problem.empty())
                problem = "coefficient reciprocity fails for " + c.label;
        }
    }
    report(4, problem.empty(),
           problem.empty() ? std::to_string(value_checks) + " value checks, " +
                                 std::to_string(structural_checks) +
                                 " structural coefficient checks (" + seconds_since(start) + ")"
                           : problem);
}

// 5. d/dt c_k = -(k+1) c_{k+1} away from breakpoints, both kinds.
void criterion_5(const std::vector<CaseData>& cases) {
    const auto start = Clock::now();
    long checks = 0;
    std::string problem;
    for (const auto& c : cases) {
        for (const auto* qp : {&c.closed, &c.open}) {
            for (int k = 0; k + 1 <= qp->dim; ++k) {
                ++checks;
                const auto lhs = derivative_piecewise(*qp, k);
                const auto rhs = Rational(-(k + 1)) * qp->coefficients[k + 1];
                if (!equal_almost_everywhere(lhs, rhs) && problem.empty())
                    problem = "derivative relation fails for " + c.label + " at k = " +
                              std::to_string(k);
            }
        }
    }
    report(5, problem.empty(),
           problem.empty()
               ? std::to_string(checks) + " coefficient derivative identities (" +
                     seconds_since(start) + ")"
               : problem);
}

// 6. Volume: leading coefficients carry (-1)^(n-k) C(n,k) vol on full-dim
// cases, and the level-count column sums equal n! d^n vol for full-dim
// simplices.
void criterion_6(const std::vector<CaseData>& cases) {
    const auto start = Clock::now();
    long volume_checks = 0;
    long sum_checks = 0;
    long full_simplices = 0;
    std::string problem;
    for (const auto& c : cases) {
        if (c.p.dim() != static_cast<int>(c.p.ambient_dim())) continue;
        const Rational vol = volume(c.p);
        for (const auto* qp : {&c.closed, &c.open}) {
            ++volume_checks;
            if (!leading_coefficient_check(*qp, vol) && problem.empty())
                problem = "leading coefficients of " + c.label + " do not carry the volume";
        }
        if (!c.simplex) continue;
        ++full_simplices;
        const RationalSimplex s(c.p.vertices());
        const StepFunction counts = determined_sets(s, KindFlag::closed, kBudget);
        const int n = s.dim();
        const Rational d = s.denominator();
        Rational target = vol;
        for (int i = 1; i <= n; ++i) target *= i;  // n! vol
        for (int i = 0; i < n; ++i) target *= d;   // times d^n
        for (int j = 0; j < 10; ++j) {
            const Rational u = d * Rational(j, 10);
            Integer total(0);
            for (int i = 0; i <= n; ++i) total += step_eval(counts, d * i + u);
            ++sum_checks;
            if (to_rational(total) != target && problem.empty())
                problem = "level sums of " + c.label + " at offset " + rational_to_string(u) +
                          " give " + total.str() + ", expected " + rational_to_string(target);
        }
    }
    const bool ok = problem.empty() && full_simplices >= 1;
    report(6, ok,
           problem.empty() ? std::to_string(volume_checks) + " leading-coefficient checks, " +
                                 std::to_string(sum_checks) + " level-sum checks over " +
                                 std::to_string(full_simplices) + " full-dimensional simplices (" +
                                 seconds_since(start) + ")"
                           : problem);
}

// 7. Classical counts: (t+1)^2 for the unit square, (t+1)^3 for the unit
// cube, brute-force agreement for the reference tetrahedron, t = 0..6.
void criterion_7() {
    const auto start = Clock::now();
    std::string problem;

    const RationalPolytope square({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    std::vector<RationalVector> cube_pts;
    for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y)
            for (int z = 0; z <= 1; ++z) cube_pts.push_back({x, y, z});
    const RationalPolytope cube(cube_pts);
    const RationalPolytope tet({{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});

    const QuasiPolynomial sq_closed = polytope_quasi(square, KindFlag::closed);
    const QuasiPolynomial sq_open = polytope_quasi(square, KindFlag::open);
    const QuasiPolynomial cu_closed = polytope_quasi(cube, KindFlag::closed);
    const QuasiPolynomial cu_open = polytope_quasi(cube, KindFlag::open);
    const QuasiPolynomial tet_closed = polytope_quasi(tet, KindFlag::closed);
    const QuasiPolynomial tet_open = polytope_quasi(tet, KindFlag::open);
    const Decomposition tet_dec = triangulate(tet.vertices());

    for (int i = 0; i <= 6 && problem.empty(); ++i) {
        const Rational t(i);
        if (eval_quasi(sq_closed, t) != (t + 1) * (t + 1))
            problem = "unit square misses (t+1)^2 at t = " + std::to_string(i);
        else if (eval_quasi(sq_open, t) != (t - 1) * (t - 1))
            problem = "open unit square misses (t-1)^2 at t = " + std::to_string(i);
        else if (eval_quasi(cu_closed, t) != (t + 1) * (t + 1) * (t + 1))
            problem = "unit cube misses (t+1)^3 at t = " + std::to_string(i);
        else if (eval_quasi(cu_open, t) != (t - 1) * (t - 1) * (t - 1))
            problem = "open unit cube misses (t-1)^3 at t = " + std::to_string(i);
        else if (eval_quasi(tet_closed, t) !=
                 to_rational(brute_count(tet_dec, t, KindFlag::closed)))
            problem = "tetrahedron count differs from brute force at t = " + std::to_string(i);
        else if (i >= 1 && eval_quasi(tet_open, t) !=
                               to_rational(brute_count(tet_dec, t, KindFlag::open)))
            problem = "open tetrahedron count differs from brute force at t = " + std::to_string(i);
    }
    report(7, problem.empty(),
           problem.empty()
               ? "unit square, unit cube and reference tetrahedron match classical counts at "
                 "t = 0..6 (" +
                     seconds_since(start) + ")"
               : problem);
}

// 8. Periodicity of every coefficient function, and agreement with the
// independent binomial-formula evaluation at negative dilations.
void criterion_8(const std::vector<CaseData>& cases) {
    const auto start = Clock::now();
    long period_checks = 0;
    long negative_checks = 0;
    std::string problem;
    for (const auto& c : cases) {
        const Rational rho = c.closed.period;
        for (int j = 0; j < 20; ++j) {
            const Rational t = rho * Rational(2 * j + 1, 40);
            for (const auto* qp : {&c.closed, &c.open}) {
                ++period_checks;
                for (const auto& coeff : qp->coefficients) {
                    if (coeff(t + rho) != coeff(t) && problem.empty())
                        problem = "coefficient of " + c.label + " changes across one period at t = " +
                                  rational_to_string(t);
                }
            }
        }

        // per-cell open-kind level counts drive the binomial formula; the
        // closed count sums every cell, the open count the non-boundary ones
        std::vector<StepFunction> cell_counts;
        cell_counts.reserve(c.dec.cells.size());
        for (const auto& cell : c.dec.cells)
            cell_counts.push_back(determined_sets(cell.simplex, KindFlag::open, kBudget));
        for (int j = 0; j < 20; ++j) {
            const Rational t = -(rho * Rational(2 * j + 1, 40)) - Rational(j, 7);
            Rational closed_sum(0);
            Rational open_sum(0);
            for (std::size_t i = 0; i < c.dec.cells.size(); ++i) {
                const auto& cell = c.dec.cells[i];
                const Rational part = eval_binomial_formula(
                    cell_counts[i], cell.simplex.dim(), cell.simplex.denominator(),
                    KindFlag::open, t);
                closed_sum += part;
                if (!cell.on_boundary) open_sum += part;
            }
            negative_checks += 2;
            if (closed_sum != eval_quasi(c.closed, t) && problem.empty())
                problem = "closed count of " + c.label + " disagrees with the binomial formula at t = " +
                          rational_to_string(t);
            if (open_sum != eval_quasi(c.open, t) && problem.empty())
                problem = "open count of " + c.label + " disagrees with the binomial formula at t = " +
                          rational_to_string(t);
        }
    }
    report(8, problem.empty(),
           problem.empty() ? std::to_string(period_checks) + " periodicity checks, " +
                                 std::to_string(negative_checks) +
                                 " negative-dilation binomial checks (" + seconds_since(start) +
                                 ")"
                           : problem);
}

}  // namespace

int main() {
    const auto start = Clock::now();
    criterion_1();
    criterion_2();

    const std::vector<CaseData> cases = build_cases();
    criterion_3(cases);
    criterion_4(cases);
    criterion_5(cases);
    criterion_6(cases);
    criterion_7();
    criterion_8(cases);

    std::cout << (failures == 0 ? "acceptance: all criteria passed (" : "acceptance: FAILED (") +
                     seconds_since(start) + " total)\n";
    return failures == 0 ? 0 : 1;
}
