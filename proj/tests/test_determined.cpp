#include <doctest.h>

#include <stdexcept>

#include "ehrhart/determined.hpp"

using namespace ehrhart;

namespace {

RationalSimplex tet() {
    return RationalSimplex({{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
}

const Rational h(1, 2);

}  // namespace

TEST_CASE("affine independence") {
    CHECK(affinely_independent({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(affinely_independent({{2, 2}}));
    CHECK(affinely_independent({{0, 0}, {1, 1}}));
    CHECK_FALSE(affinely_independent({{0, 0}, {1, 1}, {2, 2}}));
    CHECK_FALSE(affinely_independent({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    CHECK_FALSE(affinely_independent({{0}, {1}, {2}}));
    CHECK_THROWS_AS(affinely_independent({{0, 0}, {1}}), std::invalid_argument);
}

TEST_CASE("vertex set denominator") {
    CHECK(vertex_set_denominator({{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}) == 1);
    CHECK(vertex_set_denominator({{2}}) == h);
    CHECK(vertex_set_denominator({{Rational(2, 3), Rational(4, 3)}}) == Rational(3, 2));
    CHECK(vertex_set_denominator({{0, 0}}) == 1);
    CHECK(vertex_set_denominator({{Rational(1, 2), Rational(1, 3)}}) == 6);
    CHECK(vertex_set_denominator({{0}, {h}}) == 2);
    // scaling by the denominator really makes every coordinate integral
    const std::vector<RationalVector> vs{{Rational(3, 4), Rational(1, 2)}, {Rational(9, 2), 0}};
    const Rational d = vertex_set_denominator(vs);
    CHECK(d == 4);
    for (const auto& v : vs)
        for (const auto& c : v) CHECK(is_integer(d * c));
}

TEST_CASE("simplex construction and accessors") {
    const RationalSimplex s = tet();
    CHECK(s.dim() == 3);
    CHECK(s.ambient_dim() == 3);
    CHECK(s.denominator() == 1);
    CHECK(s.vertex_matrix() == RationalMatrix{{0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}});
    CHECK_THROWS_AS(RationalSimplex({{0, 0}, {1, 1}, {2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(RationalSimplex({}), std::invalid_argument);
    const RationalSimplex pt({{Rational(2)}});
    CHECK(pt.dim() == 0);
    CHECK(pt.denominator() == h);
}

TEST_CASE("level counts of the reference tetrahedron") {
    const StepFunction closed = determined_sets(tet(), KindFlag::closed);
    CHECK(closed.domain() == Interval::closed_open(0, 4));
    REQUIRE(closed.pieces().size() == 2);
    CHECK(closed.pieces()[0] == StepPiece{Interval::closed_open(0, 1), 1});
    CHECK(closed.pieces()[1] == StepPiece{Interval::closed_open(Rational(3, 2), Rational(5, 2)), 1});

    const StepFunction open = determined_sets(tet(), KindFlag::open);
    CHECK(open.domain() == Interval::open_closed(0, 4));
    REQUIRE(open.pieces().size() == 2);
    CHECK(open.pieces()[0] == StepPiece{Interval::open_closed(Rational(3, 2), Rational(5, 2)), 1});
    CHECK(open.pieces()[1] == StepPiece{Interval::open_closed(3, 4), 1});
}

TEST_CASE("open counts agree with the direct enumeration") {
    const std::vector<RationalSimplex> cases = {
        tet(),
        RationalSimplex({{0}, {1}}),
        RationalSimplex({{Rational(2)}}),
        RationalSimplex({{0}, {h}}),
        RationalSimplex({{h, 0}, {0, Rational(1, 3)}, {1, 1}}),
        RationalSimplex({{-1, 0}, {0, Rational(3, 2)}, {1, 1}}),
        RationalSimplex({{1, 2}, {3, 4}}),  // 1-simplex embedded in the plane
    };
    for (const auto& s : cases) {
        CHECK(determined_sets(s, KindFlag::open) == determined_sets_direct_open(s));
    }
}

TEST_CASE("level counts of a rational point") {
    const RationalSimplex pt({{Rational(2)}});  // denominator 1/2
    const StepFunction closed = determined_sets(pt, KindFlag::closed);
    CHECK(closed.domain() == Interval::closed_open(0, h));
    REQUIRE(closed.pieces().size() == 1);
    CHECK(closed.pieces()[0] == StepPiece{Interval::point(0), 1});

    const StepFunction open = determined_sets(pt, KindFlag::open);
    CHECK(open.domain() == Interval::open_closed(0, h));
    REQUIRE(open.pieces().size() == 1);
    CHECK(open.pieces()[0] == StepPiece{Interval::point(h), 1});
}

TEST_CASE("level counts of the unit segment") {
    // d = 1; closed: weights (u0, u1) in [0,1)^2 with u0 + u1 = l and
    // u0 * 0 + u1 * 1 integral, so u1 = 0 and the count is 1 for l in [0,1)
    const RationalSimplex seg({{0}, {1}});
    const StepFunction closed = determined_sets(seg, KindFlag::closed);
    CHECK(closed.domain() == Interval::closed_open(0, 2));
    REQUIRE(closed.pieces().size() == 1);
    CHECK(closed.pieces()[0] == StepPiece{Interval::closed_open(0, 1), 1});

    const StepFunction open = determined_sets(seg, KindFlag::open);
    REQUIRE(open.pieces().size() == 1);
    CHECK(open.pieces()[0] == StepPiece{Interval::open_closed(1, 2), 1});
}

TEST_CASE("level sums recover the normalized volume") {
    // sum_i count(i d + u) is n! d^n vol for every u; for the tetrahedron
    // (n = 3, d = 1, vol = 1/3) that constant is 2
    const StepFunction counts = determined_sets(tet(), KindFlag::closed);
    for (int i = 0; i < 10; ++i) {
        const Rational u(i, 10);
        std::int64_t total = 0;
        for (int level = 0; level <= 3; ++level) total += step_eval(counts, level + u);
        CHECK(total == 2);
    }
}

TEST_CASE("enumeration budget") {
    CHECK_THROWS_WITH_AS(determined_sets(tet(), KindFlag::closed, 3),
                         doctest::Contains("enumeration budget exceeded"), std::runtime_error);
    CHECK_THROWS_AS(determined_sets_direct_open(tet(), 3), std::runtime_error);
}

TEST_CASE("wide arithmetic path: a segment with a huge denominator") {
    // denominator q = 2^62 + 1 overflows every int64 precheck, forcing the
    // arbitrary-precision scan; the answer is still a single unit interval
    const Integer q = (Integer(1) << 62) + 1;
    const Rational inv_q(Integer(1), q);
    const RationalSimplex seg({{0}, {inv_q}});
    CHECK(seg.denominator() == to_rational(q));
    const StepFunction closed = determined_sets(seg, KindFlag::closed);
    REQUIRE(closed.pieces().size() == 1);
    CHECK(closed.pieces()[0] == StepPiece{Interval::closed_open(0, to_rational(q)), 1});
    const StepFunction open = determined_sets(seg, KindFlag::open);
    REQUIRE(open.pieces().size() == 1);
    CHECK(open.pieces()[0] ==
          StepPiece{Interval::open_closed(to_rational(q), 2 * to_rational(q)), 1});
}
