#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "ehrhart/oracle.hpp"

using namespace ehrhart;

namespace {

const Rational h(1, 2);

RationalSimplex tet() {
    return RationalSimplex({{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
}

std::vector<RationalVector> unit_square() {
    return {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
}

}  // namespace

TEST_CASE("barycentric coordinates") {
    const RationalSimplex s = tet();
    CHECK(barycentric(s, {0, 0, 0}) == RationalVector{1, 0, 0, 0});
    CHECK(barycentric(s, {1, 1, 0}) == RationalVector{0, 1, 0, 0});
    CHECK(barycentric(s, {1, 1, 1}) == RationalVector{-h, h, h, h});

    const RationalSimplex doubled({{0, 0, 0}, {2, 2, 0}, {2, 0, 2}, {0, 2, 2}});
    CHECK(barycentric(doubled, {1, 1, 1}) ==
          RationalVector{Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)});

    const RationalSimplex seg({{0, 0}, {1, 1}});
    CHECK(barycentric(seg, {h, h}) == RationalVector{h, h});
    CHECK_FALSE(barycentric(seg, {1, 0}).has_value());

    CHECK_THROWS_AS(barycentric(seg, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("simplex counts") {
    const RationalSimplex s = tet();
    CHECK(brute_count(s, 0, KindFlag::closed) == 1);
    CHECK(brute_count(s, h, KindFlag::closed) == 1);
    CHECK(brute_count(s, 1, KindFlag::closed) == 4);
    CHECK(brute_count(s, Rational(3, 2), KindFlag::closed) == 5);
    CHECK(brute_count(s, 2, KindFlag::closed) == 11);
    CHECK(brute_count(s, 1, KindFlag::open) == 0);
    CHECK(brute_count(s, 2, KindFlag::open) == 1);

    const RationalSimplex pt({{Rational(2)}});
    CHECK(brute_count(pt, h, KindFlag::closed) == 1);
    CHECK(brute_count(pt, Rational(1, 3), KindFlag::closed) == 0);
    CHECK(brute_count(pt, h, KindFlag::open) == 1);
}

TEST_CASE("polytope counts") {
    const RationalPolytope square(unit_square());
    CHECK(brute_count(square, 2, KindFlag::closed) == 9);
    CHECK(brute_count(square, 2, KindFlag::open) == 1);
    CHECK(brute_count(square, Rational(3, 2), KindFlag::closed) == 4);
    CHECK(brute_count(square, Rational(3, 2), KindFlag::open) == 1);
    CHECK(brute_count(square, 0, KindFlag::closed) == 1);

    const RationalPolytope seg({{1, 2}, {3, 4}});
    CHECK(brute_count(seg, 2, KindFlag::closed) == 5);
    CHECK(brute_count(seg, h, KindFlag::closed) == 0);
    CHECK(brute_count(seg, 2, KindFlag::open) == 3);
}

TEST_CASE("query variants agree") {
    const Decomposition dec = triangulate(tet().vertices());
    for (const Rational& t : {Rational(1, 3), Rational(1), Rational(3, 2), Rational(3)}) {
        for (KindFlag kind : {KindFlag::closed, KindFlag::open}) {
            if (kind == KindFlag::open && t <= 0) continue;
            const CountQuery query{dec, t, kind};
            CHECK(brute_count(query) == brute_count(tet(), t, kind));
        }
    }
}

TEST_CASE("boundary cells account for the closed/open gap") {
    const Decomposition dec = triangulate(unit_square());
    for (const Rational& t : {Rational(1), Rational(3, 2), Rational(2), Rational(5, 2)}) {
        const Integer closed = brute_count(dec, t, KindFlag::closed);
        const Integer open = brute_count(dec, t, KindFlag::open);
        Integer boundary(0);
        for (const auto& cell : dec.cells)
            if (cell.on_boundary) boundary += brute_count(cell.simplex, t, KindFlag::open);
        CHECK(closed - open == boundary);
    }
}

TEST_CASE("dilation sign validation") {
    CHECK_THROWS_AS(brute_count(tet(), -1, KindFlag::closed), std::invalid_argument);
    CHECK_THROWS_AS(brute_count(tet(), 0, KindFlag::open), std::invalid_argument);
    CHECK_THROWS_AS(brute_count(tet(), Rational(-1, 2), KindFlag::open), std::invalid_argument);
}

TEST_CASE("box budget") {
    const RationalPolytope cube({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0},
                                 {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    CHECK_THROWS_WITH_AS(brute_count(cube, 50, KindFlag::closed, 10),
                         doctest::Contains("bounding-box budget exceeded"), std::runtime_error);
    CHECK(brute_count(cube, 50, KindFlag::closed, 1'000'000) == 51 * 51 * 51);
}

TEST_CASE("closed counts grow with the dilation when the body contains the origin") {
    const std::vector<Rational> ts = {0, Rational(1, 3), h, 1, Rational(3, 2), 2};
    for (const auto& gens : {unit_square(), tet().vertices()}) {
        const RationalPolytope p(gens);
        Integer last(-1);
        for (const auto& t : ts) {
            const Integer now = brute_count(p, t, KindFlag::closed);
            CHECK(now >= last);
            last = now;
        }
    }
}

TEST_CASE("random polytopes are deterministic and within bounds") {
    const RationalPolytope a = random_polytope(42, 2, 5, 3, 4);
    const RationalPolytope b = random_polytope(42, 2, 5, 3, 4);
    CHECK(a.generators() == b.generators());
    CHECK(a.vertices() == b.vertices());

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const RationalPolytope p = random_polytope(seed, 1 + seed % 3, 5, 3, 4);
        CHECK(p.generators().size() >= 1);
        CHECK(p.generators().size() <= 5);
        for (const auto& v : p.generators()) {
            CHECK(v.size() == 1 + seed % 3);
            for (const auto& c : v) {
                CHECK(abs(c) <= 3);
                CHECK(denominator(c) <= 4);
            }
        }
    }

    const RationalPolytope single = random_polytope(7, 2, 1, 3, 4);
    CHECK(single.vertices().size() == 1);
    CHECK(single.dim() == 0);

    CHECK_THROWS_AS(random_polytope(1, 2, 0, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(random_polytope(1, 2, 5, 3, 0), std::invalid_argument);
}

TEST_CASE("wide arithmetic path") {
    const Integer q = (Integer(1) << 62) + 1;
    const Rational inv_q(Integer(1), q);
    SUBCASE("a nearly flat triangle") {
        // the only lattice points of the closed triangle at t = 1 are the two
        // integral vertices; the sliver above y = 0 is far too thin for more
        const RationalSimplex thin({{0, 0}, {1, 0}, {Rational(1, 3), inv_q}});
        CHECK(brute_count(thin, 1, KindFlag::closed) == 2);
        CHECK(brute_count(thin, 1, KindFlag::open) == 0);
        CHECK(brute_count(thin, 3, KindFlag::closed) == 4);
    }
    SUBCASE("a segment shorter than any lattice gap") {
        const RationalSimplex seg({{0}, {inv_q}});
        CHECK(brute_count(seg, 1, KindFlag::closed) == 1);
        CHECK(brute_count(seg, 1, KindFlag::open) == 0);
        CHECK(brute_count(seg, to_rational(q), KindFlag::closed) == 2);
        CHECK(brute_count(seg, to_rational(q) * 2, KindFlag::open) == 1);
    }
}
