#ifndef EHRHART_ORACLE_HPP
#define EHRHART_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ehrhart/polytope.hpp"

namespace ehrhart {

// Cap on the number of integer points the brute-force counter will visit in
// one bounding box.
inline constexpr std::int64_t kDefaultOracleBudget = 100'000'000;

// A lattice-point counting request: how many integer points lie in the
// dilate t * X, where X is either a simplex or a triangulated polytope and
// the kind selects the closed set or its relative interior.
struct CountQuery {
    std::variant<RationalSimplex, Decomposition> target;
    Rational t{0};
    KindFlag kind = KindFlag::closed;
};

// Affine coordinates of a point over the simplex vertices: the unique
// lambda_0..lambda_n with sum 1 and sum lambda_j * vertex_j = point, or
// nullopt when the point is outside the affine hull. All entries >= 0 means
// the point is in the simplex, all > 0 in its relative interior.
std::optional<RationalVector> barycentric(const RationalSimplex& s, const RationalVector& point);

// Count lattice points by enumerating the exact bounding box of the dilated
// vertex set and testing membership per point with exact barycentric signs.
// Requires t >= 0 for the closed kind and t > 0 for the open kind; throws
// std::invalid_argument otherwise, and std::runtime_error when the box holds
// more than `budget` points.
Integer brute_count(const CountQuery& query, std::int64_t budget = kDefaultOracleBudget);

// Conveniences assembling the query in place. The polytope overload counts
// via a triangulation of its vertices.
Integer brute_count(const RationalSimplex& s, const Rational& t, KindFlag kind,
                    std::int64_t budget = kDefaultOracleBudget);
Integer brute_count(const Decomposition& dec, const Rational& t, KindFlag kind,
                    std::int64_t budget = kDefaultOracleBudget);
Integer brute_count(const RationalPolytope& p, const Rational& t, KindFlag kind,
                    std::int64_t budget = kDefaultOracleBudget);

// splitmix64: tiny deterministic generator with identical output on every
// platform, which std::mt19937 does not guarantee across standard libraries.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform draw from [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Deterministic pseudo-random polytope: between 1 and max_vertices generator
// points, each coordinate p/q with 1 <= q <= denom_bound and |p/q| <=
// coord_bound. Same seed, same polytope, on any platform.
RationalPolytope random_polytope(std::uint64_t seed, std::size_t ambient,
                                 std::size_t max_vertices, std::int64_t coord_bound,
                                 std::int64_t denom_bound);

}  // namespace ehrhart

#endif
