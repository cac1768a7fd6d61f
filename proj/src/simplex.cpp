#include "ehrhart/simplex.hpp"

#include <stdexcept>

namespace ehrhart {

namespace {

// [columns of points; row of ones]
RationalMatrix homogeneous_matrix(const std::vector<RationalVector>& points) {
    const std::size_t ambient = points.empty() ? 0 : points[0].size();
    RationalMatrix m(ambient + 1, points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        for (std::size_t i = 0; i < ambient; ++i) m(i, j) = points[j][i];
        m(ambient, j) = 1;
    }
    return m;
}

}  // namespace

bool affinely_independent(const std::vector<RationalVector>& points) {
    if (points.empty()) return false;
    for (const auto& p : points)
        if (p.size() != points[0].size()) throw std::invalid_argument("ragged point list");
    return rank(homogeneous_matrix(points)) == points.size();
}

Rational vertex_set_denominator(const std::vector<RationalVector>& vertices) {
    Integer den_lcm(1), num_gcd(0);
    for (const auto& v : vertices) {
        for (const auto& c : v) {
            den_lcm = lcm(den_lcm, denominator(c));
            if (numerator(c) != 0) num_gcd = gcd(num_gcd, abs(numerator(c)));
        }
    }
    if (num_gcd == 0) return Rational(1);
    return Rational(den_lcm, num_gcd);
}

RationalSimplex::RationalSimplex(std::vector<RationalVector> vertices)
    : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("simplex needs at least one vertex");
    ambient_ = vertices_[0].size();
    if (ambient_ == 0) throw std::invalid_argument("simplex vertices need coordinates");
    if (!affinely_independent(vertices_))
        throw std::invalid_argument("simplex vertices must be affinely independent");
    dim_ = static_cast<int>(vertices_.size()) - 1;
    denom_ = vertex_set_denominator(vertices_);
}

RationalMatrix RationalSimplex::vertex_matrix() const {
    RationalMatrix m(ambient_, vertices_.size());
    for (std::size_t j = 0; j < vertices_.size(); ++j)
        for (std::size_t i = 0; i < ambient_; ++i) m(i, j) = vertices_[j][i];
    return m;
}

}  // namespace ehrhart
