#ifndef EHRHART_SIMPLEX_HPP
#define EHRHART_SIMPLEX_HPP

#include <vector>

#include "ehrhart/linalg.hpp"

namespace ehrhart {

// Affinely independent points (p_0 .. p_k span a k-flat none of the others
// lie in). Equivalent to the stacked matrix [columns; row of ones] having
// full column rank.
bool affinely_independent(const std::vector<RationalVector>& points);

// The denominator of a vertex set: the smallest positive rational d such
// that d * v is an integer vector for every vertex v. Computed as
// lcm(coordinate denominators) / gcd(nonzero coordinate numerators); an
// all-zero vertex set has denominator 1 by convention.
Rational vertex_set_denominator(const std::vector<RationalVector>& vertices);

// A rational n-simplex in R^N: n+1 affinely independent rational vertices.
// Caches its dimension and denominator.
class RationalSimplex {
  public:
    explicit RationalSimplex(std::vector<RationalVector> vertices);

    int dim() const { return dim_; }
    std::size_t ambient_dim() const { return ambient_; }
    const std::vector<RationalVector>& vertices() const { return vertices_; }
    const Rational& denominator() const { return denom_; }

    // N x (n+1) matrix whose columns are the vertices.
    RationalMatrix vertex_matrix() const;

    bool operator==(const RationalSimplex& other) const = default;

  private:
    std::vector<RationalVector> vertices_;
    std::size_t ambient_ = 0;
    int dim_ = -1;
    Rational denom_{1};
};

}  // namespace ehrhart

#endif
