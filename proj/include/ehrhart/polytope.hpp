#ifndef EHRHART_POLYTOPE_HPP
#define EHRHART_POLYTOPE_HPP

#include <vector>

#include "ehrhart/quasipoly.hpp"
#include "ehrhart/simplex.hpp"

namespace ehrhart {

// Affine dimension of a point set (-1 for the empty set).
int affine_dimension(const std::vector<RationalVector>& points);

// Convex hull of rational generator points. Duplicate generators and
// generators inside the hull of the others are dropped; what remains is the
// vertex set, which determines the dimension and the denominator.
class RationalPolytope {
  public:
    explicit RationalPolytope(std::vector<RationalVector> generators);

    const std::vector<RationalVector>& generators() const { return generators_; }
    const std::vector<RationalVector>& vertices() const { return vertices_; }
    std::size_t ambient_dim() const { return ambient_; }
    int dim() const { return dim_; }
    const Rational& denominator() const { return denom_; }

  private:
    std::vector<RationalVector> generators_;
    std::vector<RationalVector> vertices_;
    std::size_t ambient_ = 0;
    int dim_ = -1;
    Rational denom_{1};
};

struct OpenCell {
    RationalSimplex simplex;
    bool on_boundary = false;
};

// A triangulation of a polytope, closed under taking faces. The relative
// interiors of the cells partition the polytope; the cells flagged
// on_boundary are exactly those whose relative interior lies in the relative
// boundary. `vertex_indices` gives each cell as indices into `points`.
struct Decomposition {
    std::vector<RationalVector> points;
    std::vector<OpenCell> cells;
    std::vector<std::vector<std::size_t>> vertex_indices;  // parallel to cells
    int max_dim = -1;
};

// Incremental placing triangulation, inserting the points in the order
// given. Points inside the hull of the earlier points are skipped (they
// cannot be vertices); a point outside the current affine hull cones over
// every cell, one outside the hull cones over the facets it can see.
Decomposition triangulate(const std::vector<RationalVector>& points);

// The counting quasi-polynomial of the polytope, assembled cell by cell:
// the relative interiors of the decomposition cells partition the polytope,
// so the closed count sums the open-simplex counts of every cell and the
// open count those of the non-boundary cells. The resulting period is the
// polytope denominator.
QuasiPolynomial polytope_quasi(const RationalPolytope& p, KindFlag kind,
                               std::int64_t budget = kDefaultEnumerationBudget);

// Euclidean volume of a full-dimensional polytope (sum of |det| / N! over
// the maximal cells). Throws std::invalid_argument("relative volume
// unsupported") when dim < ambient dimension.
Rational volume(const RationalPolytope& p);

// Value-level reciprocity: L(P, -t) == (-1)^dim L(interior P, t) and the
// mirrored identity, at every sample point supplied.
bool polytope_reciprocity_check(const QuasiPolynomial& closed_qp, const QuasiPolynomial& open_qp,
                                const std::vector<Rational>& sample_points);

// Structural reciprocity for the coefficient functions:
// c_k(-t) of one kind equals (-1)^(dim-k) c_k(t) of the other, compared
// exactly as canonical piecewise representations.
bool coefficient_reciprocity_check(const QuasiPolynomial& closed_qp,
                                   const QuasiPolynomial& open_qp);

}  // namespace ehrhart

#endif
