#ifndef EHRHART_QUASIPOLY_HPP
#define EHRHART_QUASIPOLY_HPP

#include <vector>

#include "ehrhart/determined.hpp"
#include "ehrhart/piecewise.hpp"
#include "ehrhart/simplex.hpp"

namespace ehrhart {

// A lattice-point counting function L(t) = sum_k c_k(t) t^k for real
// dilations t, with periodic piecewise-polynomial coefficient functions
// c_0 .. c_dim sharing one period and window kind. kind == closed counts the
// body, kind == open its relative interior.
struct QuasiPolynomial {
    int dim = 0;
    KindFlag kind = KindFlag::closed;
    Rational period{1};
    std::vector<PeriodicPiecewisePolynomial> coefficients;

    bool operator==(const QuasiPolynomial& other) const = default;
};

// Coefficient functions of a single simplex (counting its relative interior
// when kind == open), with period equal to the simplex denominator. For
// window offset u in [0, d) and 1 <= m <= n the closed-kind coefficient is
//   c_k(jd + u) ... assembled as
//   c_k(t) = 1/(n! d^k) * sum_{i=0}^{n} count(i d + u) e_{n-k}(m - i - t/d),
// where count is the closed level-count function, u = t reduced into [0, d),
// and e is elementary symmetric in the n linear forms. The open kind uses the
// open level counts, the window (0, d], and the same shifts.
QuasiPolynomial simplex_coefficients(const RationalSimplex& simplex, KindFlag kind,
                                     std::int64_t budget = kDefaultEnumerationBudget);

// L(t) from the coefficient functions, valid for every rational t (negative
// included: the c_k are evaluated periodically, the powers use t itself).
Rational eval_quasi(const QuasiPolynomial& qp, const Rational& t);

// L(t) directly from the level counts, without coefficient extraction:
//   closed: sum of count(t - d a) C(a+n, n) over integers a in (t/d-n-1, t/d]
//   open:   sum of count(t - d a) C(a+n, n) over integers a in [t/d-n-1, t/d)
// `level_counts` must be the matching-kind function for the simplex.
Rational eval_binomial_formula(const StepFunction& level_counts, int dim, const Rational& d,
                               KindFlag kind, const Rational& t);
Rational eval_binomial_formula(const RationalSimplex& simplex, KindFlag kind, const Rational& t,
                               std::int64_t budget = kDefaultEnumerationBudget);

// Dilations that stress the piecewise structure: every coefficient piece
// endpoint shifted through the first `periods` periods, the midpoints
// between consecutive endpoints, and the integers, all within
// (0, periods * period]. Deterministically thinned to at most max_count
// values (evenly spaced picks).
std::vector<Rational> sample_dilations(const QuasiPolynomial& qp, int periods,
                                       std::size_t max_count);

// d/dt of c_k on piece interiors. k == dim is rejected: the derivative
// relation pairs c_k with c_{k+1}, and there is no c_{dim+1}.
PeriodicPiecewisePolynomial derivative_piecewise(const QuasiPolynomial& qp, int k);

// True when every non-degenerate piece of every c_k is a polynomial of exact
// degree dim-k with leading coefficient (-1)^(dim-k) C(dim,k) volume.
bool leading_coefficient_check(const QuasiPolynomial& qp, const Rational& volume);

}  // namespace ehrhart

#endif
