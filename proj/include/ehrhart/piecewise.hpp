#ifndef EHRHART_PIECEWISE_HPP
#define EHRHART_PIECEWISE_HPP

#include <vector>

#include "ehrhart/interval.hpp"
#include "ehrhart/polynomial.hpp"

namespace ehrhart {

struct PolyPiece {
    Interval interval;
    Polynomial poly;

    bool operator==(const PolyPiece& other) const = default;
};

// A periodic function of a real variable given by one period's worth of
// polynomial pieces. The canonical window is [0, period) for closed kind and
// (0, period] for open kind; the pieces partition the window exactly.
//
// The representation is canonical: pieces are sorted, adjacent pieces whose
// polynomials agree as functions on the union are merged, and degenerate
// point pieces carry constant polynomials. Two equal functions with the same
// period and kind therefore compare equal with ==.
class PeriodicPiecewisePolynomial {
  public:
    PeriodicPiecewisePolynomial() = default;

    PeriodicPiecewisePolynomial(Rational period, KindFlag kind, std::vector<PolyPiece> pieces);

    static PeriodicPiecewisePolynomial zero(const Rational& period, KindFlag kind);
    static PeriodicPiecewisePolynomial from_polynomial(const Rational& period, KindFlag kind,
                                                       const Polynomial& p);

    const Rational& period() const { return period_; }
    KindFlag kind() const { return kind_; }
    const std::vector<PolyPiece>& pieces() const { return pieces_; }
    Interval window() const;

    // Periodic evaluation: the argument is reduced into the window and the
    // covering piece's polynomial is evaluated there.
    Rational operator()(const Rational& t) const;

    bool is_zero() const;

    bool operator==(const PeriodicPiecewisePolynomial& other) const = default;

  private:
    Rational period_{1};
    KindFlag kind_ = KindFlag::closed;
    std::vector<PolyPiece> pieces_{{Interval::closed_open(Rational(0), Rational(1)), {}}};
};

// Pointwise sum; both operands must share period and kind.
PeriodicPiecewisePolynomial operator+(const PeriodicPiecewisePolynomial& a,
                                      const PeriodicPiecewisePolynomial& b);
PeriodicPiecewisePolynomial operator*(const Rational& s, const PeriodicPiecewisePolynomial& f);
PeriodicPiecewisePolynomial operator-(const PeriodicPiecewisePolynomial& f);

// The same function represented with period new_period, which must be a
// positive integer multiple of f.period().
PeriodicPiecewisePolynomial rebase(const PeriodicPiecewisePolynomial& f,
                                   const Rational& new_period);

// The same function represented on the other window kind.
PeriodicPiecewisePolynomial rewindow(const PeriodicPiecewisePolynomial& f, KindFlag new_kind);

// t -> f(-t). The window kind flips.
PeriodicPiecewisePolynomial reflect_periodic(const PeriodicPiecewisePolynomial& f);

// Piecewise derivative: each piece's polynomial is differentiated in place.
// Degenerate point pieces, where no derivative exists, become constant 0.
PeriodicPiecewisePolynomial derivative_pieces(const PeriodicPiecewisePolynomial& f);

// Equality as functions away from finitely many points per period: compares
// polynomials on the common refinement, ignoring degenerate pieces.
bool equal_almost_everywhere(const PeriodicPiecewisePolynomial& a,
                             const PeriodicPiecewisePolynomial& b);

}  // namespace ehrhart

#endif
