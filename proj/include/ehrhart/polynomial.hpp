#ifndef EHRHART_POLYNOMIAL_HPP
#define EHRHART_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "ehrhart/rational.hpp"

namespace ehrhart {

// Univariate polynomial over the rationals. Coefficients are stored in
// ascending degree order with no trailing zeros; the zero polynomial is the
// empty list (degree -1).
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    static Polynomial constant(const Rational& c);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    Rational coefficient(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    Rational operator()(const Rational& t) const;

    Polynomial derivative() const;

    // p(c0 + c1 * t); covers Taylor shifts (c1 = 1) and reflections (c1 = -1).
    Polynomial compose_linear(const Rational& c0, const Rational& c1) const;

    bool operator==(const Polynomial& other) const = default;

  private:
    std::vector<Rational> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& s, const Polynomial& p);
Polynomial operator-(const Polynomial& p);

std::string polynomial_to_string(const Polynomial& p);

// e_0 .. e_k of the given rational values (e_0 = 1).
std::vector<Rational> elementary_symmetric(const std::vector<Rational>& values);

// Elementary symmetric polynomials e_0 .. e_n of the n linear forms
// offsets[m] + slope * t, returned as polynomials in t.
std::vector<Polynomial> symmetric_polys_in_t(const std::vector<Rational>& offsets,
                                             const Rational& slope);

}  // namespace ehrhart

#endif
