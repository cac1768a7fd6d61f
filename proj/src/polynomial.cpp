#include "ehrhart/polynomial.hpp"

#include <algorithm>

namespace ehrhart {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Rational Polynomial::operator()(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = Rational(k) * coeffs_[k];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::compose_linear(const Rational& c0, const Rational& c1) const {
    // Horner in the polynomial ring: acc = acc * (c0 + c1 t) + a_k
    const Polynomial arg(std::vector<Rational>{c0, c1});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * arg + Polynomial::constant(*it);
    return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coefficients().size(), b.coefficients().size()),
                              Rational(0));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) + b.coefficient(k);
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator-(const Polynomial& p) { return Rational(-1) * p; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.coefficients().size() + b.coefficients().size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
        if (a.coefficients()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coefficients().size(); ++j)
            out[i + j] += a.coefficients()[i] * b.coefficients()[j];
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> out = p.coefficients();
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out));
}

std::string polynomial_to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        if (!s.empty()) s += " + ";
        s += rational_to_string(p.coefficients()[k]);
        if (k >= 1) s += "*t";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
}

std::vector<Rational> elementary_symmetric(const std::vector<Rational>& values) {
    std::vector<Rational> e(values.size() + 1, Rational(0));
    e[0] = 1;
    std::size_t used = 0;
    for (const auto& v : values) {
        ++used;
        for (std::size_t k = used; k >= 1; --k) e[k] += v * e[k - 1];
    }
    return e;
}

std::vector<Polynomial> symmetric_polys_in_t(const std::vector<Rational>& offsets,
                                             const Rational& slope) {
    std::vector<Polynomial> e(offsets.size() + 1);
    e[0] = Polynomial::constant(Rational(1));
    std::size_t used = 0;
    for (const auto& r : offsets) {
        const Polynomial lin(std::vector<Rational>{r, slope});
        ++used;
        for (std::size_t k = used; k >= 1; --k) e[k] = e[k] + lin * e[k - 1];
    }
    return e;
}

}  // namespace ehrhart
