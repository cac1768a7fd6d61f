#ifndef EHRHART_LINALG_HPP
#define EHRHART_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "ehrhart/rational.hpp"

namespace ehrhart {

using RationalVector = std::vector<Rational>;

// Dense matrix of rationals, row-major. Just enough exact linear algebra for
// the solvers below; no attempt at genericity.
class RationalMatrix {
  public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalVector row(std::size_t i) const;
    RationalVector col(std::size_t j) const;

    bool operator==(const RationalMatrix& other) const = default;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

RationalMatrix transpose(const RationalMatrix& m);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalVector operator*(const RationalMatrix& a, const RationalVector& x);

Rational dot(const RationalVector& a, const RationalVector& b);

std::size_t rank(const RationalMatrix& m);

// Exact determinant of a square matrix (Gaussian elimination).
Rational determinant(const RationalMatrix& m);

// A solution of A x = b with all free variables set to zero, or nullopt when
// the system is inconsistent (rank [A|b] > rank A).
std::optional<RationalVector> solve_consistent(const RationalMatrix& a, const RationalVector& b);

// Inverse of a square matrix; throws std::invalid_argument if singular.
RationalMatrix inverse(const RationalMatrix& m);

// Moore-Penrose style left inverse (B^T B)^{-1} B^T. Requires full column
// rank; throws std::invalid_argument("not full column rank") otherwise.
RationalMatrix left_inverse(const RationalMatrix& b);

// Basis of {x : M x = 0}, one vector per non-pivot column of the RREF.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

// Basis of {w : w^T A = 0}; the rows annihilating the column space of A.
std::vector<RationalVector> left_nullspace(const RationalMatrix& a);

}  // namespace ehrhart

#endif
