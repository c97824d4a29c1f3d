#pragma once

#include <optional>
#include <vector>

#include "scw/scalar.hpp"

namespace scw {

/// Dense matrix over Q, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    RationalMatrix transpose() const;
    bool is_zero() const;
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

int rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Outcome of solving m x = b over Q with Scalar right-hand side.
struct LinearSolve {
    std::optional<std::vector<Scalar>> solution;
    /// When unsolvable: y with y^T m = 0 and y^T b != 0.
    std::optional<std::vector<Rational>> certificate;
};

/// Deterministic Gauss-Jordan with first-nonzero pivoting; free variables are set to zero.
LinearSolve solve(const RationalMatrix& m, const std::vector<Scalar>& b);

/// Scale to a primitive integer vector whose first nonzero entry is positive.
std::vector<Rational> primitive_integer_vector(std::vector<Rational> v);

}  // namespace scw
