#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "scw/scalar.hpp"

namespace scw {

/// Square matrix with Scalar entries, row-major.
struct ScalarMatrix {
    int n = 0;
    std::vector<Scalar> a;

    static ScalarMatrix zero(int n) { return {n, std::vector<Scalar>(static_cast<std::size_t>(n) * n)}; }
    static ScalarMatrix identity(int n);
    Scalar& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    const Scalar& operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }

    Scalar trace() const;
    ScalarMatrix adjoint() const;
    Eigen::MatrixXcd to_eigen() const;
    bool is_zero() const;

    ScalarMatrix& operator+=(const ScalarMatrix& o);
    ScalarMatrix& operator-=(const ScalarMatrix& o);
    ScalarMatrix& operator*=(const Scalar& c);
    friend ScalarMatrix operator+(ScalarMatrix x, const ScalarMatrix& y) { return x += y; }
    friend ScalarMatrix operator-(ScalarMatrix x, const ScalarMatrix& y) { return x -= y; }
    friend ScalarMatrix operator*(ScalarMatrix x, const Scalar& c) { return x *= c; }
    friend ScalarMatrix operator*(const ScalarMatrix& x, const ScalarMatrix& y);
    bool operator==(const ScalarMatrix&) const = default;
};

using Coords = std::vector<Scalar>;

/// A matrix Lie algebra with a fixed real basis of anti-Hermitian matrices,
/// orthogonal for Re tr(A^* B).
///
/// Supported names: u1, su2, so3, u2..u4, su3, su4. The su2 basis is
/// e_a = -(i/2) sigma_a, so [e1, e2] = e3 cyclically; so3 uses the rotation
/// generators (L_a)_{bc} = -eps_{abc} with the same brackets.
class LieAlgebra {
public:
    static std::shared_ptr<const LieAlgebra> make(std::string_view name);

    const std::string& name() const { return name_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int matrix_size() const { return n_; }
    const std::vector<ScalarMatrix>& basis() const { return basis_; }
    bool is_abelian() const { return abelian_; }
    /// u(n) or su(n): Chern polynomials apply.
    bool is_unitary() const { return unitary_; }
    bool special() const { return special_; }

    /// [e_a, e_b] = sum_c C(a, b, c) e_c.
    const Scalar& structure(int a, int b, int c) const {
        return structure_[(static_cast<std::size_t>(a) * dim() + b) * dim() + c];
    }

    ScalarMatrix to_matrix(const Coords& x) const;
    /// Projection onto the basis; throws invariant_violation if X is not in the span.
    Coords from_matrix(const ScalarMatrix& m) const;
    Eigen::MatrixXcd to_eigen(const Coords& x) const;
    Coords from_eigen(const Eigen::MatrixXcd& m) const;

    Coords bracket(const Coords& x, const Coords& y) const;
    /// Matrix of ad_x in the basis (column b is [x, e_b]).
    Eigen::MatrixXd ad_matrix(const Coords& x) const;

    Eigen::MatrixXcd exp(const Coords& x) const;
    /// Ad_g x = g X g^{-1}, projected to float coordinates.
    Coords ad(const Eigen::MatrixXcd& g, const Coords& x) const;
    /// max |g^* g - I|, plus |det g - 1| for special groups.
    double group_defect(const Eigen::MatrixXcd& g) const;

private:
    std::string name_;
    int n_ = 0;
    bool abelian_ = false;
    bool unitary_ = false;
    bool special_ = false;
    std::vector<ScalarMatrix> basis_;
    std::vector<Rational> norms_;  // Re tr(e_a^* e_a)
    std::vector<Scalar> structure_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// An element tied to its algebra; operations on elements of different
/// algebras throw Error(algebra_mismatch).
struct LieElement {
    AlgebraPtr algebra;
    Coords coords;
};

LieElement bracket(const LieElement& x, const LieElement& y);
LieElement ad(const Eigen::MatrixXcd& g, const LieElement& x);
Eigen::MatrixXcd exp(const LieElement& x);

}  // namespace scw
