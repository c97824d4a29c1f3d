#pragma once

#include <vector>

#include "scw/lie.hpp"
#include "scw/polyform.hpp"

namespace scw {

/// Lie-algebra-valued form on Delta^d: one PolyForm per basis coordinate.
struct LieForm {
    AlgebraPtr algebra;
    int dim = 0;
    int degree = 0;
    std::vector<PolyForm> c;

    static LieForm zero(const AlgebraPtr& g, int dim, int degree);
    /// sum_a f_a e_a as a 0-form.
    static LieForm function(const AlgebraPtr& g, const std::vector<Poly>& f);

    bool is_zero() const;
    bool is_exact() const;
    LieForm to_float() const;

    LieForm& operator+=(const LieForm& o);
    LieForm& operator-=(const LieForm& o);
    friend LieForm operator+(LieForm a, const LieForm& b) { return a += b; }
    friend LieForm operator-(LieForm a, const LieForm& b) { return a -= b; }
    friend LieForm operator*(const Poly& f, const LieForm& a);
    bool operator==(const LieForm& o) const { return dim == o.dim && degree == o.degree && c == o.c; }
    bool near(const LieForm& o, double tol) const;

    /// Component values at a point: result[a][m] for the m-th increasing index tuple.
    std::vector<std::vector<std::complex<double>>> evaluate(std::span<const double> point) const;
};

LieForm d_form(const LieForm& a);
/// [a ^ b]^c = sum C^c_{ab} a^a ^ b^b.
LieForm bracket_wedge(const LieForm& a, const LieForm& b);
LieForm pullback_form(const LieForm& a, const PolyMap& phi);
LieForm pullback_form(const LieForm& a, const OrdinalMap& op);
/// Apply a constant real matrix acting on algebra coordinates (e.g. Ad_g).
LieForm apply_matrix(const Eigen::MatrixXd& m, const LieForm& a);

/// Matrix of Ad_g on algebra coordinates.
Eigen::MatrixXd ad_matrix_of(const LieAlgebra& g, const Eigen::MatrixXcd& h);

}  // namespace scw
