#include "scw/lie.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "scw/error.hpp"

namespace scw {

ScalarMatrix ScalarMatrix::identity(int n) {
    ScalarMatrix m = zero(n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Scalar ScalarMatrix::trace() const {
    Scalar t;
    for (int i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
}

ScalarMatrix ScalarMatrix::adjoint() const {
    ScalarMatrix m = zero(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(c, r) = (*this)(r, c).conj();
    return m;
}

Eigen::MatrixXcd ScalarMatrix::to_eigen() const {
    Eigen::MatrixXcd m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = (*this)(r, c).to_complex();
    return m;
}

bool ScalarMatrix::is_zero() const {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

ScalarMatrix& ScalarMatrix::operator+=(const ScalarMatrix& o) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    return *this;
}

ScalarMatrix& ScalarMatrix::operator-=(const ScalarMatrix& o) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
    return *this;
}

ScalarMatrix& ScalarMatrix::operator*=(const Scalar& c) {
    for (auto& x : a) x *= c;
    return *this;
}

ScalarMatrix operator*(const ScalarMatrix& x, const ScalarMatrix& y) {
    ScalarMatrix m = ScalarMatrix::zero(x.n);
    for (int r = 0; r < x.n; ++r)
        for (int k = 0; k < x.n; ++k) {
            if (x(r, k).is_zero()) continue;
            for (int c = 0; c < x.n; ++c)
                if (!y(k, c).is_zero()) m(r, c) += x(r, k) * y(k, c);
        }
    return m;
}

namespace {

const Scalar kI = Scalar::imag_unit();

ScalarMatrix unit(int n, int r, int c, const Scalar& v) {
    ScalarMatrix m = ScalarMatrix::zero(n);
    m(r, c) = v;
    return m;
}

Scalar real_part(const Scalar& z) { return (z + z.conj()) * Scalar(Rational(1, 2)); }

std::vector<ScalarMatrix> unitary_basis(int n, bool special) {
    std::vector<ScalarMatrix> b;
    if (special) {
        // i * diag(1, .., 1, -l, 0, ..)
        for (int l = 1; l < n; ++l) {
            ScalarMatrix h = ScalarMatrix::zero(n);
            for (int j = 0; j < l; ++j) h(j, j) = kI;
            h(l, l) = kI * Scalar(-l);
            b.push_back(h);
        }
    } else {
        for (int j = 0; j < n; ++j) b.push_back(unit(n, j, j, kI));
    }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            b.push_back(unit(n, j, k, Scalar(1)) - unit(n, k, j, Scalar(1)));
            b.push_back(unit(n, j, k, kI) + unit(n, k, j, kI));
        }
    return b;
}

}  // namespace

std::shared_ptr<const LieAlgebra> LieAlgebra::make(std::string_view name) {
    auto g = std::make_shared<LieAlgebra>();
    g->name_ = std::string(name);
    const Scalar half_i = kI * Scalar(Rational(-1, 2));
    if (name == "u1") {
        g->n_ = 1;
        g->basis_ = {unit(1, 0, 0, kI)};
        g->unitary_ = true;
    } else if (name == "su2") {
        g->n_ = 2;
        ScalarMatrix s1 = ScalarMatrix::zero(2), s2 = ScalarMatrix::zero(2), s3 = ScalarMatrix::zero(2);
        s1(0, 1) = s1(1, 0) = Scalar(1);
        s2(0, 1) = -kI;
        s2(1, 0) = kI;
        s3(0, 0) = Scalar(1);
        s3(1, 1) = Scalar(-1);
        g->basis_ = {s1 * half_i, s2 * half_i, s3 * half_i};
        g->unitary_ = g->special_ = true;
    } else if (name == "so3") {
        g->n_ = 3;
        for (int a = 0; a < 3; ++a) {
            ScalarMatrix l = ScalarMatrix::zero(3);
            const int b = (a + 1) % 3, c = (a + 2) % 3;
            l(b, c) = Scalar(-1);
            l(c, b) = Scalar(1);
            g->basis_.push_back(l);
        }
        g->special_ = true;
    } else if (name.size() == 2 && name[0] == 'u' && name[1] >= '2' && name[1] <= '4') {
        g->n_ = name[1] - '0';
        g->basis_ = unitary_basis(g->n_, false);
        g->unitary_ = true;
    } else if (name.size() == 3 && name.substr(0, 2) == "su" && name[2] >= '3' && name[2] <= '4') {
        g->n_ = name[2] - '0';
        g->basis_ = unitary_basis(g->n_, true);
        g->unitary_ = g->special_ = true;
    } else {
        fail(ErrorKind::invalid_argument, "unknown Lie algebra '" + std::string(name) + "'");
    }
    for (const auto& e : g->basis_) g->norms_.push_back(*real_part((e.adjoint() * e).trace()).as_rational());

    const int d = g->dim();
    g->structure_.assign(static_cast<std::size_t>(d) * d * d, Scalar());
    g->abelian_ = true;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const ScalarMatrix br = g->basis_[a] * g->basis_[b] - g->basis_[b] * g->basis_[a];
            const Coords c = g->from_matrix(br);
            for (int k = 0; k < d; ++k) {
                g->structure_[(static_cast<std::size_t>(a) * d + b) * d + k] = c[k];
                if (!c[k].is_zero()) g->abelian_ = false;
            }
        }
    return g;
}

ScalarMatrix LieAlgebra::to_matrix(const Coords& x) const {
    if (static_cast<int>(x.size()) != dim()) fail(ErrorKind::algebra_mismatch, "coordinate vector does not fit " + name_);
    ScalarMatrix m = ScalarMatrix::zero(n_);
    for (int a = 0; a < dim(); ++a)
        if (!x[a].is_zero()) m += basis_[a] * x[a];
    return m;
}

Coords LieAlgebra::from_matrix(const ScalarMatrix& m) const {
    if (m.n != n_) fail(ErrorKind::algebra_mismatch, "matrix size does not fit " + name_);
    Coords c(dim());
    for (int a = 0; a < dim(); ++a)
        c[a] = real_part((basis_[a].adjoint() * m).trace()) * Scalar(Rational(1) / norms_[a]);
    if (!(m - to_matrix(c)).is_zero() && m.a.front().is_exact())
        fail(ErrorKind::invariant_violation, "matrix is not in " + name_);
    return c;
}

Eigen::MatrixXcd LieAlgebra::to_eigen(const Coords& x) const {
    if (static_cast<int>(x.size()) != dim()) fail(ErrorKind::algebra_mismatch, "coordinate vector does not fit " + name_);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_, n_);
    for (int a = 0; a < dim(); ++a) m += basis_[a].to_eigen() * x[a].to_complex();
    return m;
}

Coords LieAlgebra::from_eigen(const Eigen::MatrixXcd& m) const {
    Coords c(dim());
    for (int a = 0; a < dim(); ++a)
        c[a] = Scalar::from_double((basis_[a].to_eigen().adjoint() * m).trace().real() / norms_[a].get_d());
    return c;
}

Coords LieAlgebra::bracket(const Coords& x, const Coords& y) const {
    if (static_cast<int>(x.size()) != dim() || static_cast<int>(y.size()) != dim())
        fail(ErrorKind::algebra_mismatch, "bracket operands do not fit " + name_);
    Coords r(dim());
    if (abelian_) return r;
    for (int a = 0; a < dim(); ++a) {
        if (x[a].is_zero()) continue;
        for (int b = 0; b < dim(); ++b) {
            if (y[b].is_zero()) continue;
            const Scalar xy = x[a] * y[b];
            for (int c = 0; c < dim(); ++c)
                if (!structure(a, b, c).is_zero()) r[c] += xy * structure(a, b, c);
        }
    }
    return r;
}

Eigen::MatrixXd LieAlgebra::ad_matrix(const Coords& x) const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim(), dim());
    for (int b = 0; b < dim(); ++b) {
        Coords e(dim());
        e[b] = Scalar(1);
        const Coords col = bracket(x, e);
        for (int c = 0; c < dim(); ++c) m(c, b) = col[c].real();
    }
    return m;
}

Eigen::MatrixXcd LieAlgebra::exp(const Coords& x) const { return to_eigen(x).exp(); }

Coords LieAlgebra::ad(const Eigen::MatrixXcd& g, const Coords& x) const {
    return from_eigen(g * to_eigen(x) * g.inverse());
}

double LieAlgebra::group_defect(const Eigen::MatrixXcd& g) const {
    double defect = (g.adjoint() * g - Eigen::MatrixXcd::Identity(n_, n_)).cwiseAbs().maxCoeff();
    if (special_) defect = std::max(defect, std::abs(g.determinant() - 1.0));
    return defect;
}

namespace {

void same_algebra(const LieElement& x, const LieElement& y) {
    if (!x.algebra || !y.algebra || x.algebra->name() != y.algebra->name())
        fail(ErrorKind::algebra_mismatch, "elements of different Lie algebras");
}

}  // namespace

LieElement bracket(const LieElement& x, const LieElement& y) {
    same_algebra(x, y);
    return {x.algebra, x.algebra->bracket(x.coords, y.coords)};
}

LieElement ad(const Eigen::MatrixXcd& g, const LieElement& x) {
    if (g.rows() != x.algebra->matrix_size()) fail(ErrorKind::algebra_mismatch, "group element does not act on " + x.algebra->name());
    return {x.algebra, x.algebra->ad(g, x.coords)};
}

Eigen::MatrixXcd exp(const LieElement& x) { return x.algebra->exp(x.coords); }

}  // namespace scw
