#include "scw/linalg.hpp"

#include "scw/error.hpp"

namespace scw {

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::invalid_argument, "matrix shapes do not compose");
    RationalMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

namespace {

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> reduce(RationalMatrix& m, std::vector<Scalar>* rhs, RationalMatrix* transform) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row) {
            for (int c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
            if (rhs) std::swap((*rhs)[p], (*rhs)[row]);
            if (transform)
                for (int c = 0; c < transform->cols(); ++c) std::swap((*transform)(p, c), (*transform)(row, c));
        }
        const Rational inv = 1 / m(row, col);
        for (int c = 0; c < m.cols(); ++c) m(row, c) *= inv;
        if (rhs) (*rhs)[row] *= Scalar(inv);
        if (transform)
            for (int c = 0; c < transform->cols(); ++c) (*transform)(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            const Rational f = m(r, col);
            for (int c = 0; c < m.cols(); ++c)
                if (m(row, c) != 0) m(r, c) -= f * m(row, c);
            if (rhs) (*rhs)[r] -= Scalar(f) * (*rhs)[row];
            if (transform)
                for (int c = 0; c < transform->cols(); ++c)
                    if ((*transform)(row, c) != 0) (*transform)(r, c) -= f * (*transform)(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(const RationalMatrix& m) {
    RationalMatrix w = m;
    return static_cast<int>(reduce(w, nullptr, nullptr).size());
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
    RationalMatrix w = m;
    const auto pivots = reduce(w, nullptr, nullptr);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolve solve(const RationalMatrix& m, const std::vector<Scalar>& b) {
    if (static_cast<int>(b.size()) != m.rows()) fail(ErrorKind::invalid_argument, "right-hand side size mismatch");
    RationalMatrix w = m;
    std::vector<Scalar> rhs = b;
    RationalMatrix transform(m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i) transform(i, i) = 1;
    const auto pivots = reduce(w, &rhs, &transform);
    LinearSolve out;
    for (int r = static_cast<int>(pivots.size()); r < m.rows(); ++r) {
        if (!rhs[r].is_zero()) {
            std::vector<Rational> y(m.rows());
            for (int c = 0; c < m.rows(); ++c) y[c] = transform(r, c);
            out.certificate = std::move(y);
            return out;
        }
    }
    std::vector<Scalar> x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rhs[r];
    out.solution = std::move(x);
    return out;
}

std::vector<Rational> primitive_integer_vector(std::vector<Rational> v) {
    mpz_class den = 1;
    for (const auto& x : v)
        if (x != 0) den = lcm(den, mpz_class(x.get_den()));
    mpz_class g = 0;
    for (auto& x : v) {
        x *= den;
        x.canonicalize();
        g = gcd(g, mpz_class(x.get_num()));
    }
    int sign = 1;
    for (const auto& x : v)
        if (x != 0) {
            sign = x < 0 ? -1 : 1;
            break;
        }
    if (g != 0)
        for (auto& x : v) x = x / Rational(g) * sign;
    return v;
}

}  // namespace scw
