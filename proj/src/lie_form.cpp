#include "scw/lie_form.hpp"

#include <algorithm>
#include <bit>

#include "scw/error.hpp"

namespace scw {

namespace {

void same_shape(const LieForm& a, const LieForm& b) {
    if (a.algebra->name() != b.algebra->name()) fail(ErrorKind::algebra_mismatch, "Lie-valued forms over different algebras");
    if (a.dim != b.dim) fail(ErrorKind::invalid_argument, "Lie-valued forms on different simplices");
}

}  // namespace

LieForm LieForm::zero(const AlgebraPtr& g, int dim, int degree) {
    return {g, dim, degree, std::vector<PolyForm>(g->dim(), PolyForm(dim, degree))};
}

LieForm LieForm::function(const AlgebraPtr& g, const std::vector<Poly>& f) {
    if (static_cast<int>(f.size()) != g->dim()) fail(ErrorKind::algebra_mismatch, "function does not fit " + g->name());
    LieForm r{g, f.empty() ? 0 : f[0].nvars(), 0, {}};
    for (const auto& p : f) r.c.push_back(PolyForm::function(p));
    return r;
}

bool LieForm::is_zero() const {
    for (const auto& w : c)
        if (!w.is_zero()) return false;
    return true;
}

bool LieForm::is_exact() const {
    for (const auto& w : c)
        if (!w.is_exact()) return false;
    return true;
}

LieForm LieForm::to_float() const {
    LieForm r = *this;
    for (auto& w : r.c) w = w.to_float();
    return r;
}

LieForm& LieForm::operator+=(const LieForm& o) {
    same_shape(*this, o);
    for (std::size_t a = 0; a < c.size(); ++a) c[a] += o.c[a];
    return *this;
}

LieForm& LieForm::operator-=(const LieForm& o) {
    same_shape(*this, o);
    for (std::size_t a = 0; a < c.size(); ++a) c[a] -= o.c[a];
    return *this;
}

LieForm operator*(const Poly& f, const LieForm& a) {
    LieForm r = a;
    for (auto& w : r.c) w = f * w;
    return r;
}

bool LieForm::near(const LieForm& o, double tol) const {
    if (algebra->name() != o.algebra->name() || dim != o.dim || degree != o.degree) return false;
    for (std::size_t a = 0; a < c.size(); ++a)
        if (!c[a].near(o.c[a], tol)) return false;
    return true;
}

std::vector<std::vector<std::complex<double>>> LieForm::evaluate(std::span<const double> point) const {
    std::vector<IndexMask> masks;
    for (IndexMask m = 0; m < (IndexMask{1} << dim); ++m)
        if (std::popcount(m) == degree) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](IndexMask x, IndexMask y) { return mask_indices(x) < mask_indices(y); });
    std::vector<std::vector<std::complex<double>>> out(c.size(), std::vector<std::complex<double>>(masks.size()));
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t m = 0; m < masks.size(); ++m) out[a][m] = c[a].component(masks[m]).evaluate(point);
    return out;
}

LieForm d_form(const LieForm& a) {
    LieForm r{a.algebra, a.dim, a.degree + 1, {}};
    for (const auto& w : a.c) r.c.push_back(d_form(w));
    return r;
}

LieForm bracket_wedge(const LieForm& a, const LieForm& b) {
    same_shape(a, b);
    const auto& g = *a.algebra;
    LieForm r = LieForm::zero(a.algebra, a.dim, a.degree + b.degree);
    if (g.is_abelian()) return r;
    for (int x = 0; x < g.dim(); ++x) {
        if (a.c[x].is_zero()) continue;
        for (int y = 0; y < g.dim(); ++y) {
            if (b.c[y].is_zero()) continue;
            bool any = false;
            for (int z = 0; z < g.dim() && !any; ++z) any = !g.structure(x, y, z).is_zero();
            if (!any) continue;
            const PolyForm w = wedge(a.c[x], b.c[y]);
            for (int z = 0; z < g.dim(); ++z)
                if (!g.structure(x, y, z).is_zero()) r.c[z] += w * g.structure(x, y, z);
        }
    }
    return r;
}

LieForm pullback_form(const LieForm& a, const PolyMap& phi) {
    LieForm r{a.algebra, phi.source_dim(), a.degree, {}};
    for (const auto& w : a.c) r.c.push_back(pullback_form(w, phi));
    return r;
}

LieForm pullback_form(const LieForm& a, const OrdinalMap& op) {
    if (op == identity_map(a.dim)) return a;
    return pullback_form(a, PolyMap::from_ordinal(op, a.dim));
}

LieForm apply_matrix(const Eigen::MatrixXd& m, const LieForm& a) {
    LieForm r = LieForm::zero(a.algebra, a.dim, a.degree);
    for (int z = 0; z < m.rows(); ++z)
        for (int x = 0; x < m.cols(); ++x)
            if (m(z, x) != 0.0 && !a.c[x].is_zero()) r.c[z] += a.c[x] * Scalar::from_double(m(z, x));
    return r;
}

Eigen::MatrixXd ad_matrix_of(const LieAlgebra& g, const Eigen::MatrixXcd& h) {
    Eigen::MatrixXd m(g.dim(), g.dim());
    for (int b = 0; b < g.dim(); ++b) {
        Coords e(g.dim());
        e[b] = Scalar(1);
        const Coords col = g.ad(h, e);
        for (int a = 0; a < g.dim(); ++a) m(a, b) = col[a].real();
    }
    return m;
}

}  // namespace scw
