#include "scw/simplicial_form.hpp"

#include "scw/error.hpp"

namespace scw {

SimplicialForm::SimplicialForm(SetPtr base, int degree) : base_(std::move(base)), degree_(degree) {
    if (!base_) fail(ErrorKind::invalid_argument, "simplicial form needs a base");
    if (degree < 0) fail(ErrorKind::degree_mismatch, "negative form degree");
    for (int d = 0; d <= base_->max_dim(); ++d) forms_.emplace_back(base_->count(d), PolyForm(d, degree));
}

void SimplicialForm::set(SimplexId id, PolyForm w) {
    if (!base_->contains(id)) fail(ErrorKind::invalid_argument, "no such simplex");
    if (w.dim() != id.dim || w.degree() != degree_)
        fail(ErrorKind::degree_mismatch, "form does not fit simplex " + std::to_string(id.dim) + "." +
                                             std::to_string(id.index));
    forms_[id.dim][id.index] = std::move(w);
}

PolyForm SimplicialForm::on(const Simplex& x) const {
    const PolyForm& w = at(x.base);
    if (x.nondegenerate()) return w;
    return pullback_form(w, x.collapse);
}

bool SimplicialForm::is_zero() const {
    for (const auto& row : forms_)
        for (const auto& w : row)
            if (!w.is_zero()) return false;
    return true;
}

bool SimplicialForm::is_exact() const {
    for (const auto& row : forms_)
        for (const auto& w : row)
            if (!w.is_exact()) return false;
    return true;
}

SimplicialForm& SimplicialForm::operator+=(const SimplicialForm& o) {
    if (base_ != o.base_ && !(*base_ == *o.base_)) fail(ErrorKind::invalid_argument, "forms on different bases");
    for (std::size_t d = 0; d < forms_.size(); ++d)
        for (std::size_t i = 0; i < forms_[d].size(); ++i) forms_[d][i] += o.forms_[d][i];
    return *this;
}

SimplicialForm& SimplicialForm::operator-=(const SimplicialForm& o) {
    if (base_ != o.base_ && !(*base_ == *o.base_)) fail(ErrorKind::invalid_argument, "forms on different bases");
    for (std::size_t d = 0; d < forms_.size(); ++d)
        for (std::size_t i = 0; i < forms_[d].size(); ++i) forms_[d][i] -= o.forms_[d][i];
    return *this;
}

SimplicialForm operator*(const Scalar& c, SimplicialForm a) {
    for (auto& row : a.forms_)
        for (auto& w : row) w *= c;
    return a;
}

FormCheck check_simplicial_form(const SimplicialForm& w, double tol) {
    const auto& x = *w.base();
    for (int d = 1; d <= x.max_dim(); ++d) {
        for (int idx = 0; idx < x.count(d); ++idx) {
            const SimplexId id{d, idx};
            for (int i = 0; i <= d; ++i) {
                const PolyForm restricted = pullback_form(w.at(id), coface(d, i));
                const PolyForm target = w.on(x.face(id, i));
                if (tol > 0.0 ? restricted.near(target, tol) : restricted == target) continue;
                FormCheck bad;
                bad.ok = false;
                bad.simplex = id;
                bad.face = i;
                bad.message = "face " + std::to_string(i) + " of simplex " + std::to_string(d) + "." +
                              std::to_string(idx) + " disagrees with the form on its face";
                return bad;
            }
        }
    }
    return {};
}

SimplicialForm global_d(const SimplicialForm& w) {
    SimplicialForm r(w.base(), w.degree() + 1);
    for (int d = 0; d <= w.base()->max_dim(); ++d)
        for (int i = 0; i < w.base()->count(d); ++i) r.set({d, i}, d_form(w.at({d, i})));
    return r;
}

SimplicialForm global_wedge(const SimplicialForm& a, const SimplicialForm& b) {
    if (a.base() != b.base() && !(*a.base() == *b.base()))
        fail(ErrorKind::invalid_argument, "wedge of forms on different bases");
    SimplicialForm r(a.base(), a.degree() + b.degree());
    for (int d = 0; d <= a.base()->max_dim(); ++d)
        for (int i = 0; i < a.base()->count(d); ++i) r.set({d, i}, wedge(a.at({d, i}), b.at({d, i})));
    return r;
}

SimplicialForm global_pullback(const SimplicialMap& f, const SimplicialForm& w) {
    if (f.target() != w.base() && !(*f.target() == *w.base()))
        fail(ErrorKind::invalid_argument, "pullback: map target is not the form's base");
    SimplicialForm r(f.source(), w.degree());
    for (int d = 0; d <= f.source()->max_dim(); ++d)
        for (int i = 0; i < f.source()->count(d); ++i) r.set({d, i}, w.on(f.image({d, i})));
    return r;
}

SimplicialForm induced_form(const SetPtr& base, const PolyForm& w) {
    if (!base->has_vertex_labels()) fail(ErrorKind::invalid_argument, "induced form needs vertex labels");
    SimplicialForm r(base, w.degree());
    for (int d = 0; d <= base->max_dim(); ++d) {
        for (int i = 0; i < base->count(d); ++i) {
            const auto& verts = base->vertices_of({d, i});
            for (int v : verts)
                if (v < 0 || v > w.dim()) fail(ErrorKind::invalid_argument, "vertex label outside the simplex");
            r.set({d, i}, pullback_form(w, PolyMap::affine(d, w.dim(), verts)));
        }
    }
    return r;
}

Cochain integrate_to_cochain(const SimplicialForm& w) {
    Cochain c = Cochain::zero(*w.base(), w.degree());
    for (int i = 0; i < w.base()->count(w.degree()); ++i) c.values[i] = integrate_top(w.at({w.degree(), i}));
    return c;
}

}  // namespace scw
