#include "scw/connection.hpp"

#include <cmath>

#include "scw/error.hpp"
#include "scw/whitney.hpp"

namespace scw {

namespace {

std::string cell_name(SimplexId id) { return std::to_string(id.dim) + "." + std::to_string(id.index); }

bool trivial_ad(const GroupMap& phi) { return phi.is_identity() || phi.algebra()->is_abelian(); }

bool all_constant(const GroupMap& phi) {
    for (const auto& f : phi.factors())
        for (const auto& p : f)
            if (!p.is_constant()) return false;
    return true;
}

Connection skeletal(const Bundle& p, Rng* rng, int max_degree) {
    const auto& x = *p.base();
    const auto& g = p.algebra();
    Connection a(p.base(), g);
    for (int d = 1; d <= x.max_dim(); ++d) {
        const Poly bump = interior_bump(d);
        for (int idx = 0; idx < x.count(d); ++idx) {
            const SimplexId s{d, idx};
            std::vector<LieForm> prescribed;
            for (int i = 0; i <= d; ++i) {
                const GroupMap& phi = p.transition(s, i);
                const auto dlog = phi.exact_log_derivative();
                if (!dlog || !trivial_ad(phi))
                    fail(ErrorKind::unsupported, "face " + std::to_string(i) + " of " + cell_name(s) +
                                                     " has a transition without a closed-form Maurer-Cartan form");
                prescribed.push_back(a.on(x.face(s, i)) - *dlog);
            }
            LieForm out = LieForm::zero(g, d, 1);
            for (int c = 0; c < g->dim(); ++c) {
                std::vector<PolyForm> facets;
                for (const auto& f : prescribed) facets.push_back(f.c[c]);
                try {
                    out.c[c] = whitney_extend(d, facets);
                } catch (const Error& e) {
                    throw Error(e.kind(), "simplex " + cell_name(s) + ": " + e.what());
                }
                if (rng) {
                    const PolyForm r = random_form(*rng, d, 1, max_degree);
                    out.c[c] += d == 1 ? r : bump * r;
                }
            }
            a.set(s, std::move(out));
        }
    }
    return a;
}

}  // namespace

Connection::Connection(SetPtr base, AlgebraPtr algebra) : base_(std::move(base)), algebra_(std::move(algebra)) {
    forms_.resize(base_->max_dim() + 1);
    for (int d = 0; d <= base_->max_dim(); ++d) forms_[d].assign(base_->count(d), LieForm::zero(algebra_, d, 1));
}

void Connection::set(SimplexId id, LieForm a) {
    if (!base_->contains(id)) fail(ErrorKind::invalid_argument, "no simplex " + cell_name(id));
    if (a.dim != id.dim || a.degree != 1) fail(ErrorKind::degree_mismatch, "connection needs a 1-form on the simplex");
    if (a.algebra->name() != algebra_->name()) fail(ErrorKind::algebra_mismatch, "connection form in another algebra");
    forms_[id.dim][id.index] = std::move(a);
}

LieForm Connection::on(const Simplex& x) const { return pullback_form(at(x.base), x.collapse); }

bool Connection::is_exact() const {
    for (const auto& row : forms_)
        for (const auto& a : row)
            if (!a.is_exact()) return false;
    return true;
}

bool Connection::near(const Connection& o, double tol) const {
    if (forms_.size() != o.forms_.size()) return false;
    for (std::size_t d = 0; d < forms_.size(); ++d) {
        if (forms_[d].size() != o.forms_[d].size()) return false;
        for (std::size_t i = 0; i < forms_[d].size(); ++i)
            if (!forms_[d][i].near(o.forms_[d][i], tol)) return false;
    }
    return true;
}

GaugeCheck check_gauge(const Bundle& p, const Connection& a, Rng& rng, double tol, int samples) {
    const auto& x = *p.base();
    const auto& g = *p.algebra();
    GaugeCheck out;
    auto report = [&](SimplexId s, int i, double defect) {
        out.ok = false;
        out.simplex = s;
        out.face = i;
        out.max_defect = std::max(out.max_defect, defect);
        out.message = "gauge compatibility fails on face " + std::to_string(i) + " of simplex " + cell_name(s);
    };
    for (int d = 1; d <= x.max_dim(); ++d) {
        for (int idx = 0; idx < x.count(d); ++idx) {
            const SimplexId s{d, idx};
            for (int i = 0; i <= d; ++i) {
                const GroupMap& phi = p.transition(s, i);
                const LieForm face = a.on(x.face(s, i));
                const LieForm pulled = pullback_form(a.at(s), coface(d, i));
                if (const auto dlog = phi.exact_log_derivative(); dlog && (trivial_ad(phi) || all_constant(phi))) {
                    LieForm rhs = pulled;
                    if (!trivial_ad(phi)) {
                        const std::vector<double> origin(d - 1, 0.0);
                        rhs = apply_matrix(ad_matrix_of(g, phi.evaluate(origin).inverse()), pulled);
                    }
                    rhs += *dlog;
                    const bool exact = face.is_exact() && rhs.is_exact();
                    out.exact = out.exact && exact;
                    if (exact ? face == rhs : face.near(rhs, tol)) continue;
                    report(s, i, INFINITY);
                    return out;
                }
                out.exact = false;
                double worst = 0.0;
                for (int t = 0; t < samples; ++t) {
                    const auto pt = random_simplex_point(rng, d - 1);
                    const auto lhs = face.evaluate(pt);
                    const auto raw = pulled.evaluate(pt);
                    const auto mc = phi.log_derivative(pt);
                    const Eigen::MatrixXd ad = ad_matrix_of(g, phi.evaluate(pt).inverse());
                    for (int v = 0; v < d - 1; ++v) {
                        for (int c = 0; c < g.dim(); ++c) {
                            std::complex<double> rhs = mc[v][c].to_complex();
                            for (int b = 0; b < g.dim(); ++b) rhs += ad(c, b) * raw[b][v];
                            worst = std::max(worst, std::abs(lhs[c][v] - rhs));
                        }
                    }
                }
                out.max_defect = std::max(out.max_defect, worst);
                if (worst > tol) {
                    report(s, i, worst);
                    return out;
                }
            }
        }
    }
    return out;
}

Connection construct_connection(const Bundle& p) { return skeletal(p, nullptr, 0); }

Connection random_connection(Rng& rng, const Bundle& p, int max_degree) { return skeletal(p, &rng, max_degree); }

Connection induced_connection(const Bundle& p, const LieForm& global) {
    const auto& x = *p.base();
    for (int d = 1; d <= x.max_dim(); ++d)
        for (int idx = 0; idx < x.count(d); ++idx)
            for (int i = 0; i <= d; ++i)
                if (!p.transition({d, idx}, i).is_identity())
                    fail(ErrorKind::unsupported, "induced connections need identity transitions");
    std::vector<SimplicialForm> parts;
    for (const auto& c : global.c) parts.push_back(induced_form(p.base(), c));
    Connection a(p.base(), p.algebra());
    for (int d = 1; d <= x.max_dim(); ++d) {
        for (int idx = 0; idx < x.count(d); ++idx) {
            LieForm f{p.algebra(), d, 1, {}};
            for (const auto& w : parts) f.c.push_back(w.at({d, idx}));
            a.set({d, idx}, std::move(f));
        }
    }
    return a;
}

Connection pullback_connection(const SimplicialMap& f, const Connection& a) {
    Connection b(f.source(), a.algebra());
    const auto& x = *f.source();
    for (int d = 1; d <= x.max_dim(); ++d)
        for (int idx = 0; idx < x.count(d); ++idx) b.set({d, idx}, a.on(f.image({d, idx})));
    return b;
}

Connection gauge_change(const Connection& a, const std::vector<std::vector<Coords>>& logs) {
    if (a.algebra()->is_abelian()) return a;
    const auto& g = *a.algebra();
    const auto& x = *a.base();
    Connection b(a.base(), a.algebra());
    for (int d = 1; d <= x.max_dim(); ++d)
        for (int idx = 0; idx < x.count(d); ++idx)
            b.set({d, idx}, apply_matrix(ad_matrix_of(g, g.exp(logs.at(d).at(idx))), a.at({d, idx})));
    return b;
}

Concordance concordance(const Bundle& p, const Connection& a1, const Connection& a2) {
    if (!(*a1.base() == *p.base()) || !(*a2.base() == *p.base()))
        fail(ErrorKind::invalid_argument, "concordance of connections on another base");
    Concordance out{product_with_interval(p.base()), {}, {}};
    out.bundle = pullback_bundle(out.prism.projection, p);
    const Connection b1 = pullback_connection(out.prism.projection, a1);
    const Connection b2 = pullback_connection(out.prism.projection, a2);
    const auto& y = *out.prism.product;
    Connection c(out.prism.product, p.algebra());
    const Poly coordinate = Poly::variable(1, 0);
    for (int d = 1; d <= y.max_dim(); ++d) {
        for (int idx = 0; idx < y.count(d); ++idx) {
            const Simplex in_interval = out.prism.to_interval.image({d, idx});
            Poly t(d);
            if (in_interval.base.dim == 1)
                t = pullback(coordinate, PolyMap::from_ordinal(in_interval.collapse, 1));
            else if (in_interval.base.index == 1)
                t = Poly::constant(d, Scalar(1));
            const Poly s = Poly::constant(d, Scalar(1)) - t;
            c.set({d, idx}, s * b1.at({d, idx}) + t * b2.at({d, idx}));
        }
    }
    out.connection = std::move(c);
    return out;
}

}  // namespace scw
