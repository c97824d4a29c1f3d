#include "scw/bundle.hpp"

#include <algorithm>

#include "scw/error.hpp"

namespace scw {

namespace {

bool same_base(const SetPtr& a, const SetPtr& b) { return a == b || *a == *b; }

std::string cell_name(SimplexId id) { return std::to_string(id.dim) + "." + std::to_string(id.index); }

/// Constant map exp(x) on Delta^dim.
GroupMap constant_map(const AlgebraPtr& g, int dim, const Coords& x) {
    GroupMap::Factor f;
    for (const auto& c : x) f.push_back(Poly::constant(dim, c));
    return GroupMap::exp_of(g, std::move(f));
}

}  // namespace

Bundle::Bundle(SetPtr base, AlgebraPtr algebra) : base_(std::move(base)), algebra_(std::move(algebra)) {
    transitions_.resize(base_->max_dim() + 1);
    for (int d = 1; d <= base_->max_dim(); ++d)
        transitions_[d].assign(base_->count(d), std::vector<GroupMap>(d + 1, GroupMap::identity(algebra_, d - 1)));
}

void Bundle::set_transition(SimplexId sigma, int i, GroupMap phi) {
    if (!base_->contains(sigma) || sigma.dim < 1 || i < 0 || i > sigma.dim)
        fail(ErrorKind::invalid_argument, "no face " + std::to_string(i) + " on simplex " + cell_name(sigma));
    if (phi.dim() != sigma.dim - 1) fail(ErrorKind::invalid_argument, "transition lives on the wrong simplex");
    if (phi.algebra()->name() != algebra_->name()) fail(ErrorKind::algebra_mismatch, "transition into another group");
    transitions_[sigma.dim][sigma.index][i] = std::move(phi);
}

GroupMap Bundle::structure_map(const Simplex& x, const OrdinalMap& theta) const {
    const OrdinalMap mu = compose(x.collapse, theta);
    OrdinalMap image = mu;
    image.erase(std::unique(image.begin(), image.end()), image.end());
    OrdinalMap epi(mu.size());
    for (std::size_t s = 0; s < mu.size(); ++s)
        epi[s] = static_cast<int>(std::lower_bound(image.begin(), image.end(), mu[s]) - image.begin());

    const SimplexId sigma = x.base;
    const int q = static_cast<int>(image.size()) - 1;
    GroupMap g;
    if (q == sigma.dim) {
        g = GroupMap::identity(algebra_, q);
    } else {
        // peel off the smallest vertex the mono misses
        int missing = 0;
        while (std::binary_search(image.begin(), image.end(), missing)) ++missing;
        OrdinalMap rest = image;
        for (auto& v : rest)
            if (v > missing) --v;
        g = transition(sigma, missing).pullback(rest) * structure_map(base_->face(sigma, missing), rest);
    }
    return g.pullback(epi);
}

bool Bundle::operator==(const Bundle& o) const {
    return same_base(base_, o.base_) && algebra_->name() == o.algebra_->name() && transitions_ == o.transitions_;
}

BundleCheck validate_bundle(const Bundle& p, Rng& rng, double tol) {
    const auto& x = *p.base();
    for (int d = 2; d <= x.max_dim(); ++d) {
        for (int idx = 0; idx < x.count(d); ++idx) {
            const SimplexId s{d, idx};
            for (int j = 1; j <= d; ++j) {
                for (int i = 0; i < j; ++i) {
                    const GroupMap lhs = p.transition(s, j).pullback(coface(d - 1, i)) *
                                         p.structure_map(x.face(s, j), coface(d - 1, i));
                    const GroupMap rhs = p.transition(s, i).pullback(coface(d - 1, j - 1)) *
                                         p.structure_map(x.face(s, i), coface(d - 1, j - 1));
                    if (lhs.same_function(rhs, rng, tol)) continue;
                    BundleCheck bad;
                    bad.ok = false;
                    bad.simplex = s;
                    bad.i = i;
                    bad.j = j;
                    bad.message = "cocycle fails on simplex " + cell_name(s) + " for faces " + std::to_string(i) +
                                  " and " + std::to_string(j);
                    return bad;
                }
            }
        }
    }
    return {};
}

bool same_bundle(const Bundle& a, const Bundle& b, Rng& rng, double tol) {
    if (!same_base(a.base(), b.base()) || a.algebra()->name() != b.algebra()->name()) return false;
    const auto& x = *a.base();
    for (int d = 1; d <= x.max_dim(); ++d)
        for (int idx = 0; idx < x.count(d); ++idx)
            for (int i = 0; i <= d; ++i)
                if (!a.transition({d, idx}, i).same_function(b.transition({d, idx}, i), rng, tol)) return false;
    return true;
}

Bundle trivial_bundle(const SetPtr& base, const AlgebraPtr& g) { return Bundle(base, g); }

Bundle pullback_bundle(const SimplicialMap& f, const Bundle& p) {
    if (!same_base(f.target(), p.base())) fail(ErrorKind::invalid_argument, "pullback along a map into another base");
    Bundle q(f.source(), p.algebra());
    const auto& x = *f.source();
    for (int d = 1; d <= x.max_dim(); ++d)
        for (int idx = 0; idx < x.count(d); ++idx)
            for (int i = 0; i <= d; ++i)
                q.set_transition({d, idx}, i, p.structure_map(f.image({d, idx}), coface(d, i)));
    return q;
}

Bundle random_gauge_bundle(Rng& rng, const SetPtr& base, const AlgebraPtr& g, int max_degree) {
    const auto& x = *base;
    const bool u1 = g->name() == "u1";
    std::uniform_int_distribution<int> winding(-2, 2);
    std::vector<std::vector<GroupMap>> gauge(x.max_dim() + 1);
    for (int d = 0; d <= x.max_dim(); ++d) {
        for (int idx = 0; idx < x.count(d); ++idx) {
            GroupMap::Factor f;
            for (int a = 0; a < g->dim(); ++a) {
                Poly c = random_poly(rng, d, max_degree, 2);
                if (u1)
                    for (int v = 0; v < d; ++v) c += Poly::variable(d, v) * (Scalar::tau(1) * Scalar(winding(rng)));
                f.push_back(std::move(c));
            }
            // a second factor keeps non-abelian gauges from being one-parameter
            GroupMap c = GroupMap::exp_of(g, f);
            if (!g->is_abelian()) {
                GroupMap::Factor h;
                for (int a = 0; a < g->dim(); ++a) h.push_back(random_poly(rng, d, 1, 1));
                c = c * GroupMap::exp_of(g, h);
            }
            gauge[d].push_back(std::move(c));
        }
    }
    Bundle p(base, g);
    for (int d = 1; d <= x.max_dim(); ++d) {
        for (int idx = 0; idx < x.count(d); ++idx) {
            for (int i = 0; i <= d; ++i) {
                const Simplex& face = x.face({d, idx}, i);
                GroupMap phi = gauge[d][idx].pullback(coface(d, i)) *
                               gauge[face.base.dim][face.base.index].pullback(face.collapse).inverse();
                if (u1) phi = phi * constant_map(g, d - 1, {Scalar::tau(1) * Scalar(winding(rng))});
                p.set_transition({d, idx}, i, std::move(phi));
            }
        }
    }
    return p;
}

Bundle gauge_change(const Bundle& p, const std::vector<std::vector<Coords>>& logs) {
    const auto& x = *p.base();
    Bundle q(p.base(), p.algebra());
    for (int d = 1; d <= x.max_dim(); ++d) {
        for (int idx = 0; idx < x.count(d); ++idx) {
            for (int i = 0; i <= d; ++i) {
                const SimplexId face = x.face({d, idx}, i).base;
                q.set_transition({d, idx}, i,
                                 constant_map(p.algebra(), d - 1, logs.at(d).at(idx)) * p.transition({d, idx}, i) *
                                     constant_map(p.algebra(), d - 1, logs.at(face.dim).at(face.index)).inverse());
            }
        }
    }
    return q;
}

Bundle clutch_bundle(int n, const Rational& wobble) {
    const auto u1 = LieAlgebra::make("u1");
    Bundle p(two_disk_sphere(), u1);
    const Poly t = Poly::variable(1, 0);
    const Poly q = t * Scalar(n) + t * (Poly::constant(1, Scalar(1)) - t) * Scalar(wobble);
    p.set_transition({2, 1}, 2, GroupMap::exp_of(u1, {q * Scalar::tau(1)}));
    return p;
}

Rational winding_oracle(const Bundle& p, const Chain& z) {
    if (p.algebra()->name() != "u1") fail(ErrorKind::unsupported, "winding oracle needs a U(1) bundle");
    if (z.dim != 2) fail(ErrorKind::degree_mismatch, "winding oracle needs a 2-chain");
    const Scalar zero(0), one(1);
    Scalar total;
    for (int idx = 0; idx < static_cast<int>(z.coeffs.size()); ++idx) {
        if (z.coeffs[idx].is_zero()) continue;
        for (int i = 0; i <= 2; ++i) {
            const GroupMap& phi = p.transition({2, idx}, i);
            if (!phi.is_exact()) fail(ErrorKind::unsupported, "winding oracle needs exact logs");
            Poly log(1);
            for (const auto& f : phi.factors()) log += f[0];
            const Scalar jump = log.evaluate(std::span(&one, 1)) - log.evaluate(std::span(&zero, 1));
            total -= z.coeffs[idx] * Scalar(i % 2 ? -1 : 1) * jump * Scalar::tau(-1);
        }
    }
    const auto r = total.as_rational();
    if (!r) fail(ErrorKind::invariant_violation, "winding is not rational: " + total.to_string());
    return *r;
}

SimplicialMap horn_inclusion(const HornPresentation& h) {
    std::vector<std::vector<Simplex>> images(h.horn->max_dim() + 1);
    for (int d = 0; d <= h.horn->max_dim(); ++d)
        for (int idx = 0; idx < h.horn->count(d); ++idx) images[d].push_back(Simplex::of({d, h.inclusion[d][idx]}));
    return SimplicialMap(h.horn, h.simplex, std::move(images));
}

Bundle restrict_to_horn(const HornPresentation& h, const Bundle& on_simplex) {
    return pullback_bundle(horn_inclusion(h), on_simplex);
}

Bundle horn_fill_bundle(const HornPresentation& h, const Bundle& on_horn) {
    if (!same_base(on_horn.base(), h.horn)) fail(ErrorKind::invalid_horn, "bundle does not live on this horn");
    const int n = h.n;
    const int k = h.k;
    const auto& g = on_horn.algebra();
    Bundle p(h.simplex, g);
    for (int d = 1; d < static_cast<int>(h.inclusion.size()); ++d)
        for (int idx = 0; idx < static_cast<int>(h.inclusion[d].size()); ++idx)
            for (int i = 0; i <= d; ++i)
                p.set_transition({d, h.inclusion[d][idx]}, i, on_horn.transition({d, idx}, i));

    const auto& x = *h.simplex;
    const SimplexId top{n, 0};
    auto face_of_top = [&](int i) { return x.face(top, i).base; };

    // Facets other than k, in increasing order. Facet j must agree with the
    // earlier ones on their common faces; the mismatch is pushed in along a
    // retraction towards the vertex of the missing facet.
    for (int j = 0; j <= n; ++j) {
        if (j == k) continue;
        const int w = k < j ? k : k - 1;
        GroupMap g_j = GroupMap::identity(g, n - 1);
        for (int i = 0; i < j; ++i) {
            if (i == k) continue;
            const GroupMap target = p.transition(top, i).pullback(coface(n - 1, j - 1)) *
                                    p.transition(face_of_top(i), j - 1) *
                                    p.transition(face_of_top(j), i).inverse();
            const GroupMap fix = g_j.pullback(coface(n - 1, i)).inverse() * target;
            std::vector<int> images;
            for (int v = 0; v < n; ++v) {
                const int u = v == i ? w : v;
                images.push_back(u > i ? u - 1 : u);
            }
            g_j = g_j * fix.pullback(PolyMap::affine(n - 1, n - 2, images));
        }
        p.set_transition(top, j, std::move(g_j));
    }

    if (n >= 2) {
        const SimplexId missing = face_of_top(k);
        for (int i = 0; i < n; ++i) {
            if (i < k)
                p.set_transition(missing, i,
                                 p.transition(top, i).pullback(coface(n - 1, k - 1)) *
                                     p.transition(face_of_top(i), k - 1));
            else
                p.set_transition(missing, i,
                                 p.transition(top, i + 1).pullback(coface(n - 1, k)) *
                                     p.transition(face_of_top(i + 1), k));
        }
    }
    return p;
}

}  // namespace scw
