#include "scw/sampling.hpp"

#include <bit>

#include "scw/whitney.hpp"

namespace scw {

Rational random_rational(Rng& rng, int span) {
    std::uniform_int_distribution<int> num(-span, span), den(1, 4);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

Poly random_poly(Rng& rng, int nvars, int max_degree, int terms) {
    Poly p(nvars);
    std::uniform_int_distribution<int> deg(0, max_degree);
    for (int t = 0; t < terms; ++t) {
        Exponents e{};
        int left = nvars == 0 ? 0 : deg(rng);
        for (int v = 0; v < nvars && left > 0; ++v) {
            std::uniform_int_distribution<int> take(0, left);
            const int a = v + 1 == nvars ? left : take(rng);
            e[v] = static_cast<std::uint8_t>(a);
            left -= a;
        }
        p.add_term(e, Scalar(random_rational(rng)));
    }
    return p;
}

PolyForm random_form(Rng& rng, int dim, int degree, int max_poly_degree) {
    PolyForm w(dim, degree);
    if (degree > dim) return w;
    for (IndexMask m = 0; m < (IndexMask{1} << dim); ++m)
        if (std::popcount(m) == degree) w.add_component(m, random_poly(rng, dim, max_poly_degree, 2));
    return w;
}

Poly interior_bump(int d) {
    Poly b = Poly::constant(d, Scalar(1));
    for (int j = 0; j <= d; ++j) b = b * barycentric(d, j);
    return b;
}

SimplicialForm random_simplicial_form(Rng& rng, const SetPtr& base, int degree, int max_poly_degree) {
    SimplicialForm w(base, degree);
    if (degree == 0)
        for (int v = 0; v < base->count(0); ++v)
            w.set({0, v}, PolyForm::function(Poly::constant(0, Scalar(random_rational(rng)))));
    for (int d = std::max(1, degree); d <= base->max_dim(); ++d) {
        const Poly bump = interior_bump(d);
        for (int idx = 0; idx < base->count(d); ++idx) {
            std::vector<PolyForm> facets;
            for (int i = 0; i <= d; ++i) facets.push_back(w.on(base->face({d, idx}, i)));
            // facets carry nothing in degree d, so the cell's form is unconstrained
            const Poly& weight = d == degree ? Poly::constant(d, Scalar(1)) : bump;
            w.set({d, idx}, whitney_extend(d, facets) + weight * random_form(rng, d, degree, max_poly_degree));
        }
    }
    return w;
}

}  // namespace scw
