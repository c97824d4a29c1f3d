#include "scw/whitney.hpp"

#include <algorithm>

#include "scw/error.hpp"

namespace scw {

namespace {

/// u^N * pi_i^* r, where pi_i is the projection from vertex i onto facet i.
PolyForm radial_extension(int d, int i, const PolyForm& r) {
    const int k = r.degree();
    const Poly u = Poly::constant(d, Scalar(1)) - barycentric(d, i);
    std::vector<Poly> numer;  // facet coordinate l is numer[l] / u
    for (int l = 1; l < d; ++l) numer.push_back(barycentric(d, l < i ? l : l + 1));

    int power = d == 1 ? 1 : 0;  // on an edge the opposite facet is the projection centre itself
    for (const auto& [m, f] : r.components()) power = std::max(power, f.degree() + 2 * k);

    const PolyForm du = d_form(PolyForm::function(u));
    std::vector<PolyForm> frame;  // u dN_l - N_l du
    for (const auto& n : numer) frame.push_back(u * d_form(PolyForm::function(n)) - n * du);

    PolyForm out(d, k);
    for (const auto& [m, f] : r.components()) {
        PolyForm dy = PolyForm::function(Poly::constant(d, Scalar(1)));
        for (int l : mask_indices(m)) dy = wedge(dy, frame[l]);
        Poly coeff(d);
        for (const auto& [e, c] : f.terms()) {
            Poly term = Poly::constant(d, c);
            for (int l = 0; l + 1 < d; ++l)
                if (e[l]) term = term * numer[l].pow(e[l]);
            coeff += term * u.pow(power - total_degree(e) - 2 * k);
        }
        out += coeff * dy;
    }
    return out;
}

}  // namespace

PolyForm whitney_extend(int d, const std::vector<PolyForm>& facets) {
    if (d < 1) fail(ErrorKind::invalid_argument, "whitney_extend needs d >= 1");
    if (static_cast<int>(facets.size()) != d + 1)
        fail(ErrorKind::invalid_argument, "whitney_extend needs one prescription per facet");
    const int k = facets[0].degree();
    for (const auto& f : facets)
        if (f.dim() != d - 1 || f.degree() != k)
            fail(ErrorKind::degree_mismatch, "facet prescriptions must be degree-" + std::to_string(k) +
                                                 " forms on Delta^" + std::to_string(d - 1));
    for (int i = 0; i < d && d >= 2; ++i)
        for (int j = i + 1; j <= d; ++j)
            if (pullback_form(facets[j], coface(d - 1, i)) != pullback_form(facets[i], coface(d - 1, j - 1)))
                fail(ErrorKind::inconsistent_prescription,
                     "prescriptions on faces " + std::to_string(i) + " and " + std::to_string(j) +
                         " disagree on their common face");

    PolyForm w(d, k);
    for (int i = 0; i <= d; ++i) {
        const PolyForm residual = facets[i] - pullback_form(w, coface(d, i));
        if (!residual.is_zero()) w += radial_extension(d, i, residual);
    }
    return w;
}

}  // namespace scw
