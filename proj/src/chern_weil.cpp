#include "scw/chern_weil.hpp"

#include <boost/math/special_functions/legendre.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "scw/error.hpp"
#include "scw/kernels.hpp"

namespace scw {

namespace {

std::string cell_name(SimplexId id) { return std::to_string(id.dim) + "." + std::to_string(id.index); }

void same_algebra(const InvariantPolynomial& rho, const AlgebraPtr& g) {
    if (rho.algebra()->name() != g->name())
        fail(ErrorKind::algebra_mismatch, rho.name() + " is defined on " + rho.algebra()->name() + ", not " + g->name());
}

bool trivial_ad(const GroupMap& phi) { return phi.is_identity() || phi.algebra()->is_abelian(); }

bool all_constant(const GroupMap& phi) {
    for (const auto& f : phi.factors())
        for (const auto& p : f)
            if (!p.is_constant()) return false;
    return true;
}

int permutation_sign(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b) inversions += p[a] > p[b];
    return inversions % 2 ? -1 : 1;
}

/// Gauss-Legendre rule on [0, 1].
void gauss_legendre_01(int order, std::vector<double>& x, std::vector<double>& w) {
    x.clear();
    w.clear();
    for (double r : boost::math::legendre_p_zeros<double>(order)) {
        const double dp = boost::math::legendre_p_prime(order, r);
        const double wr = 1.0 / ((1.0 - r * r) * dp * dp);
        x.push_back(0.5 * (1.0 + r));
        w.push_back(wr);
        if (r != 0.0) {
            x.push_back(0.5 * (1.0 - r));
            w.push_back(wr);
        }
    }
}

/// Integral of f dx_1 .. dx_d over Delta^d by the conical product rule.
double quadrature_on_simplex(const Poly& f, int order) {
    const int d = f.nvars();
    const Poly g = f.to_float();
    if (d == 0) return g.constant_term().real();
    std::vector<double> coeff;
    std::vector<std::uint8_t> exps;
    for (const auto& [e, c] : g.terms()) {
        coeff.push_back(c.real());
        exps.insert(exps.end(), e.begin(), e.begin() + d);
    }
    std::vector<double> u, uw;
    gauss_legendre_01(order, u, uw);
    const std::size_t m = u.size();
    std::size_t total = 1;
    for (int j = 0; j < d; ++j) total *= m;
    std::vector<std::vector<double>> pts(d, std::vector<double>(total));
    std::vector<double> weights(total);
    for (std::size_t q = 0; q < total; ++q) {
        std::size_t rest = q;
        double remaining = 1.0, weight = 1.0;
        for (int j = 0; j < d; ++j) {
            const std::size_t node = rest % m;
            rest /= m;
            pts[j][q] = remaining * u[node];
            weight *= uw[node] * remaining;
            remaining *= 1.0 - u[node];
        }
        weights[q] = weight;
    }
    std::vector<const double*> cols;
    for (const auto& p : pts) cols.push_back(p.data());
    std::vector<double> values(total);
    kernels::evaluate_batch({d, coeff, exps}, cols, values);
    const double* vp = values.data();
    return kernels::weighted_product_sum(weights, std::span(&vp, 1));
}

}  // namespace

LieForm curvature_form(const LieForm& a) {
    return d_form(a) + Poly::constant(a.dim, Scalar(Rational(1, 2))) * bracket_wedge(a, a);
}

Curvature curvature(const Connection& a) {
    Curvature f{a.base(), a.algebra(), {}};
    const auto& x = *a.base();
    f.forms.resize(x.max_dim() + 1);
    for (int d = 0; d <= x.max_dim(); ++d)
        for (int idx = 0; idx < x.count(d); ++idx) f.forms[d].push_back(curvature_form(a.at({d, idx})));
    return f;
}

LieForm bianchi_defect(const LieForm& a) {
    const LieForm f = curvature_form(a);
    return d_form(f) + bracket_wedge(a, f);
}

GaugeCheck check_curvature_covariance(const Bundle& p, const Connection& a, Rng& rng, double tol, int samples) {
    const auto& x = *p.base();
    const auto& g = *p.algebra();
    const Curvature f = curvature(a);
    GaugeCheck out;
    for (int d = 2; d <= x.max_dim(); ++d) {
        for (int idx = 0; idx < x.count(d); ++idx) {
            const SimplexId s{d, idx};
            for (int i = 0; i <= d; ++i) {
                const GroupMap& phi = p.transition(s, i);
                const LieForm face = f.on(x.face(s, i));
                const LieForm pulled = pullback_form(f.at(s), coface(d, i));
                double defect = 0.0;
                if (trivial_ad(phi) || all_constant(phi)) {
                    LieForm rhs = pulled;
                    if (!trivial_ad(phi)) {
                        const std::vector<double> origin(d - 1, 0.0);
                        rhs = apply_matrix(ad_matrix_of(g, phi.evaluate(origin).inverse()), pulled);
                    }
                    const bool exact = face.is_exact() && rhs.is_exact();
                    out.exact = out.exact && exact;
                    if (exact ? face == rhs : face.near(rhs, tol)) continue;
                    defect = INFINITY;
                } else {
                    out.exact = false;
                    for (int t = 0; t < samples; ++t) {
                        const auto pt = random_simplex_point(rng, d - 1);
                        const auto lhs = face.evaluate(pt);
                        const auto raw = pulled.evaluate(pt);
                        const Eigen::MatrixXd ad = ad_matrix_of(g, phi.evaluate(pt).inverse());
                        for (std::size_t m = 0; m < (raw.empty() ? 0 : raw[0].size()); ++m) {
                            for (int c = 0; c < g.dim(); ++c) {
                                std::complex<double> rhs = 0.0;
                                for (int b = 0; b < g.dim(); ++b) rhs += ad(c, b) * raw[b][m];
                                defect = std::max(defect, std::abs(lhs[c][m] - rhs));
                            }
                        }
                    }
                    out.max_defect = std::max(out.max_defect, defect);
                    if (defect <= tol) continue;
                }
                out.ok = false;
                out.simplex = s;
                out.face = i;
                out.max_defect = std::max(out.max_defect, defect);
                out.message = "curvature covariance fails on face " + std::to_string(i) + " of simplex " + cell_name(s);
                return out;
            }
        }
    }
    return out;
}

PolyForm cw_wedge_form(const InvariantPolynomial& rho, const LieForm& f) {
    same_algebra(rho, f.algebra);
    const int k = rho.arity();
    PolyForm out(f.dim, 2 * k);
    if (2 * k > f.dim) return out;
    for (const auto& e : rho.entries()) {
        PolyForm w = f.c[e.index[0]];
        for (int r = 1; r < k && !w.is_zero(); ++r) w = wedge(w, f.c[e.index[r]]);
        if (!w.is_zero()) out += w * e.value;
    }
    return out;
}

PolyForm cw_permutation_form(const InvariantPolynomial& rho, const LieForm& f) {
    same_algebra(rho, f.algebra);
    const int k = rho.arity();
    const int n = 2 * k;
    PolyForm out(f.dim, n);
    if (n > f.dim) return out;
    // F(e_u, e_v) for the a-th coordinate
    auto entry = [&](int a, int u, int v) {
        if (u == v) return Poly(f.dim);
        const Poly c = f.c[a].component((IndexMask{1} << u) | (IndexMask{1} << v));
        return u < v ? c : -c;
    };
    Rational norm = 1;
    for (int j = 2; j <= n; ++j) norm *= j;
    const Scalar scale(Rational(1) / norm);
    for (IndexMask mask = 0; mask < (IndexMask{1} << f.dim); ++mask) {
        if (std::popcount(mask) != n) continue;
        const std::vector<int> v = mask_indices(mask);
        std::vector<int> pi(n);
        std::iota(pi.begin(), pi.end(), 0);
        Poly total(f.dim);
        do {
            Poly term(f.dim);
            for (const auto& e : rho.entries()) {
                Poly prod = Poly::constant(f.dim, e.value);
                for (int r = 0; r < k && !prod.is_zero(); ++r) prod = prod * entry(e.index[r], v[pi[2 * r]], v[pi[2 * r + 1]]);
                term += prod;
            }
            if (permutation_sign(pi) > 0)
                total += term;
            else
                total -= term;
        } while (std::next_permutation(pi.begin(), pi.end()));
        out.add_component(mask, total * scale);
    }
    return out;
}

std::optional<Scalar> calibration_constant(const InvariantPolynomial& rho, const LieForm& f) {
    const PolyForm w = cw_wedge_form(rho, f);
    const PolyForm p = cw_permutation_form(rho, f);
    if (w.is_zero()) {
        if (!p.is_zero()) fail(ErrorKind::invariant_violation, "permutation formula is nonzero where the wedge form vanishes");
        return std::nullopt;
    }
    const auto& [mask, poly] = *w.components().begin();
    const auto& [e, coeff] = *poly.terms().begin();
    const Scalar c = p.component(mask).coefficient(e) / coeff;
    const PolyForm scaled = w * c;
    const bool exact = w.is_exact() && p.is_exact();
    if (exact ? !(scaled == p) : !scaled.near(p, 1e-9))
        fail(ErrorKind::invariant_violation, "permutation formula is not a multiple of the wedge form");
    return c;
}

SimplicialForm cw_form(const InvariantPolynomial& rho, const Connection& a, CwFormula formula) {
    same_algebra(rho, a.algebra());
    const Curvature f = curvature(a);
    const auto& x = *a.base();
    SimplicialForm out(a.base(), 2 * rho.arity());
    for (int d = 0; d <= x.max_dim(); ++d)
        for (int idx = 0; idx < x.count(d); ++idx)
            out.set({d, idx}, formula == CwFormula::wedge ? cw_wedge_form(rho, f.at({d, idx}))
                                                          : cw_permutation_form(rho, f.at({d, idx})));
    return out;
}

Cochain cw_cochain(const InvariantPolynomial& rho, const Connection& a) {
    return integrate_to_cochain(cw_form(rho, a));
}

std::string ClassReport::machine_line() const {
    std::ostringstream out;
    out << "class ρ=" << rho << " bundle=" << bundle << ": closed=" << (closed ? "yes" : "no") << " pairings=[";
    for (std::size_t i = 0; i < pairings.size(); ++i) out << (i ? ", " : "") << pairings[i].to_string();
    out << "] witness=" << (witness ? "present" : "absent");
    return out.str();
}

std::string ClassReport::human() const {
    std::ostringstream out;
    out << "characteristic cochain of " << rho << " on " << bundle << "\n";
    out << "  values:   " << alpha.to_string() << "\n";
    out << "  closed:   " << (closed ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < pairings.size(); ++i) out << "  cycle " << i << ":  " << pairings[i].to_string() << "\n";
    if (witness) out << "  exact, primitive " << witness->to_string() << "\n";
    return out.str();
}

ClassReport class_report(const InvariantPolynomial& rho, const Connection& a, const std::vector<Chain>& cycles,
                         const std::string& bundle_id) {
    ClassReport r;
    r.rho = rho.name();
    r.bundle = bundle_id;
    r.alpha = cw_cochain(rho, a);
    const Cochain da = coboundary(*a.base(), r.alpha);
    r.closed = r.alpha.is_exact() ? da.is_zero() : da.near(Cochain::zero(*a.base(), da.dim), 1e-9);
    for (const auto& z : cycles) r.pairings.push_back(pairing(r.alpha, z));
    if (r.alpha.is_exact() && r.alpha.dim > 0) r.witness = is_coboundary(*a.base(), r.alpha).witness;
    return r;
}

IndependenceResult connection_independence(const InvariantPolynomial& rho, const Connection& a1,
                                           const Connection& a2) {
    IndependenceResult r;
    r.difference = cw_cochain(rho, a1) - cw_cochain(rho, a2);
    if (r.difference.dim == 0) {
        r.ok = r.difference.is_zero();
        return r;
    }
    auto solved = is_coboundary(*a1.base(), r.difference);
    r.witness = std::move(solved.witness);
    r.certificate = std::move(solved.certificate);
    r.ok = r.witness.has_value();
    if (r.ok && !(coboundary(*a1.base(), *r.witness) == r.difference))
        r.ok = coboundary(*a1.base(), *r.witness).near(r.difference, 1e-9);
    return r;
}

NaturalityResult naturality_check(const SimplicialMap& f, const InvariantPolynomial& rho, const Connection& a,
                                  double tol) {
    NaturalityResult r;
    r.pulled = pullback_cochain(f, cw_cochain(rho, a));
    r.recomputed = cw_cochain(rho, pullback_connection(f, a));
    const bool exact = r.pulled.is_exact() && r.recomputed.is_exact();
    r.ok = exact ? r.pulled == r.recomputed : r.pulled.near(r.recomputed, tol);
    return r;
}

AgreementResult classical_agreement(const InvariantPolynomial& rho, const Connection& a, const Chain& z, double tol,
                                    int order) {
    if (z.dim != 2 * rho.arity())
        fail(ErrorKind::degree_mismatch, "cycle of dimension " + std::to_string(z.dim) + " against a " +
                                             std::to_string(2 * rho.arity()) + "-form");
    AgreementResult r;
    r.simplicial = pairing(cw_cochain(rho, a), z);
    const IndexMask full = (IndexMask{1} << z.dim) - 1;
    for (std::size_t idx = 0; idx < z.coeffs.size(); ++idx) {
        if (z.coeffs[idx].is_zero()) continue;
        const SimplexId s{z.dim, static_cast<int>(idx)};
        const PolyForm top = cw_wedge_form(rho, curvature_form(a.at(s)));
        r.classical += z.coeffs[idx].real() * quadrature_on_simplex(top.component(full), order);
    }
    r.ok = std::abs(r.simplicial.to_complex() - r.classical) <= tol;
    return r;
}

}  // namespace scw
