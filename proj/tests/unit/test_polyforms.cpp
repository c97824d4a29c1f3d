#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "doctest.h"
#include "scw/chains.hpp"
#include "scw/error.hpp"
#include "scw/sampling.hpp"
#include "scw/whitney.hpp"

using namespace scw;

namespace {

Poly x(int d, int v) { return Poly::variable(d, v); }
Poly one(int d) { return Poly::constant(d, Scalar(1)); }

// Nested adaptive Gauss-Kronrod over Delta^d for d <= 3.
double quad_simplex(const std::function<double(const std::vector<double>&)>& f, int d) {
    using boost::math::quadrature::gauss_kronrod;
    std::vector<double> p(d);
    std::function<double(int, double)> level = [&](int v, double left) -> double {
        if (v == d) return f(p);
        return gauss_kronrod<double, 15>::integrate(
            [&](double t) {
                p[v] = t;
                return level(v + 1, left - t);
            },
            0.0, left, 4, 1e-10);
    };
    return level(0, 1.0);
}

double quad_top(const PolyForm& w) {
    const Poly f = w.component((IndexMask{1} << w.dim()) - 1);
    return quad_simplex([&](const std::vector<double>& p) { return f.evaluate(std::span<const double>(p)).real(); },
                        w.dim());
}

// Chain rule: pullback of dx_j along phi is sum_l d(phi_j)/ds_l ds_l.
PolyForm chain_rule_pullback_of_differential(const PolyMap& phi, int j) {
    PolyForm r(phi.source_dim(), 1);
    for (int l = 0; l < phi.source_dim(); ++l) r.add_component(IndexMask{1} << l, phi.coordinates()[j].derivative(l));
    return r;
}

PolyMap random_poly_map(Rng& rng, int k, int d, int degree) {
    std::vector<std::vector<Rational>> control;
    std::uniform_int_distribution<int> pick(0, 6);
    for (std::size_t a = 0; a < bernstein_indices(k, degree).size(); ++a) {
        // random rational point of Delta^d via normalized weights
        std::vector<int> w(d + 1);
        int total = 0;
        for (auto& v : w) total += v = pick(rng);
        if (total == 0) w[0] = total = 1;
        std::vector<Rational> p;
        for (int j = 1; j <= d; ++j) p.emplace_back(w[j], total);
        for (auto& q : p) q.canonicalize();
        control.push_back(p);
    }
    return PolyMap::bernstein(k, d, degree, control);
}

}  // namespace

TEST_CASE("d_form") {
    const PolyForm w = PolyForm::monomial_form(x(2, 0), {1});
    CHECK(d_form(w) == PolyForm::monomial_form(one(2), {0, 1}));
    CHECK(d_form(PolyForm::function(Poly::constant(3, Scalar(7)))).is_zero());
    Rng rng(1);
    for (int t = 0; t < 100; ++t) {
        const int d = 1 + t % 4;
        const int k = t % (d + 1);
        const PolyForm a = random_form(rng, d, k, 3);
        CHECK(d_form(d_form(a)).is_zero());
    }
}

TEST_CASE("wedge") {
    const PolyForm dx1 = PolyForm::differential(2, 0), dx2 = PolyForm::differential(2, 1);
    CHECK(wedge(dx1, dx1).is_zero());
    CHECK(wedge(dx1, dx2) == -wedge(dx2, dx1));
    Rng rng(2);
    for (int t = 0; t < 100; ++t) {
        const int d = 2 + t % 3;
        const int p = t % 3, q = (t / 3) % 2;
        const PolyForm a = random_form(rng, d, p, 2), b = random_form(rng, d, q, 2);
        CHECK(d_form(wedge(a, b)) == wedge(d_form(a), b) + Scalar(p % 2 ? -1 : 1) * wedge(a, d_form(b)));
        CHECK(wedge(a, b) == Scalar((p * q) % 2 ? -1 : 1) * wedge(b, a));
    }
}

TEST_CASE("pullback along the face omitting vertex 2") {
    const PolyForm dx1 = PolyForm::differential(2, 0);
    const PolyMap face = PolyMap::from_ordinal(coface(2, 2), 2);
    const PolyForm pulled = pullback_form(dx1, face);
    CHECK(pulled == chain_rule_pullback_of_differential(face, 0));
    CHECK(pulled == PolyForm::differential(1, 0));
    CHECK(pullback_form(PolyForm::differential(2, 1), face).is_zero());
    // the face opposite vertex 0: s -> (1 - s, s)
    const PolyMap far = PolyMap::from_ordinal(coface(2, 0), 2);
    CHECK(pullback_form(dx1, far) == chain_rule_pullback_of_differential(far, 0));
    CHECK(pullback_form(dx1, far) == -PolyForm::differential(1, 0));
}

TEST_CASE("pullback identities") {
    Rng rng(3);
    const PolyForm w = random_form(rng, 3, 2, 2);
    CHECK(pullback_form(w, PolyMap::identity(3)) == w);
    for (int t = 0; t < 100; ++t) {
        const int d = 1 + t % 3, k = 1 + (t / 3) % 3, deg = 1 + t % 2;
        const PolyMap phi = random_poly_map(rng, k, d, deg);
        CHECK(phi.control_points_valid());
        const PolyForm a = random_form(rng, d, t % (d + 1), 2);
        CHECK(pullback_form(d_form(a), phi) == d_form(pullback_form(a, phi)));
        if (t % 4 == 0) {
            const PolyMap psi = random_poly_map(rng, 1 + t % 2, k, 1);
            CHECK(pullback_form(a, compose(phi, psi)) == pullback_form(pullback_form(a, phi), psi));
        }
    }
    for (int j = 0; j < 2; ++j) {
        const PolyMap phi = random_poly_map(rng, 2, 2, 2);
        CHECK(pullback_form(PolyForm::differential(2, j), phi) == chain_rule_pullback_of_differential(phi, j));
    }
}

TEST_CASE("Bernstein maps stay inside the simplex") {
    Rng rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int inside = 0;
    for (int t = 0; t < 1000; ++t) {
        const PolyMap phi = random_poly_map(rng, 2, 3, 1 + t % 3);
        double a = u(rng), b = u(rng);
        if (a + b > 1) a = 1 - a, b = 1 - b;
        const std::vector<double> p{a, b};
        const auto img = phi.evaluate(p);
        double sum = 0;
        bool ok = true;
        for (double c : img) {
            ok = ok && c >= -1e-12;
            sum += c;
        }
        inside += ok && sum <= 1 + 1e-12;
    }
    CHECK(inside == 1000);
}

TEST_CASE("integrate_top") {
    CHECK(integrate_top(PolyForm::differential(1, 0)) == Scalar(1));
    const PolyForm area = PolyForm::monomial_form(one(2), {0, 1});
    CHECK(integrate_top(area) == Scalar(Rational(1, 2)));
    CHECK(quad_top(area) == doctest::Approx(0.5).epsilon(1e-12));
    const PolyForm moment = PolyForm::monomial_form(x(2, 0), {0, 1});
    CHECK(integrate_top(moment) == Scalar(Rational(1, 6)));
    CHECK(quad_top(moment) == doctest::Approx(1.0 / 6).epsilon(1e-12));
    CHECK_THROWS_AS(integrate_top(PolyForm::differential(2, 0)), Error);

    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        const int d = 1 + t % 3;
        const PolyForm w = random_form(rng, d, d, 4).to_float();
        const double exact = integrate_top(w).real();
        const double oracle = quad_top(w);
        CHECK(std::abs(exact - oracle) <= 1e-9 * std::max(1.0, std::abs(oracle)));
    }
}

TEST_CASE("simplicial forms") {
    // the form induced on Delta^2 by a global form
    const PolyForm global = PolyForm::monomial_form(x(2, 0) * x(2, 1), {1}) + PolyForm::differential(2, 0);
    const SimplicialForm induced = induced_form(standard_simplex(2), global);
    CHECK(check_simplicial_form(induced).ok);
    CHECK(check_simplicial_form(SimplicialForm(boundary_sphere(2), 1)).ok);

    Rng rng(6);
    SimplicialForm broken = random_simplicial_form(rng, boundary_sphere(2), 1);
    REQUIRE(check_simplicial_form(broken).ok);
    broken.set({1, 3}, broken.at({1, 3}) + PolyForm::differential(1, 0));
    const FormCheck bad = check_simplicial_form(broken);
    CHECK_FALSE(bad.ok);
    CHECK(bad.simplex.dim == 2);
    CHECK(bad.face >= 0);
}

TEST_CASE("global operations preserve compatibility") {
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        auto base = t % 2 ? boundary_sphere(2) : two_disk_sphere();
        const SimplicialForm a = random_simplicial_form(rng, base, t % 2);
        const SimplicialForm b = random_simplicial_form(rng, base, 1);
        CHECK(check_simplicial_form(a).ok);
        CHECK(check_simplicial_form(global_d(a)).ok);
        CHECK(check_simplicial_form(global_wedge(a, b)).ok);
        CHECK(global_d(global_d(a)).is_zero());
    }
    const SimplicialForm a = random_simplicial_form(rng, boundary_sphere(2), 1);
    CHECK(global_pullback(SimplicialMap::identity(a.base()), a) == a);
}

TEST_CASE("integration commutes with d") {
    Rng rng(8);
    for (int t = 0; t < 100; ++t) {
        auto base = t % 2 ? boundary_sphere(2) : two_disk_sphere();
        const SimplicialForm w = random_simplicial_form(rng, base, t % 2);
        CHECK(integrate_to_cochain(global_d(w)) == coboundary(*base, integrate_to_cochain(w)));
    }
    const SimplicialForm f = random_simplicial_form(rng, boundary_sphere(2), 0);
    const Cochain values = integrate_to_cochain(f);
    for (int v = 0; v < 4; ++v) CHECK(values.values[v] == f.at({0, v}).component(0).constant_term());

    auto s = two_disk_sphere();
    const SimplicialForm eta = random_simplicial_form(rng, s, 1);
    CHECK(pairing(integrate_to_cochain(global_d(eta)), Chain{2, {Scalar(1), Scalar(-1)}}).is_zero());
}

TEST_CASE("whitney extension") {
    for (int d = 1; d <= 3; ++d) {
        std::vector<PolyForm> zero(d + 1, PolyForm(d - 1, 0));
        CHECK(whitney_extend(d, zero).is_zero());
        std::vector<PolyForm> constant(d + 1, PolyForm::function(Poly::constant(d - 1, Scalar(3))));
        CHECK(whitney_extend(d, constant) == PolyForm::function(Poly::constant(d, Scalar(3))));
    }
    Rng rng(9);
    for (int t = 0; t < 30; ++t) {
        const int d = 2 + t % 2;
        const int k = t % d;
        const PolyForm global = random_form(rng, d, k, 2);
        std::vector<PolyForm> facets;
        for (int i = 0; i <= d; ++i) facets.push_back(pullback_form(global, coface(d, i)));
        const PolyForm ext = whitney_extend(d, facets);
        for (int i = 0; i <= d; ++i) CHECK(pullback_form(ext, coface(d, i)) == facets[i]);
    }
    std::vector<PolyForm> bad(3, PolyForm::function(Poly::constant(1, Scalar(0))));
    bad[1] = PolyForm::function(x(1, 0));
    try {
        whitney_extend(2, bad);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::inconsistent_prescription);
        CHECK(std::string(e.what()).find("faces") != std::string::npos);
    }
}

TEST_CASE("form serialization") {
    Rng rng(10);
    for (int t = 0; t < 20; ++t) {
        const PolyForm w = random_form(rng, 3, t % 4, 2) * Scalar::gaussian(Rational(1, 3), Rational(-2), t % 3 - 1);
        const std::string text = w.serialize();
        CHECK(PolyForm::parse(text) == w);
        CHECK(PolyForm::parse(text).serialize() == text);
    }
    CHECK_THROWS_AS(PolyForm::parse("form v1; dim 2; deg 1;\ncomp 3: x1\n"), ParseError);
}
