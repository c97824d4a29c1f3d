#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "scw/error.hpp"
#include "scw/invariant_poly.hpp"

using namespace scw;

namespace {

Coords float_coords(Rng& rng, int dim, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Coords c(dim);
    for (auto& v : c) v = Scalar::from_double(u(rng));
    return c;
}

std::complex<double> det_poly_coefficient(const Eigen::MatrixXcd& x, int k) {
    // coefficient of t^k in det(I + t X / (2 pi i)) by interpolation through t = 0..n
    const int n = static_cast<int>(x.rows());
    const std::complex<double> scale(0.0, -1.0 / kTau);
    Eigen::MatrixXcd vandermonde(n + 1, n + 1);
    Eigen::VectorXcd values(n + 1);
    for (int s = 0; s <= n; ++s) {
        for (int j = 0; j <= n; ++j) vandermonde(s, j) = std::pow(double(s), j);
        values(s) = (Eigen::MatrixXcd::Identity(n, n) + double(s) * scale * x).determinant();
    }
    return vandermonde.fullPivLu().solve(values)(k);
}

}  // namespace

TEST_CASE("algebras") {
    for (const char* name : {"u1", "su2", "so3", "u2", "u3", "su3", "u4", "su4"}) {
        const auto g = LieAlgebra::make(name);
        CAPTURE(name);
        // closure and anti-Hermitian basis
        for (const auto& e : g->basis()) CHECK((e + e.adjoint()).is_zero());
        // antisymmetry and Jacobi on basis triples
        const int d = g->dim();
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                Coords ea(d), eb(d);
                ea[a] = Scalar(1);
                eb[b] = Scalar(1);
                Coords s = g->bracket(ea, eb);
                const Coords t = g->bracket(eb, ea);
                for (int c = 0; c < d; ++c) CHECK((s[c] + t[c]).is_zero());
            }
        Rng rng(20);
        for (int t = 0; t < 5; ++t) {
            Coords x(d), y(d), z(d);
            for (int i = 0; i < d; ++i)
                x[i] = Scalar(random_rational(rng)), y[i] = Scalar(random_rational(rng)), z[i] = Scalar(random_rational(rng));
            const Coords j1 = g->bracket(x, g->bracket(y, z)), j2 = g->bracket(y, g->bracket(z, x)),
                         j3 = g->bracket(z, g->bracket(x, y));
            for (int c = 0; c < d; ++c) CHECK((j1[c] + j2[c] + j3[c]).is_zero());
        }
    }
    CHECK(LieAlgebra::make("u1")->is_abelian());
    CHECK(LieAlgebra::make("su4")->dim() == 15);
    CHECK(LieAlgebra::make("u3")->dim() == 9);
    CHECK_THROWS_AS(LieAlgebra::make("sp2"), Error);
}

TEST_CASE("su2 bracket against matrices") {
    const auto g = LieAlgebra::make("su2");
    const std::complex<double> i(0, 1);
    Eigen::Matrix2cd s1, s2, s3;
    s1 << 0, 1, 1, 0;
    s2 << 0, -i, i, 0;
    s3 << 1, 0, 0, -1;
    const Eigen::Matrix2cd e1 = -0.5 * i * s1, e2 = -0.5 * i * s2, e3 = -0.5 * i * s3;
    CHECK((e1 * e2 - e2 * e1 - e3).norm() < 1e-15);
    const LieElement x{g, {Scalar(1), Scalar(0), Scalar(0)}}, y{g, {Scalar(0), Scalar(1), Scalar(0)}};
    CHECK(bracket(x, y).coords == Coords{Scalar(0), Scalar(0), Scalar(1)});
    CHECK(bracket(y, x).coords == Coords{Scalar(0), Scalar(0), Scalar(-1)});

    const auto u1 = LieAlgebra::make("u1");
    CHECK(bracket(LieElement{u1, {Scalar(3)}}, LieElement{u1, {Scalar(5)}}).coords == Coords{Scalar(0)});
    try {
        bracket(x, LieElement{u1, {Scalar(1)}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::algebra_mismatch);
    }
}

TEST_CASE("exp and Ad") {
    const auto g = LieAlgebra::make("su2");
    Rng rng(21);
    const Coords x = float_coords(rng, 3);
    const auto id = Eigen::MatrixXcd::Identity(2, 2);
    const Coords same = g->ad(id, x);
    for (int a = 0; a < 3; ++a) CHECK(std::abs(same[a].real() - x[a].real()) < 1e-15);

    for (int t = 0; t < 200; ++t) {
        const Coords xi = float_coords(rng, 3, 0.1);
        const Coords y = float_coords(rng, 3);
        std::uniform_real_distribution<double> tt(-1.0, 1.0);
        const double s = tt(rng);
        Coords sx = xi;
        for (auto& v : sx) v = v * Scalar::from_double(s);
        const Eigen::MatrixXcd h = g->exp(sx);
        CHECK(g->group_defect(h) < 1e-10);
        const Coords lhs = g->ad(h, y);
        // e^{s ad x} y to order 6
        const Eigen::MatrixXd adx = g->ad_matrix(xi) * s;
        Eigen::VectorXd term(3), sum(3);
        for (int a = 0; a < 3; ++a) term(a) = y[a].real();
        sum = term;
        for (int n = 1; n <= 6; ++n) {
            term = adx * term / n;
            sum += term;
        }
        for (int a = 0; a < 3; ++a) CHECK(std::abs(lhs[a].real() - sum(a)) < 1e-8);
    }
    for (const char* name : {"u1", "so3", "u3", "su4"}) {
        const auto h = LieAlgebra::make(name);
        CHECK(h->group_defect(h->exp(float_coords(rng, h->dim()))) < 1e-10);
    }
}

TEST_CASE("symmetrized traces") {
    const auto u1 = LieAlgebra::make("u1");
    const auto tr1 = sym_trace_poly(u1, 1);
    // x = i theta has coordinate theta
    CHECK(tr1.evaluate({{Scalar(Rational(3, 2))}}) == Scalar::gaussian(0, Rational(3, 2)));

    const auto su2 = LieAlgebra::make("su2");
    const auto tr2 = sym_trace_poly(su2, 2);
    Rng rng(22);
    for (int t = 0; t < 20; ++t) {
        Coords x(3), y(3);
        for (int a = 0; a < 3; ++a) x[a] = Scalar(random_rational(rng)), y[a] = Scalar(random_rational(rng));
        CHECK(tr2.evaluate({x, y}) == (su2->to_matrix(x) * su2->to_matrix(y)).trace());
    }
    for (int k = 1; k <= 3; ++k) {
        const auto rho = sym_trace_poly(su2, k);
        CHECK(check_symmetry(rho, rng, 20).ok);
        CHECK(check_multilinearity(rho, rng, 20).ok);
        const auto inv = check_ad_invariance(rho, rng, 1000, 1e-9);
        CHECK_MESSAGE(inv.ok, inv.detail);
    }
}

TEST_CASE("Chern polynomials") {
    const auto u1 = LieAlgebra::make("u1");
    // X = i a tau has coordinate a tau
    const Scalar a(Rational(-7, 3));
    CHECK(chern_polynomial(u1, 1).evaluate({{a * Scalar::tau()}}) == a);

    const auto su2 = LieAlgebra::make("su2");
    CHECK(chern_polynomial(su2, 1).entries().empty());

    Rng rng(23);
    const auto c2 = chern_polynomial(su2, 2);
    for (int t = 0; t < 50; ++t) {
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        Coords x{Scalar::from_double(u(rng)), Scalar::from_double(u(rng)), Scalar::from_double(u(rng))};
        const auto expect = det_poly_coefficient(su2->to_eigen(x), 2);
        CHECK(std::abs(c2.evaluate({x, x}).to_complex() - expect) < 1e-9);
    }
    for (const char* name : {"u2", "u3", "su3"}) {
        const auto g = LieAlgebra::make(name);
        for (int k = 1; k <= 2; ++k) {
            const auto ck = chern_polynomial(g, k);
            const Coords x = float_coords(rng, g->dim());
            std::vector<Coords> args(k, x);
            CHECK(std::abs(ck.evaluate(args).to_complex() - det_poly_coefficient(g->to_eigen(x), k)) < 1e-9);
        }
    }
    for (int k = 1; k <= 2; ++k) {
        const auto rho = chern_polynomial(su2, k);
        CHECK(check_symmetry(rho, rng, 20).ok);
        const auto inv = check_ad_invariance(rho, rng, 1000, 1e-9);
        CHECK_MESSAGE(inv.ok, inv.detail);
    }
    try {
        chern_polynomial(LieAlgebra::make("so3"), 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::unsupported);
    }
}

TEST_CASE("polarization") {
    const auto su2 = LieAlgebra::make("su2");
    Rng rng(24);
    // square of a linear form
    Poly q(3);
    q.add_term(Exponents{1, 0, 0}, Scalar(2));
    q.add_term(Exponents{0, 0, 1}, Scalar(-3));
    const auto rho = polarize(su2, q * q);
    for (int t = 0; t < 20; ++t) {
        Coords x(3), y(3);
        for (int a = 0; a < 3; ++a) x[a] = Scalar(random_rational(rng)), y[a] = Scalar(random_rational(rng));
        CHECK(rho.evaluate({x, y}) == q.evaluate(x) * q.evaluate(y));
    }
    CHECK(polarize(su2, q).evaluate({{Scalar(1), Scalar(5), Scalar(1)}}) == Scalar(-1));

    // cubic against the finite-difference polarization formula
    const Poly cubic = random_poly(rng, 3, 0, 1) * Poly::variable(3, 0) * Poly::variable(3, 1) * Poly::variable(3, 2) +
                       Poly::variable(3, 0).pow(3) * Scalar(Rational(1, 2));
    const auto rho3 = polarize(su2, cubic);
    for (int t = 0; t < 20; ++t) {
        std::vector<Coords> xs;
        for (int p = 0; p < 3; ++p) {
            Coords c(3);
            for (auto& v : c) v = Scalar(random_rational(rng));
            xs.push_back(c);
        }
        Scalar fd;
        for (int mask = 1; mask < 8; ++mask) {
            Coords sum(3);
            for (int p = 0; p < 3; ++p)
                if (mask >> p & 1)
                    for (int a = 0; a < 3; ++a) sum[a] += xs[p][a];
            const Scalar v = cubic.evaluate(sum);
            fd += (3 - std::popcount(unsigned(mask))) % 2 ? -v : v;
        }
        CHECK(rho3.evaluate(xs) == fd * Scalar(Rational(1, 6)));
    }

    for (int t = 0; t < 100; ++t) {
        Poly p(3);
        const int k = 1 + t % 4;
        for (int term = 0; term < 3; ++term) {
            Exponents e{};
            std::uniform_int_distribution<int> pick(0, 2);
            for (int j = 0; j < k; ++j) ++e[pick(rng)];
            p.add_term(e, Scalar(random_rational(rng)));
        }
        if (p.is_zero()) continue;
        CHECK(diagonal(polarize(su2, p)) == p);
    }
    const auto c2 = chern_polynomial(su2, 2);
    const auto back = polarize(su2, diagonal(c2));
    CHECK(back.entries().size() == c2.entries().size());
    for (std::size_t i = 0; i < c2.entries().size(); ++i) CHECK(back.entries()[i].value == c2.entries()[i].value);

    Poly mixed = Poly::variable(3, 0) + Poly::variable(3, 1) * Poly::variable(3, 2);
    CHECK_THROWS_AS(polarize(su2, mixed), Error);
}

TEST_CASE("Reznikov pullback on su2") {
    const auto su2 = LieAlgebra::make("su2");
    const auto tr2 = sym_trace_poly(su2, 2);
    Rng rng(25);
    const auto r1 = reznikov_pullback(su2, 1, 32);
    const auto r2 = reznikov_pullback(su2, 2, 32);
    const auto r3 = reznikov_pullback(su2, 3, 32);
    double lo = 1e300, hi = -1e300;
    for (int t = 0; t < 100; ++t) {
        const Coords xi = float_coords(rng, 3, 3.0);
        CHECK(std::abs(r1.evaluate({xi}).to_complex()) < 1e-10);
        CHECK(std::abs(r3.evaluate({xi, xi, xi}).to_complex()) < 1e-10);
        // <xi, xi> = -2 tr(xi xi)
        const double lambda = r2.evaluate({xi, xi}).real() / (-2.0 * tr2.evaluate({xi, xi}).real());
        lo = std::min(lo, lambda);
        hi = std::max(hi, lambda);
    }
    CHECK((hi - lo) / std::abs(hi) < 1e-6);
    CHECK(lo == doctest::Approx(1.0 / 3).epsilon(1e-12));
    const auto inv = check_ad_invariance(r2, rng, 1000, 1e-9);
    CHECK_MESSAGE(inv.ok, inv.detail);
    CHECK(check_symmetry(r3, rng, 10).ok);
    CHECK_THROWS_AS(reznikov_pullback(su2, 2, 1), Error);
    CHECK_THROWS_AS(reznikov_pullback(LieAlgebra::make("u2"), 2, 8), Error);
}

TEST_CASE("polynomial specs") {
    const auto su2 = LieAlgebra::make("su2");
    CHECK(parse_poly_spec(su2, "chern:2").name() == "chern:2");
    CHECK(parse_poly_spec(su2, "symtrace:3").arity() == 3);
    CHECK(parse_poly_spec(su2, "reznikov:2:order=8").kind() == InvariantPolynomial::Kind::reznikov);
    CHECK_THROWS_AS(parse_poly_spec(su2, "chern"), Error);
    CHECK_THROWS_AS(parse_poly_spec(su2, "pontryagin:1"), Error);
    CHECK_THROWS_AS(parse_poly_spec(su2, "reznikov:2:order=x"), Error);
}
