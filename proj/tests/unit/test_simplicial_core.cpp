#include <Eigen/Dense>

#include "doctest.h"
#include "scw/chains.hpp"
#include "scw/error.hpp"
#include "scw/product.hpp"
#include "scw/sampling.hpp"

using namespace scw;

namespace {

// Rank oracle independent of the exact elimination: floating full-pivot LU.
int float_rank(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::MatrixXd a(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) a(r, c) = m(r, c).get_d();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    lu.setThreshold(1e-9);
    return static_cast<int>(lu.rank());
}

std::vector<int> oracle_betti(const SimplicialSet& x) {
    std::vector<int> out;
    for (int k = 0; k <= x.max_dim(); ++k) {
        const int rk = k >= 1 ? float_rank(boundary_operator(x, k)) : 0;
        const int rk1 = float_rank(boundary_operator(x, k + 1));
        out.push_back(x.count(k) - rk - rk1);
    }
    return out;
}

Cochain random_cochain(Rng& rng, const SimplicialSet& x, int k) {
    Cochain c = Cochain::zero(x, k);
    for (auto& v : c.values) v = Scalar(random_rational(rng));
    return c;
}

Chain random_chain(Rng& rng, const SimplicialSet& x, int k) {
    Chain c{k, std::vector<Scalar>(x.count(k))};
    for (auto& v : c.coeffs) v = Scalar(random_rational(rng));
    return c;
}

}  // namespace

TEST_CASE("standard simplex counts") {
    CHECK(standard_simplex(0)->counts() == std::vector<int>{1});
    CHECK(standard_simplex(2)->counts() == std::vector<int>{3, 3, 1});
    CHECK(standard_simplex(3)->counts() == std::vector<int>{4, 6, 4, 1});
}

TEST_CASE("boundary sphere counts") {
    CHECK(boundary_sphere(1)->counts() == std::vector<int>{3, 3});
    CHECK(boundary_sphere(2)->counts() == std::vector<int>{4, 6, 4});
    CHECK(boundary_sphere(3)->counts() == std::vector<int>{5, 10, 10, 5});
}

TEST_CASE("two disk sphere") {
    auto s = two_disk_sphere();
    CHECK(s->counts() == std::vector<int>{3, 3, 2});
    CHECK(betti_numbers(*s, 2) == std::vector<int>{1, 0, 1});
    CHECK(oracle_betti(*s) == std::vector<int>{1, 0, 1});
    Chain fundamental{2, {Scalar(1), Scalar(-1)}};
    CHECK(boundary(*s, fundamental) == Chain{1, std::vector<Scalar>(3)});
    int euler = 0;
    for (int d = 0; d <= 2; ++d) euler += (d % 2 ? -1 : 1) * s->count(d);
    CHECK(euler == 2);
    CHECK(rank(boundary_operator(*s, 2)) == 1);
    CHECK(float_rank(boundary_operator(*s, 2)) == rank(boundary_operator(*s, 2)));
}

TEST_CASE("horns") {
    auto h = horn(2, 1);
    CHECK(h.horn->counts() == std::vector<int>{3, 2});
    CHECK(h.horn->find({0, 1}).has_value());
    CHECK(h.horn->find({1, 2}).has_value());
    CHECK_FALSE(h.horn->find({0, 2}).has_value());

    auto h10 = horn(1, 0);
    CHECK(h10.horn->counts() == std::vector<int>{1});
    CHECK(h10.horn->vertices_of({0, 0}) == std::vector<int>{0});

    auto h30 = horn(3, 0);
    CHECK(h30.horn->count(2) == 3);
    CHECK_FALSE(h30.horn->find({1, 2, 3}).has_value());

    CHECK_THROWS_AS(horn(2, 3), Error);
    try {
        horn(1, 2);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_horn);
    }
}

TEST_CASE("boundary operator") {
    auto s = boundary_sphere(2);
    CHECK((boundary_operator(*s, 1) * boundary_operator(*s, 2)).is_zero());
    auto edge = standard_simplex(1);
    Chain e{1, {Scalar(1)}};
    CHECK(boundary(*edge, e) == Chain{0, {Scalar(-1), Scalar(1)}});
    for (int n = 1; n <= 4; ++n) {
        auto b = boundary_sphere(n);
        for (int k = 2; k <= b->max_dim(); ++k)
            CHECK((boundary_operator(*b, k - 1) * boundary_operator(*b, k)).is_zero());
    }
}

TEST_CASE("betti numbers against the rank oracle") {
    CHECK(betti_numbers(*boundary_sphere(2), 2) == std::vector<int>{1, 0, 1});
    CHECK(oracle_betti(*boundary_sphere(2)) == std::vector<int>{1, 0, 1});
    CHECK(betti_numbers(*boundary_sphere(3), 3) == std::vector<int>{1, 0, 0, 1});
    CHECK(oracle_betti(*boundary_sphere(3)) == std::vector<int>{1, 0, 0, 1});
    for (int n = 0; n <= 4; ++n) {
        std::vector<int> expect(n + 1, 0);
        expect[0] = 1;
        CHECK(betti_numbers(*standard_simplex(n), n) == expect);
    }
}

TEST_CASE("coboundary") {
    Rng rng(11);
    auto s = boundary_sphere(2);
    Cochain one{0, std::vector<Scalar>(4, Scalar(1))};
    CHECK(coboundary(*s, one).is_zero());
    for (int t = 0; t < 100; ++t) {
        const int k = t % 2;
        CHECK(coboundary(*s, coboundary(*s, random_cochain(rng, *s, k))).is_zero());
    }
    for (int t = 0; t < 20; ++t) {
        const int k = 1 + t % 2;
        Cochain c = random_cochain(rng, *s, k - 1);
        Chain z = random_chain(rng, *s, k);
        CHECK(pairing(coboundary(*s, c), z) == pairing(c, boundary(*s, z)));
    }
}

TEST_CASE("is_coboundary") {
    Rng rng(12);
    auto s = boundary_sphere(2);
    for (int t = 0; t < 10; ++t) {
        Cochain c = coboundary(*s, random_cochain(rng, *s, 1));
        auto r = is_coboundary(*s, c);
        REQUIRE(r.solvable());
        CHECK(coboundary(*s, *r.witness) == c);
    }
    Cochain gen = Cochain::zero(*s, 2);
    gen.values[0] = Scalar(1);
    auto r = is_coboundary(*s, gen);
    REQUIRE_FALSE(r.solvable());
    REQUIRE(r.certificate);
    CHECK(boundary(*s, *r.certificate) == Chain{1, std::vector<Scalar>(6)});
    CHECK_FALSE(pairing(gen, *r.certificate).is_zero());
    const auto basis = homology_basis(*s, 2);
    REQUIRE(basis.size() == 1);
    CHECK(r.certificate->coeffs == basis[0].coeffs);

    auto zero = is_coboundary(*s, Cochain::zero(*s, 1));
    REQUIRE(zero.solvable());
    CHECK(zero.witness->is_zero());

    // two components: a nonzero 0-cochain that is constant on components is not d of anything
    auto pts = std::make_shared<const SimplicialSet>(SimplicialSet::from_complex({{0}, {1}}));
    auto r0 = is_coboundary(*pts, Cochain{0, {Scalar(1), Scalar(0)}});
    CHECK_FALSE(r0.solvable());
    CHECK(r0.certificate.has_value());
}

TEST_CASE("product with the interval") {
    auto p0 = product_with_interval(standard_simplex(0));
    CHECK(p0.product->counts() == std::vector<int>{2, 1});
    CHECK(p0.i0.image({0, 0}) != p0.i1.image({0, 0}));
    p0.i0.validate();
    p0.i1.validate();

    auto p1 = product_with_interval(standard_simplex(1));
    CHECK(p1.product->count(2) == 2);
    CHECK(p1.product->counts() == std::vector<int>{4, 5, 2});

    auto s = two_disk_sphere();
    auto ps = product_with_interval(s);
    ps.product->validate();
    CHECK(betti_numbers(*ps.product, 3) == betti_numbers(*s, 3));
    CHECK(oracle_betti(*ps.product) == std::vector<int>{1, 0, 1, 0});
    ps.projection.validate();
    ps.to_interval.validate();
}

TEST_CASE("chain maps commute with the boundary") {
    Rng rng(13);
    auto ps = product_with_interval(boundary_sphere(2));
    for (const auto* f : {&ps.i0, &ps.i1, &ps.projection}) {
        f->validate();
        for (int k = 1; k <= f->source()->max_dim(); ++k) {
            Chain z = random_chain(rng, *f->source(), k);
            CHECK(push_chain(*f, boundary(*f->source(), z)) == boundary(*f->target(), push_chain(*f, z)));
        }
    }
}

TEST_CASE("homotopic end inclusions agree in cohomology") {
    Rng rng(14);
    auto x = boundary_sphere(2);
    auto ps = product_with_interval(x);
    for (int k = 1; k <= 2; ++k) {
        // closed k-cochains on the product: coboundaries plus a cocycle found from the kernel
        Cochain c = coboundary(*ps.product, random_cochain(rng, *ps.product, k - 1));
        if (k == 2) c += pullback_cochain(ps.projection, Cochain{2, {Scalar(1), Scalar(0), Scalar(0), Scalar(0)}});
        REQUIRE(coboundary(*ps.product, c).is_zero());
        const Cochain diff = pullback_cochain(ps.i0, c) - pullback_cochain(ps.i1, c);
        CHECK(is_coboundary(*x, diff).solvable());
    }
}

TEST_CASE("serialization round trip") {
    for (const auto& s : {standard_simplex(3), boundary_sphere(2), two_disk_sphere(),
                          product_with_interval(two_disk_sphere()).product}) {
        const std::string text = s->serialize();
        const SimplicialSet back = SimplicialSet::parse(text);
        CHECK(back == *s);
        CHECK(back.serialize() == text);
    }
    CHECK_THROWS_AS(SimplicialSet::parse("simplicial-set v1\ndim 0: 1\nface 1.0 0 -> 0.0\n"), ParseError);
}

TEST_CASE("validator rejects a broken face table") {
    SimplicialSet x = *standard_simplex(2);
    x.set_face({2, 0}, 0, Simplex::of({1, 0}));
    CHECK_THROWS_AS(x.validate(), Error);
}
