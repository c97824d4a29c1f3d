#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "scw/kernels.hpp"

using namespace scw::kernels;

namespace {

struct Guard {
    ~Guard() { force_isa(std::nullopt); }
};

}  // namespace

TEST_CASE("weighted product sum: scalar and avx2 agree") {
    std::mt19937_64 rng(30);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 31u, 64u, 1000u, 2048u}) {
        std::vector<double> w(n), a(n), b(n), c(n);
        for (std::size_t q = 0; q < n; ++q) w[q] = u(rng), a[q] = u(rng), b[q] = u(rng), c[q] = u(rng);
        for (int k = 0; k <= 3; ++k) {
            std::vector<const double*> cols{a.data(), b.data(), c.data()};
            cols.resize(k);
            const double ref = scalar::weighted_product_sum(w, cols);
            double naive = 0;
            for (std::size_t q = 0; q < n; ++q) {
                double t = w[q];
                for (const double* col : cols) t *= col[q];
                naive += t;
            }
            CHECK(ref == doctest::Approx(naive).epsilon(1e-14));
            if (detected_isa() == Isa::avx2) {
                CHECK(std::abs(avx2::weighted_product_sum(w, cols) - ref) <= 1e-13 * (1.0 + std::abs(ref)) * (1.0 + n));
            }
        }
    }
}

TEST_CASE("batched evaluation: scalar and avx2 agree") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::vector<double> coeff{1.5, -2.0, 0.25, 3.0};
    const std::vector<std::uint8_t> exps{0, 0, 0, 1, 2, 1, 0, 3};  // 1.5 - 2 y + 0.25 x^2 y + 3 y^3
    const MonomialTable p{2, coeff, exps};
    for (std::size_t n : {1u, 4u, 5u, 17u, 256u}) {
        std::vector<double> x(n), y(n), ref(n), fast(n);
        for (std::size_t q = 0; q < n; ++q) x[q] = u(rng), y[q] = u(rng);
        const std::vector<const double*> pts{x.data(), y.data()};
        scalar::evaluate_batch(p, pts, ref);
        for (std::size_t q = 0; q < n; ++q)
            CHECK(ref[q] == doctest::Approx(1.5 - 2 * y[q] + 0.25 * x[q] * x[q] * y[q] + 3 * y[q] * y[q] * y[q]));
        if (detected_isa() == Isa::avx2) {
            avx2::evaluate_batch(p, pts, fast);
            for (std::size_t q = 0; q < n; ++q) CHECK(std::abs(fast[q] - ref[q]) < 1e-14);
        }
    }
}

TEST_CASE("dispatch honours forcing") {
    Guard guard;
    force_isa(Isa::scalar);
    CHECK(active_isa() == Isa::scalar);
    force_isa(std::nullopt);
    CHECK(active_isa() == detected_isa());
    force_isa(Isa::avx2);
    CHECK(active_isa() == detected_isa());
    MESSAGE("detected isa: " << std::string(isa_name(detected_isa())));
}
