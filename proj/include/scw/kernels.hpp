#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

// Float kernels behind the quadrature paths. Each has a portable scalar
// reference and an AVX2+FMA variant picked at runtime.

namespace scw::kernels {

enum class Isa { scalar, avx2 };

/// Best ISA supported by this CPU and build.
Isa detected_isa();
/// The ISA dispatch currently uses (detected unless forced).
Isa active_isa();
/// Pin dispatch to one ISA; nullopt restores detection. Not thread-safe.
void force_isa(std::optional<Isa> isa);
const char* isa_name(Isa isa);

/// Real polynomial as flat term arrays: term t is coeff[t] * prod_v x_v^exps[t * nvars + v].
struct MonomialTable {
    int nvars = 0;
    std::span<const double> coeff;
    std::span<const std::uint8_t> exps;
};

/// sum_q w[q] * prod_j cols[j][q].
double weighted_product_sum(std::span<const double> w, std::span<const double* const> cols);

/// out[q] = p(x_0[q], .., x_{nvars-1}[q]) for points in structure-of-arrays form.
void evaluate_batch(const MonomialTable& p, std::span<const double* const> x, std::span<double> out);

namespace scalar {
double weighted_product_sum(std::span<const double> w, std::span<const double* const> cols);
void evaluate_batch(const MonomialTable& p, std::span<const double* const> x, std::span<double> out);
}  // namespace scalar

namespace avx2 {
double weighted_product_sum(std::span<const double> w, std::span<const double* const> cols);
void evaluate_batch(const MonomialTable& p, std::span<const double* const> x, std::span<double> out);
}  // namespace avx2

}  // namespace scw::kernels
