#include "scw/kernels.hpp"

namespace scw::kernels {

namespace {

std::optional<Isa> forced;

}  // namespace

Isa detected_isa() {
#if defined(SCW_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    static const bool has = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    if (has) return Isa::avx2;
#endif
    return Isa::scalar;
}

Isa active_isa() { return forced.value_or(detected_isa()); }

void force_isa(std::optional<Isa> isa) {
    if (isa == Isa::avx2 && detected_isa() != Isa::avx2) isa = Isa::scalar;
    forced = isa;
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

double weighted_product_sum(std::span<const double> w, std::span<const double* const> cols) {
#ifdef SCW_HAVE_AVX2
    if (active_isa() == Isa::avx2) return avx2::weighted_product_sum(w, cols);
#endif
    return scalar::weighted_product_sum(w, cols);
}

void evaluate_batch(const MonomialTable& p, std::span<const double* const> x, std::span<double> out) {
#ifdef SCW_HAVE_AVX2
    if (active_isa() == Isa::avx2) return avx2::evaluate_batch(p, x, out);
#endif
    scalar::evaluate_batch(p, x, out);
}

}  // namespace scw::kernels
