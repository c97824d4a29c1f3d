#include "scw/kernels.hpp"

namespace scw::kernels::scalar {

double weighted_product_sum(std::span<const double> w, std::span<const double* const> cols) {
    double acc = 0.0;
    for (std::size_t q = 0; q < w.size(); ++q) {
        double term = w[q];
        for (const double* c : cols) term *= c[q];
        acc += term;
    }
    return acc;
}

void evaluate_batch(const MonomialTable& p, std::span<const double* const> x, std::span<double> out) {
    const std::size_t nterms = p.coeff.size();
    for (std::size_t q = 0; q < out.size(); ++q) {
        double acc = 0.0;
        for (std::size_t t = 0; t < nterms; ++t) {
            double term = p.coeff[t];
            for (int v = 0; v < p.nvars; ++v)
                for (int e = p.exps[t * p.nvars + v]; e > 0; --e) term *= x[v][q];
            acc += term;
        }
        out[q] = acc;
    }
}

}  // namespace scw::kernels::scalar
