// Built with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <vector>

#include "scw/kernels.hpp"

namespace scw::kernels::avx2 {

namespace {

double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

double weighted_product_sum(std::span<const double> w, std::span<const double* const> cols) {
    const std::size_t n = w.size();
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    std::size_t q = 0;
    for (; q + 8 <= n; q += 8) {
        __m256d t0 = _mm256_loadu_pd(w.data() + q);
        __m256d t1 = _mm256_loadu_pd(w.data() + q + 4);
        for (const double* c : cols) {
            t0 = _mm256_mul_pd(t0, _mm256_loadu_pd(c + q));
            t1 = _mm256_mul_pd(t1, _mm256_loadu_pd(c + q + 4));
        }
        acc0 = _mm256_add_pd(acc0, t0);
        acc1 = _mm256_add_pd(acc1, t1);
    }
    for (; q + 4 <= n; q += 4) {
        __m256d t = _mm256_loadu_pd(w.data() + q);
        for (const double* c : cols) t = _mm256_mul_pd(t, _mm256_loadu_pd(c + q));
        acc0 = _mm256_add_pd(acc0, t);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; q < n; ++q) {
        double t = w[q];
        for (const double* c : cols) t *= c[q];
        acc += t;
    }
    return acc;
}

void evaluate_batch(const MonomialTable& p, std::span<const double* const> x, std::span<double> out) {
    const std::size_t n = out.size();
    const std::size_t nterms = p.coeff.size();
    std::size_t q = 0;
    for (; q + 4 <= n; q += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t t = 0; t < nterms; ++t) {
            __m256d term = _mm256_set1_pd(1.0);
            for (int v = 0; v < p.nvars; ++v) {
                const int e = p.exps[t * p.nvars + v];
                if (e == 0) continue;
                const __m256d xv = _mm256_loadu_pd(x[v] + q);
                for (int k = 0; k < e; ++k) term = _mm256_mul_pd(term, xv);
            }
            acc = _mm256_fmadd_pd(_mm256_set1_pd(p.coeff[t]), term, acc);
        }
        _mm256_storeu_pd(out.data() + q, acc);
    }
    if (q < n) {
        std::vector<const double*> tail(x.begin(), x.end());
        for (auto& ptr : tail) ptr += q;
        scalar::evaluate_batch(p, tail, out.subspan(q));
    }
}

}  // namespace scw::kernels::avx2
