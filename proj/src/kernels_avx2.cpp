// AVX2 variants of the batch kernels. Four points per iteration, remainder
// delegated to the scalar reference. Per-lane operation order matches the
// scalar loops so results are bit-identical; only mul/add/sub/max/cmp are
// used (no FMA).

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include "moead/kernels.hpp"

namespace moead::kernels::detail {

namespace {

SoaView tail_view(const SoaView& pts, std::size_t offset) {
    SoaView t;
    t.m = pts.m;
    t.n = pts.n - offset;
    for (int j = 0; j < pts.m; ++j) t.cols[j] = pts.cols[j] + offset;
    return t;
}

inline __m256d abs_pd(__m256d x) {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
}

inline void write_flags(std::uint8_t* out, int leq_mask, int geq_mask) {
    for (int k = 0; k < 4; ++k) {
        out[k] = static_cast<std::uint8_t>(((leq_mask >> k) & 1) |
                                           (((geq_mask >> k) & 1) << 1));
    }
}

}  // namespace

void avx2_dominance_flags(const SoaView& pts,
                                                          const double* query,
                                                          std::uint8_t* out) {
    const std::size_t n4 = pts.n & ~std::size_t{3};
    __m256d q[3];
    for (int j = 0; j < pts.m; ++j) q[j] = _mm256_set1_pd(query[j]);

    std::size_t i = 0;
    for (; i < n4; i += 4) {
        __m256d leq = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
        __m256d geq = leq;
        for (int j = 0; j < pts.m; ++j) {
            const __m256d p = _mm256_loadu_pd(pts.cols[j] + i);
            leq = _mm256_and_pd(leq, _mm256_cmp_pd(p, q[j], _CMP_LE_OQ));
            geq = _mm256_and_pd(geq, _mm256_cmp_pd(q[j], p, _CMP_LE_OQ));
        }
        write_flags(out + i, _mm256_movemask_pd(leq), _mm256_movemask_pd(geq));
    }
    if (i < pts.n) scalar_dominance_flags(tail_view(pts, i), query, out + i);
}

void avx2_squared_distances(const SoaView& pts,
                                                            const double* query,
                                                            double* out) {
    const std::size_t n4 = pts.n & ~std::size_t{3};
    __m256d q[3];
    for (int j = 0; j < pts.m; ++j) q[j] = _mm256_set1_pd(query[j]);

    std::size_t i = 0;
    for (; i < n4; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(pts.cols[0] + i), q[0]);
        __m256d acc = _mm256_mul_pd(d, d);
        for (int j = 1; j < pts.m; ++j) {
            d = _mm256_sub_pd(_mm256_loadu_pd(pts.cols[j] + i), q[j]);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
        }
        _mm256_storeu_pd(out + i, acc);
    }
    if (i < pts.n) scalar_squared_distances(tail_view(pts, i), query, out + i);
}

void avx2_tchebycheff_scores(const SoaView& pts,
                                                             const double* weight,
                                                             const double* ideal,
                                                             double* out) {
    const std::size_t n4 = pts.n & ~std::size_t{3};
    __m256d w[3];
    __m256d z[3];
    for (int j = 0; j < pts.m; ++j) {
        w[j] = _mm256_set1_pd(weight[j]);
        z[j] = _mm256_set1_pd(ideal[j]);
    }

    std::size_t i = 0;
    for (; i < n4; i += 4) {
        __m256d diff = abs_pd(_mm256_sub_pd(_mm256_loadu_pd(pts.cols[0] + i), z[0]));
        __m256d best = _mm256_mul_pd(w[0], diff);
        for (int j = 1; j < pts.m; ++j) {
            diff = abs_pd(_mm256_sub_pd(_mm256_loadu_pd(pts.cols[j] + i), z[j]));
            best = _mm256_max_pd(best, _mm256_mul_pd(w[j], diff));
        }
        _mm256_storeu_pd(out + i, best);
    }
    if (i < pts.n) scalar_tchebycheff_scores(tail_view(pts, i), weight, ideal, out + i);
}

}  // namespace moead::kernels::detail

#endif  // x86
