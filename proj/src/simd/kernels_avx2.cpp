#include "wedgeflow/simd/kernels.hpp"

#ifdef WEDGEFLOW_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace wedgeflow::simd {

// Mirrors kernels_scalar.cpp operation by operation; remainders fall through
// to the scalar reference so every element sees the same instruction mix.

void bump_weighted_avx2(const BumpSpec& b, BumpPart part, const double* x,
                        const double* y, const double* qw, double* out,
                        std::size_t n)
{
    const __m256d cx = _mm256_set1_pd(b.cx);
    const __m256d cy = _mm256_set1_pd(b.cy);
    const __m256d irx = _mm256_set1_pd(b.inv_rx);
    const __m256d iry = _mm256_set1_pd(b.inv_ry);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d msix = _mm256_set1_pd(-6.0);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        const __m256d yv = _mm256_loadu_pd(y + i);
        const __m256d sx = _mm256_mul_pd(_mm256_sub_pd(xv, cx), irx);
        const __m256d sy = _mm256_mul_pd(_mm256_sub_pd(yv, cy), iry);
        const __m256d tx = _mm256_max_pd(_mm256_sub_pd(one, _mm256_mul_pd(sx, sx)), zero);
        const __m256d ty = _mm256_max_pd(_mm256_sub_pd(one, _mm256_mul_pd(sy, sy)), zero);
        const __m256d tx2 = _mm256_mul_pd(tx, tx);
        const __m256d ty2 = _mm256_mul_pd(ty, ty);
        const __m256d bx = _mm256_mul_pd(tx2, tx);
        const __m256d by = _mm256_mul_pd(ty2, ty);
        __m256d v;
        switch (part) {
            case BumpPart::value:
                v = _mm256_mul_pd(bx, by);
                break;
            case BumpPart::ddx:
                v = _mm256_mul_pd(
                    _mm256_mul_pd(_mm256_mul_pd(_mm256_mul_pd(msix, sx), tx2), irx), by);
                break;
            default:
                v = _mm256_mul_pd(
                    bx, _mm256_mul_pd(_mm256_mul_pd(_mm256_mul_pd(msix, sy), ty2), iry));
                break;
        }
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(qw + i), v));
    }
    if (i < n) bump_weighted_scalar(b, part, x + i, y + i, qw + i, out + i, n - i);
}

void sector_scale_avx2(double sigma, double up, double down, const double* x,
                       const double* y, double* io, std::size_t n)
{
    const __m256d sg = _mm256_set1_pd(sigma);
    const __m256d upv = _mm256_set1_pd(up);
    const __m256d dnv = _mm256_set1_pd(down);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        const __m256d yv = _mm256_loadu_pd(y + i);
        const __m256d mask = _mm256_cmp_pd(_mm256_mul_pd(sg, xv), yv, _CMP_LT_OQ);
        const __m256d sel = _mm256_blendv_pd(dnv, upv, mask);
        _mm256_storeu_pd(io + i, _mm256_mul_pd(_mm256_loadu_pd(io + i), sel));
    }
    if (i < n) sector_scale_scalar(sigma, up, down, x + i, y + i, io + i, n - i);
}

}  // namespace wedgeflow::simd

#endif  // WEDGEFLOW_HAVE_AVX2_KERNELS
