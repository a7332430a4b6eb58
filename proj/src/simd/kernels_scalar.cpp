#include "wedgeflow/simd/kernels.hpp"

namespace wedgeflow::simd {

// Per-element operation sequence is the contract: the AVX2 variant mirrors
// it exactly (same multiplies, same clamp), keeping outputs bit-identical.

void bump_weighted_scalar(const BumpSpec& b, BumpPart part, const double* x,
                          const double* y, const double* qw, double* out,
                          std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        const double sx = (x[i] - b.cx) * b.inv_rx;
        const double sy = (y[i] - b.cy) * b.inv_ry;
        double tx = 1.0 - sx * sx;
        tx = tx > 0.0 ? tx : 0.0;
        double ty = 1.0 - sy * sy;
        ty = ty > 0.0 ? ty : 0.0;
        const double tx2 = tx * tx;
        const double ty2 = ty * ty;
        const double bx = tx2 * tx;
        const double by = ty2 * ty;
        double v;
        switch (part) {
            case BumpPart::value: v = bx * by; break;
            case BumpPart::ddx:   v = (-6.0 * sx) * tx2 * b.inv_rx * by; break;
            default:              v = bx * ((-6.0 * sy) * ty2 * b.inv_ry); break;
        }
        out[i] = qw[i] * v;
    }
}

void sector_scale_scalar(double sigma, double up, double down, const double* x,
                         const double* y, double* io, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        io[i] *= (sigma * x[i] < y[i]) ? up : down;
    }
}

}  // namespace wedgeflow::simd
